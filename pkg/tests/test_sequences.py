import pytest
from hypothesis import given
from hypothesis import strategies as st

from patex.errors import PreconditionError
from patex.sequences import (
    Sequence,
    alternation,
    as_sequence,
    format_sequence,
    is_isomorphic,
    normalize,
    parse_sequence,
)

letters_lists = st.lists(st.integers(min_value=0, max_value=5), max_size=12)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("b a b a", (0, 1, 0, 1)),
        ("", ()),
        ("x x y", (0, 0, 1)),
    ],
)
def test_normalize_examples(text, expected):
    assert normalize(parse_sequence(text)).letters == expected


def test_parse_compact_form_matches_spaced():
    assert parse_sequence("abab").letters == parse_sequence("a b a b").letters


def test_parse_format_roundtrip():
    u = parse_sequence("q w q e r q")
    assert parse_sequence(format_sequence(u)).letters == normalize(u).letters


@given(letters_lists)
def test_normalize_idempotent(xs):
    once = normalize(Sequence(tuple(xs)))
    assert normalize(once).letters == once.letters


@given(letters_lists)
def test_normalized_labels_are_dense(xs):
    u = normalize(Sequence(tuple(xs)))
    assert sorted(set(u.letters)) == list(range(u.distinct))
    seen = []
    for x in u.letters:
        if x not in seen:
            seen.append(x)
    assert seen == list(range(u.distinct))


@pytest.mark.parametrize(
    "u,v,expected",
    [
        ("abab", "cdcd", True),
        ("aab", "aba", False),
        ("a", "", False),
    ],
)
def test_is_isomorphic_examples(u, v, expected):
    assert is_isomorphic(parse_sequence(u), parse_sequence(v)) is expected


@given(letters_lists, st.permutations(list(range(6))))
def test_isomorphism_invariant_under_relabeling(xs, perm):
    relabeled = Sequence(tuple(perm[x] for x in xs))
    assert is_isomorphic(Sequence(tuple(xs)), relabeled)


@pytest.mark.parametrize(
    "n,expected",
    [(4, (0, 1, 0, 1)), (1, (0,)), (0, ()), (5, (0, 1, 0, 1, 0))],
)
def test_alternation(n, expected):
    assert alternation(n).letters == expected


def test_alternation_negative_rejected():
    with pytest.raises(PreconditionError):
        alternation(-1)


def test_negative_letters_rejected():
    with pytest.raises(PreconditionError):
        Sequence((0, -1))


def test_as_sequence_accepts_iterables_and_strings():
    assert as_sequence([2, 2, 3]).letters == (2, 2, 3)
    assert as_sequence("aab").letters == (0, 0, 1)
