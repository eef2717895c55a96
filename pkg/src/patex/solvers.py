"""Exact solvers and tiny-instance minimization oracles.

lss_exact / lsm_exact find the longest pattern-avoiding subsequence /
submatrix by depth-first branch and bound over keep/drop decisions with
the bound kept + remaining.  No polynomial algorithm is known for any of
these problems, so the worst case is exponential; every entry point takes
a node budget and raises BudgetExceededError rather than approximating.

ss_oracle / sm_oracle minimize over all instances of a given size.  The
sequence oracle enumerates restricted growth strings (one canonical
representative per isomorphism class — the objective is isomorphism
invariant); the matrix oracle enumerates all placements with no all-zero
row or column, which is exhaustive because empty rows and columns never
affect containment.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterator

from patex._backend import kernels
from patex.constructions import all_ones
from patex.errors import BudgetExceededError, PreconditionError
from patex.matrices import BitMatrix
from patex.sequences import Sequence, alternation, as_sequence, normalize

DEFAULT_NODE_BUDGET = 500_000_000
SS_ORACLE_LIMIT = 10
SM_ORACLE_LIMIT = 5


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one exact solve: optimum, an optimal witness (retained
    positions or retained ones, lexicographically smallest), node count,
    and wall time in seconds."""

    value: int
    witness: tuple
    nodes: int
    elapsed: float


@dataclass(frozen=True)
class OracleResult:
    """Outcome of an instance-minimization oracle: the minimum value, one
    minimizer (first in enumeration order), total nodes, wall time."""

    value: int
    argmin: Sequence | BitMatrix
    nodes: int
    elapsed: float


def _lss_raw(letters, pattern_letters, budget):
    status, value, pos, nodes = kernels.lss_search(letters, pattern_letters, budget)
    if status:
        raise BudgetExceededError(f"lss node budget {budget} exceeded", nodes=nodes)
    return value, pos, nodes


def lss_exact(u, v, budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Length of the longest v-free subsequence of u, with witness positions."""
    host = as_sequence(u)
    pat = normalize(v)
    if len(pat) == 0:
        raise PreconditionError("forbidden sequence pattern must be nonempty")
    start = time.perf_counter()
    value, pos, nodes = _lss_raw(list(host.letters), list(pat.letters), budget)
    return SolveResult(value, pos, nodes, time.perf_counter() - start)


def lsm_exact(a: BitMatrix, p: BitMatrix, budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Most ones in a P-avoiding matrix obtained from a by clearing ones.

    The witness is the retained coordinate list.
    """
    if p.one_count == 0:
        raise PreconditionError("forbidden matrix pattern must have at least one one")
    start = time.perf_counter()
    status, value, sel, nodes = kernels.lsm_search(
        a.rows,
        a.cols,
        [r for r, _ in a.ones],
        [c for _, c in a.ones],
        p.rows,
        p.cols,
        [r for r, _ in p.ones],
        [c for _, c in p.ones],
        budget,
    )
    if status:
        raise BudgetExceededError(f"lsm node budget {budget} exceeded", nodes=nodes)
    witness = tuple(a.ones[i] for i in sel)
    return SolveResult(value, witness, nodes, time.perf_counter() - start)


def ex_exact(n: int, p: BitMatrix, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Maximum ones in an n x n matrix avoiding p (exact, branch and bound).

    Raises BudgetExceededError when the instance is too large for the node
    budget — never returns an approximation.
    """
    if n < 1:
        raise PreconditionError("ex_exact needs n >= 1")
    if p.one_count == 0:
        raise PreconditionError("forbidden matrix pattern must have at least one one")
    return lsm_exact(all_ones(n, n), p, budget=budget).value


def restricted_growth_strings(m: int) -> Iterator[tuple[int, ...]]:
    """All normalized sequences of length m in lexicographic order.

    A tuple u qualifies iff u[0] == 0 and u[i] <= max(u[:i]) + 1; these are
    exactly the canonical representatives of the isomorphism classes.
    """
    if m < 0:
        raise PreconditionError("length must be >= 0")
    if m == 0:
        yield ()
        return
    buf = [0] * m

    def rec(i, mx):
        if i == m:
            yield tuple(buf)
            return
        for val in range(mx + 2):
            buf[i] = val
            yield from rec(i + 1, mx if val <= mx else val)

    yield from rec(1, 0)


def matrices_with_ones(m: int) -> Iterator[BitMatrix]:
    """All matrices with exactly m ones, no all-zero row or column, and at
    most m rows and columns, in lexicographic (rows, cols, placement) order."""
    if m < 1:
        raise PreconditionError("need at least one one")
    for r in range(1, m + 1):
        full_r = (1 << r) - 1
        for c in range(1, m + 1):
            if r * c < m:
                continue
            full_c = (1 << c) - 1
            for combo in itertools.combinations(range(r * c), m):
                rmask = 0
                cmask = 0
                for cell in combo:
                    rmask |= 1 << (cell // c)
                    cmask |= 1 << (cell % c)
                if rmask == full_r and cmask == full_c:
                    yield BitMatrix(r, c, tuple((cell // c, cell % c) for cell in combo))


def ss_oracle(
    m: int,
    v,
    limit: int = SS_ORACLE_LIMIT,
    budget: int = DEFAULT_NODE_BUDGET,
) -> OracleResult:
    """Minimum of lss_exact(u, v) over all sequences u of length m.

    Enumerates one representative per isomorphism class; the argmin is the
    lexicographically smallest canonical minimizer.
    """
    if m < 0:
        raise PreconditionError("length must be >= 0")
    if m > limit:
        raise BudgetExceededError(f"ss_oracle limit {limit} exceeded (m={m})")
    pat = normalize(v)
    if len(pat) == 0:
        raise PreconditionError("forbidden sequence pattern must be nonempty")
    pat_letters = list(pat.letters)
    start = time.perf_counter()
    best = None
    best_u = None
    total_nodes = 0
    for letters in restricted_growth_strings(m):
        value, _, nodes = _lss_raw(list(letters), pat_letters, budget)
        total_nodes += nodes
        if best is None or value < best:
            best = value
            best_u = letters
            if best == 0:
                break
    return OracleResult(best, Sequence(best_u), total_nodes, time.perf_counter() - start)


def sm_oracle(
    m: int,
    p: BitMatrix,
    limit: int = SM_ORACLE_LIMIT,
    budget: int = DEFAULT_NODE_BUDGET,
) -> OracleResult:
    """Minimum of lsm_exact(a, p) over all matrices a with m ones.

    Containment is order-sensitive, so no row/column permutation symmetry
    is applied; the argmin is the first minimizer in enumeration order.
    """
    if m < 1:
        raise PreconditionError("need at least one one")
    if m > limit:
        raise BudgetExceededError(f"sm_oracle limit {limit} exceeded (m={m})")
    if p.one_count == 0:
        raise PreconditionError("forbidden matrix pattern must have at least one one")
    prows = [r for r, _ in p.ones]
    pcols = [c for _, c in p.ones]
    start = time.perf_counter()
    best = None
    best_a = None
    total_nodes = 0
    for a in matrices_with_ones(m):
        status, value, _, nodes = kernels.lsm_search(
            a.rows,
            a.cols,
            [r for r, _ in a.ones],
            [c for _, c in a.ones],
            p.rows,
            p.cols,
            prows,
            pcols,
            budget,
        )
        if status:
            raise BudgetExceededError(f"lsm node budget {budget} exceeded", nodes=nodes)
        total_nodes += nodes
        if best is None or value < best:
            best = value
            best_a = a
            if best == 0:
                break
    return OracleResult(best, best_a, total_nodes, time.perf_counter() - start)


def lsp_upper(u, k: int, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Certified upper bound on the longest subsequence of u realizable by
    degree-<=k polynomials: the longest subsequence avoiding the alternation
    of length k + 2 (two degree-k polynomials cross at most k times)."""
    if k < 1:
        raise PreconditionError("degree bound k must be >= 1")
    return lss_exact(u, alternation(k + 2), budget=budget).value
