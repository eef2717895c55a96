"""patex: extremal functions for forbidden patterns.

Exact solvers, instance oracles, extremal constructions, constructive
lower-bound extractors, and polynomial lower envelopes, with a CLI
(`patex`) and an experiment sweep harness.  The hot search kernels run on
a compiled backend when available; set PATEX_PURE=1 to force the
pure-Python fallback.
"""

from patex._backend import backend_name
from patex.constructions import (
    all_ones,
    block_sequence,
    column,
    corner_join,
    diagonal,
    four_forcing_patterns,
    insert_column,
    l_shape,
    pattern_from_sequence,
    row,
    upper_construction_allones,
)
from patex.containment import (
    MatOccurrence,
    SeqOccurrence,
    count_pattern_copies,
    mat_contains,
    seq_contains,
)
from patex.envelopes import (
    EnvelopeSequence,
    Polynomial,
    envelope_sequence,
    lower_envelope,
    realizable_extract,
    realize_lines,
    verify_envelope,
)
from patex.errors import (
    BudgetExceededError,
    DegenerateInputError,
    PatexError,
    PreconditionError,
    ToleranceError,
)
from patex.extractors import (
    ExtractReport,
    alternate_thinning,
    dichotomy_extract,
    erdos_szekeres_extract,
    probabilistic_extract,
    sequence_to_matrix,
)
from patex.matrices import BitMatrix, format_matrix, parse_matrix
from patex.sequences import (
    Sequence,
    alternation,
    format_sequence,
    is_isomorphic,
    normalize,
    parse_sequence,
)
from patex.solvers import (
    OracleResult,
    SolveResult,
    ex_exact,
    lsm_exact,
    lsp_upper,
    lss_exact,
    sm_oracle,
    ss_oracle,
)
from patex.sweeps import (
    FitResult,
    SweepRecord,
    fit_exponent,
    report,
    sweep_sm_allones,
    sweep_ss_block,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BudgetExceededError",
    "DegenerateInputError",
    "EnvelopeSequence",
    "ExtractReport",
    "FitResult",
    "MatOccurrence",
    "OracleResult",
    "PatexError",
    "Polynomial",
    "PreconditionError",
    "SeqOccurrence",
    "Sequence",
    "SolveResult",
    "SweepRecord",
    "ToleranceError",
    "all_ones",
    "alternate_thinning",
    "alternation",
    "backend_name",
    "block_sequence",
    "column",
    "corner_join",
    "count_pattern_copies",
    "diagonal",
    "dichotomy_extract",
    "envelope_sequence",
    "erdos_szekeres_extract",
    "ex_exact",
    "fit_exponent",
    "format_matrix",
    "format_sequence",
    "four_forcing_patterns",
    "insert_column",
    "is_isomorphic",
    "l_shape",
    "lower_envelope",
    "lsm_exact",
    "lsp_upper",
    "lss_exact",
    "mat_contains",
    "normalize",
    "parse_matrix",
    "parse_sequence",
    "pattern_from_sequence",
    "probabilistic_extract",
    "realizable_extract",
    "realize_lines",
    "report",
    "row",
    "seq_contains",
    "sequence_to_matrix",
    "sm_oracle",
    "ss_oracle",
    "sweep_sm_allones",
    "sweep_ss_block",
    "upper_construction_allones",
    "verify_envelope",
]
