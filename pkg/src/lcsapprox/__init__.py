"""Approximate longest common subsequence over constant-size alphabets.

Exact quadratic oracles, a banded exact edit distance, the binary strategy
portfolio for unequal-length pairs, alphabet reduction, and the equal-length
k-ary solver, plus a harness for verifying approximation guarantees against
the oracles and measuring runtime scaling.
"""

from ._backend import backend_name
from .core import (
    Alphabet,
    ConstantSchedule,
    FrequencyHistogram,
    Restriction,
    SymbolString,
    Witness,
    histogram,
    is_balanced,
    lift_witness,
    restrict,
    validate_witness,
)
from .binary import (
    BinaryContext,
    SegmentSplit,
    SymmetryTransform,
    binary_lcs_approx,
    frequency_gap_check,
    imbalanced_lcs,
    portfolio_candidates,
    segment,
)
from .harness import InstanceSpec, ReportRecord, bench_scaling, generate, ingest, run_experiment
from .multi import (
    SolveReport,
    SolverConfig,
    alphabet_reduce,
    derive_schedule,
    equal_length_lcs_approx,
    lcs_approx,
    validate_schedule,
)
from .oracles import (
    BandConfig,
    DEFAULT_CELL_CAP,
    ed_banded,
    ed_banded_alignment,
    ed_exact,
    lcs_bruteforce,
    lcs_exact,
)
from .primitives import (
    Candidate,
    EdApproximator,
    approx_ed_lcs,
    balanced_lcs_approx,
    best_match,
    exact_banded_approximator,
    greedy_split,
    match_sym,
)
from .restriction import find_imbalanced_pair, verify_pair

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BandConfig",
    "BinaryContext",
    "Candidate",
    "ConstantSchedule",
    "DEFAULT_CELL_CAP",
    "EdApproximator",
    "FrequencyHistogram",
    "InstanceSpec",
    "ReportRecord",
    "Restriction",
    "SegmentSplit",
    "SolveReport",
    "SolverConfig",
    "SymbolString",
    "SymmetryTransform",
    "Witness",
    "alphabet_reduce",
    "approx_ed_lcs",
    "backend_name",
    "balanced_lcs_approx",
    "bench_scaling",
    "best_match",
    "binary_lcs_approx",
    "derive_schedule",
    "ed_banded",
    "ed_banded_alignment",
    "ed_exact",
    "equal_length_lcs_approx",
    "exact_banded_approximator",
    "find_imbalanced_pair",
    "frequency_gap_check",
    "generate",
    "greedy_split",
    "histogram",
    "imbalanced_lcs",
    "ingest",
    "is_balanced",
    "lcs_approx",
    "lcs_bruteforce",
    "lcs_exact",
    "lift_witness",
    "match_sym",
    "portfolio_candidates",
    "restrict",
    "run_experiment",
    "segment",
    "validate_schedule",
    "validate_witness",
    "verify_pair",
]
