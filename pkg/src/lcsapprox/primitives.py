"""Linear-time subroutines and the balanced-input solver built on them.

Every operation returns a :class:`Candidate` carrying an explicit witness,
so any output can be checked independently with ``validate_witness``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ._backend import kernels
from .core import (
    ConstantSchedule,
    SymbolString,
    Witness,
    concat_witnesses,
    is_balanced,
)
from .errors import (
    InvalidAlphabetError,
    InvalidSymbolError,
    PreconditionError,
    WitnessError,
)
from .oracles import DEFAULT_BAND_CONFIG, BandConfig, ed_banded_alignment


@dataclass(frozen=True, slots=True)
class Candidate:
    """A labeled strategy output: which rule produced the witness."""

    strategy: str
    witness: Witness

    @property
    def length(self) -> int:
        return len(self.witness)


@dataclass(frozen=True, slots=True)
class EdApproximator:
    """Pluggable edit-distance estimator with a guaranteed ratio.

    ``procedure(a, b)`` returns ``(estimate, witness)`` where the witness is
    a valid common subsequence and ``estimate = n + m - 2*len(witness)``, so
    the estimate is automatically an upper bound on the true distance; the
    quality contract is ``estimate <= ratio * ed(a, b)``.
    """

    ratio: Fraction
    procedure: Callable[[SymbolString, SymbolString], tuple[int, Witness]]


def exact_banded_approximator(config: BandConfig = DEFAULT_BAND_CONFIG) -> EdApproximator:
    """The default approximator: exact banded ED, ratio c = 1."""

    def proc(a: SymbolString, b: SymbolString) -> tuple[int, Witness]:
        return ed_banded_alignment(a, b, config)

    return EdApproximator(ratio=Fraction(1), procedure=proc)


def default_ed_approximator() -> EdApproximator:
    return exact_banded_approximator()


# ---------------------------------------------------------------------------
# Unary matches


def match_sym(a: SymbolString, b: SymbolString, sigma: int) -> Candidate:
    """Longest common subsequence made entirely of copies of ``sigma``."""
    if not 0 <= sigma < a.alphabet.size:
        raise InvalidSymbolError(f"symbol id {sigma} not in alphabet")
    k = min(a.ids.count(sigma), b.ids.count(sigma))
    w = Witness(kernels.positions(a.ids, sigma, k), kernels.positions(b.ids, sigma, k))
    return Candidate(f"match-{sigma}", w)


def best_match(a: SymbolString, b: SymbolString) -> Candidate:
    """The longest unary common subsequence over all alphabet symbols.

    Ties go to the lowest symbol id, so the result is deterministic and
    invariant in length under alphabet permutations.
    """
    best_sym = 0
    best_len = -1
    for sym in range(a.alphabet.size):
        k = min(a.ids.count(sym), b.ids.count(sym))
        if k > best_len:
            best_len = k
            best_sym = sym
    w = Witness(
        kernels.positions(a.ids, best_sym, best_len),
        kernels.positions(b.ids, best_sym, best_len),
    )
    return Candidate("bm", w)


def greedy_split(a1: SymbolString, a2: SymbolString, b: SymbolString) -> Candidate:
    """Best contiguous split b = b1 + b2 maximizing bm(a1,b1) + bm(a2,b2).

    Binary alphabets only. Runs in O(n + m) using prefix counts; the witness
    pairs a1 against b1 and a2 (index-shifted by len(a1)) against b2, so it
    validates against (a1 + a2, b). The first optimal split wins ties, and
    each side's unary symbol follows best_match's lowest-id tie rule.
    """
    for s in (a1, a2, b):
        if s.alphabet.size != 2:
            raise InvalidAlphabetError("greedy_split requires binary alphabets")
    if a1.alphabet != b.alphabet or a2.alphabet != b.alphabet:
        raise InvalidAlphabetError("greedy_split requires one shared alphabet")
    z1 = a1.ids.count(0)
    o1 = len(a1) - z1
    z2 = a2.ids.count(0)
    o2 = len(a2) - z2
    total, t = kernels.greedy_scan(z1, o1, z2, o2, b.ids)
    b1 = b.ids[:t]
    b2 = b.ids[t:]
    zb1 = b1.count(0)
    zb2 = b2.count(0)
    sym_l = 0 if min(z1, zb1) >= min(o1, t - zb1) else 1
    sym_r = 0 if min(z2, zb2) >= min(o2, len(b2) - zb2) else 1
    kl = min((z1, zb1) if sym_l == 0 else (o1, t - zb1))
    kr = min((z2, zb2) if sym_r == 0 else (o2, len(b2) - zb2))
    left = Witness(
        kernels.positions(a1.ids, sym_l, kl), kernels.positions(b1, sym_l, kl)
    )
    right = Witness(
        kernels.positions(a2.ids, sym_r, kr), kernels.positions(b2, sym_r, kr)
    )
    w = concat_witnesses([(left, 0, 0), (right, len(a1), t)])
    if len(w) != total:
        raise WitnessError("greedy_split witness does not match the scanned optimum")
    return Candidate("greed", w)


# ---------------------------------------------------------------------------
# Edit distance as an LCS lower bound


def approx_ed_lcs(
    a: SymbolString, b: SymbolString, ed: EdApproximator | None = None
) -> Candidate:
    """LCS lower bound n - ceil(est/2) from an edit-distance approximation.

    Defined for equal-length inputs only: for very unequal lengths the
    distance estimate swamps the bound and yields nothing useful.
    """
    if len(a) != len(b):
        raise PreconditionError(
            f"approx_ed_lcs requires equal lengths, got {len(a)} and {len(b)}"
        )
    if ed is None:
        ed = default_ed_approximator()
    estimate, w = ed.procedure(a, b)
    if 2 * len(w) + estimate != len(a) + len(b):
        raise WitnessError("ED approximator returned an inconsistent alignment")
    if len(w) != len(a) - (estimate + 1) // 2:
        raise WitnessError("ED approximator witness shorter than its own bound")
    return Candidate("approx-ed", w)


def balanced_lcs_approx(
    a: SymbolString,
    b: SymbolString,
    schedule: ConstantSchedule,
    ed: EdApproximator | None = None,
) -> Candidate:
    """Solver for pairs where at least one side is rho-balanced.

    Returns the longer of the unary baseline and the ED-derived subsequence
    (the baseline wins ties). When the schedule inequalities hold this is a
    (1/s + gamma)-approximation.
    """
    if len(a) != len(b):
        raise PreconditionError(
            f"balanced_lcs_approx requires equal lengths, got {len(a)} and {len(b)}"
        )
    if not (is_balanced(a, schedule.rho) or is_balanced(b, schedule.rho)):
        raise PreconditionError(
            "balanced_lcs_approx requires one input balanced at schedule.rho"
        )
    unary = best_match(a, b)
    via_ed = approx_ed_lcs(a, b, ed)
    return unary if unary.length >= via_ed.length else via_ed
