"""K-ary solvers: constant schedule, alphabet reduction, equal-length solver.

The equal-length solver always evaluates the unary baseline (1/s floor),
adds the balanced-input solver when a side is balanced enough, and otherwise
restricts to a two-symbol subalphabet on which both strings stay imbalanced
and runs the binary portfolio there, lifting the witness back.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .binary import binary_lcs_approx, hypothesis_flags
from .core import (
    ConstantSchedule,
    RatioLike,
    SymbolString,
    as_fraction,
    is_balanced,
    lift_witness,
    restrict,
)
from .errors import PreconditionError
from .primitives import (
    Candidate,
    EdApproximator,
    approx_ed_lcs,
    best_match,
    default_ed_approximator,
)
from .restriction import find_imbalanced_pair

__all__ = [
    "SolveReport",
    "SolverConfig",
    "derive_schedule",
    "validate_schedule",
    "alphabet_reduce",
    "equal_length_lcs_approx",
    "lcs_approx",
]


@dataclass(slots=True)
class SolveReport:
    """A solver run: the winning candidate plus everything it beat.

    ``exact`` stays None unless a caller (typically the harness) attaches the
    oracle LCS length for ratio reporting.
    """

    answer: Candidate
    candidates: list[Candidate]
    path: str
    schedule: ConstantSchedule | None
    exact: int | None = None

    @property
    def length(self) -> int:
        return self.answer.length

    @property
    def ratio(self) -> float | None:
        if self.exact is None:
            return None
        if self.exact == 0:
            return 1.0
        return self.answer.length / self.exact

    def breakdown(self) -> list[tuple[str, int]]:
        return [(c.strategy, c.length) for c in self.candidates]


def _pick_max(cands: list[Candidate]) -> Candidate:
    best = cands[0]
    for cand in cands[1:]:
        if cand.length > best.length:
            best = cand
    return best


# ---------------------------------------------------------------------------
# Constant schedule


def derive_schedule(s: int, c: RatioLike = 1) -> ConstantSchedule:
    """One concrete parameter chain satisfying every schedule inequality.

    The analysis only pins inequalities between the constants; this picks
    rho to leave the balanced-input gain positive with margin and scales the
    rest off it. ``c`` is the ED approximator's ratio.
    """
    if s < 2:
        raise PreconditionError(f"alphabet size must be >= 2, got {s}")
    c = as_fraction(c)
    if c < 1:
        raise PreconditionError(f"ED approximation ratio must be >= 1, got {c}")
    rho = Fraction(s - 1, 1) / (2 * c * s * s)
    gamma = Fraction(s - 1, 1) / (2 * s * (1 + c * s))
    beta = rho / 40
    delta = min(2 * rho, beta / 4)
    rho_prime = beta / 4
    epsilon_prime = beta / 4
    return ConstantSchedule(
        rho=rho,
        rho_prime=rho_prime,
        beta=beta,
        gamma=gamma,
        delta=delta,
        epsilon_prime=epsilon_prime,
        epsilon=epsilon_prime / s,
        c=c,
    )


def validate_schedule(schedule: ConstantSchedule, s: int) -> bool:
    """Check every schedule invariant for alphabet size ``s`` (exact math)."""
    sch = schedule
    values = (
        sch.rho,
        sch.rho_prime,
        sch.beta,
        sch.gamma,
        sch.delta,
        sch.epsilon_prime,
        sch.epsilon,
        sch.c,
    )
    if any(v <= 0 for v in values):
        return False
    if not sch.beta < sch.rho / 20:
        return False
    if not sch.delta <= 2 * sch.rho:
        return False
    gamma_bound = (s - 1 - sch.c * s * s * sch.rho) / (s * (1 + sch.c * s))
    if not sch.gamma <= gamma_bound:
        return False
    if sch.epsilon != sch.epsilon_prime / s:
        return False
    return True


# ---------------------------------------------------------------------------
# Alphabet reduction


def alphabet_reduce(
    a: SymbolString,
    b: SymbolString,
    ell: int,
    solver: Callable[[SymbolString, SymbolString], Candidate],
) -> SolveReport:
    """Solve every C(s, ell) subalphabet restriction and keep the best lift.

    If the sub-solver is a 1/(ell - eps) approximation, the max over all
    subalphabets is a 1/(s(1 - eps/ell)) approximation of the full problem.
    """
    if a.alphabet != b.alphabet:
        raise PreconditionError("both strings must share one alphabet")
    s = a.alphabet.size
    if not 2 <= ell < s:
        raise PreconditionError(f"need 2 <= ell < s, got ell={ell}, s={s}")
    cands: list[Candidate] = []
    for combo in itertools.combinations(range(s), ell):
        ra = restrict(a, combo)
        rb = restrict(b, combo)
        sub = solver(ra.restricted, rb.restricted)
        cands.append(
            Candidate(f"reduce{combo}:{sub.strategy}", lift_witness(ra, rb, sub.witness))
        )
    return SolveReport(
        answer=_pick_max(cands),
        candidates=cands,
        path=f"reduce(ell={ell})",
        schedule=None,
    )


# ---------------------------------------------------------------------------
# Equal-length solver


def equal_length_lcs_approx(
    a: SymbolString,
    b: SymbolString,
    schedule: ConstantSchedule | None = None,
    ed: EdApproximator | None = None,
) -> SolveReport:
    """Better-than-1/s solver for equal-length strings over a shared alphabet.

    Branches: the unary baseline always competes; if a side is (rho*s)-
    balanced the balanced-input solver joins; otherwise both strings are
    restricted to an imbalanced two-symbol subalphabet and the binary
    portfolio result is lifted back. Output is never shorter than the
    baseline, hence always a 1/s-approximation.
    """
    if a.alphabet != b.alphabet:
        raise PreconditionError("both strings must share one alphabet")
    if len(a) != len(b):
        raise PreconditionError(
            f"equal_length_lcs_approx requires equal lengths, got {len(a)} and {len(b)}"
        )
    if ed is None:
        ed = default_ed_approximator()
    s = a.alphabet.size
    if schedule is None:
        schedule = derive_schedule(s, ed.ratio)

    if s == 2:
        answer = binary_lcs_approx(a, b, schedule, ed)
        baseline = best_match(a, b)
        return SolveReport(
            answer=answer,
            candidates=[baseline, answer],
            path="binary",
            schedule=schedule,
        )

    cands = [best_match(a, b)]
    radius = schedule.rho * s
    if is_balanced(a, radius) or is_balanced(b, radius):
        # the balanced-input two-branch max, with the baseline reused
        via_ed = approx_ed_lcs(a, b, ed)
        cands.append(cands[0] if cands[0].length >= via_ed.length else via_ed)
        path = "balanced"
    else:
        pair = find_imbalanced_pair(a, b, radius)
        ra = restrict(a, pair)
        rb = restrict(b, pair)
        sub = binary_lcs_approx(ra.restricted, rb.restricted, schedule, ed)
        flags = hypothesis_flags(ra.restricted, rb.restricted, schedule)
        cands.append(
            Candidate(f"restricted{pair}:{sub.strategy}", lift_witness(ra, rb, sub.witness))
        )
        path = "restricted{};freq_bound={};freq_close={}".format(
            pair, flags["freq_bound"], flags["freq_close"]
        )
    return SolveReport(
        answer=_pick_max(cands), candidates=cands, path=path, schedule=schedule
    )


# ---------------------------------------------------------------------------
# Dispatch facade


@dataclass(slots=True)
class SolverConfig:
    """How :func:`lcs_approx` should route and parametrize a solve."""

    mode: str = "auto"  # auto | equal | binary | reduce
    ell: int = 2
    schedule: ConstantSchedule | None = None
    ed: EdApproximator | None = field(default=None)


def lcs_approx(
    a: SymbolString, b: SymbolString, config: SolverConfig | None = None
) -> SolveReport:
    """Route to the right solver for the pair.

    Equal lengths go to the equal-length solver (the case with a proven
    better-than-1/s gain). Unequal lengths only carry the unconditional 1/s
    baseline guarantee, which the report's path records: binary pairs run the
    binary solver directly, larger alphabets reduce to C(s, ell) subalphabet
    instances solved recursively.
    """
    if config is None:
        config = SolverConfig()
    if a.alphabet != b.alphabet:
        raise PreconditionError("both strings must share one alphabet")
    s = a.alphabet.size
    ed = config.ed if config.ed is not None else default_ed_approximator()
    schedule = config.schedule if config.schedule is not None else derive_schedule(
        s, ed.ratio
    )
    mode = config.mode

    if mode == "auto":
        if len(a) == len(b):
            mode = "equal"
        elif s == 2:
            mode = "binary"
        else:
            mode = "reduce"

    if mode == "equal":
        return equal_length_lcs_approx(a, b, schedule, ed)
    if mode == "binary":
        answer = binary_lcs_approx(a, b, schedule, ed)
        baseline = best_match(a, b)
        return SolveReport(
            answer=answer,
            candidates=[baseline, answer],
            path="binary-unequal;guarantee=baseline-1/s",
            schedule=schedule,
        )
    if mode == "reduce":
        if config.ell == 2 and s > 2:
            solver = lambda x, y: binary_lcs_approx(x, y, schedule, ed)
        else:
            sub_config = SolverConfig(
                mode="auto", ell=max(2, config.ell - 1), schedule=None, ed=ed
            )
            solver = lambda x, y: lcs_approx(x, y, sub_config).answer
        report = alphabet_reduce(a, b, config.ell, solver)
        report.schedule = schedule
        report.path += ";guarantee=baseline-1/s"
        return report
    raise PreconditionError(f"unknown solve mode {mode!r}")
