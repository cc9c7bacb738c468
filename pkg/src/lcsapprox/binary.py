"""Binary solver for (possibly) unequal-length strings.

The underlying analysis splits inputs by the frequency structure of their
left/middle/right segments and prescribes a different constructive answer in
each regime. The regime boundaries depend on an optimal alignment nobody has,
but every regime's construction is a valid common subsequence on *every*
input, so the solver simply runs the whole portfolio of constructions, over
all eight string symmetries, and keeps the longest output. The unary
baseline is always in the portfolio, which pins the worst case at 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    ConstantSchedule,
    SymbolString,
    Witness,
    as_fraction,
    concat_witnesses,
    is_balanced,
)
from .errors import InvalidAlphabetError, SegmentationError
from .primitives import (
    Candidate,
    EdApproximator,
    approx_ed_lcs,
    best_match,
    default_ed_approximator,
    greedy_split,
    match_sym,
)

__all__ = [
    "SegmentSplit",
    "BinaryContext",
    "SymmetryTransform",
    "ALL_TRANSFORMS",
    "frequency_gap_check",
    "segment",
    "portfolio_candidates",
    "imbalanced_lcs",
    "binary_lcs_approx",
    "hypothesis_flags",
]

#: Portfolio tie-break rank per construction, lowest wins on equal lengths.
_STRATEGY_RANK = {
    "bm": 0,
    "greed": 1,
    "unary-ed": 2,
    "triple-match": 3,
    "cross-match": 4,
    "pair-ed": 5,
}


def _require_binary(*strings: SymbolString) -> None:
    alphabet = strings[0].alphabet
    if alphabet.size != 2:
        raise InvalidAlphabetError("binary solver requires an alphabet of size 2")
    for s in strings[1:]:
        if s.alphabet != alphabet:
            raise InvalidAlphabetError("both strings must share one binary alphabet")


# ---------------------------------------------------------------------------
# Segments and symmetries


@dataclass(frozen=True, slots=True)
class SegmentSplit:
    """Left / middle / right spans of a string with equal-sized ends."""

    left: SymbolString
    middle: SymbolString
    right: SymbolString
    end_length: int


def segment(s: SymbolString, alpha: Fraction) -> SegmentSplit:
    """Split ``s`` into L/M/R with |L| = |R| = floor(alpha * len(s))."""
    n = len(s)
    ell = int(as_fraction(alpha) * n)
    if ell < 1:
        raise SegmentationError(f"segment ends would be empty (alpha={alpha}, n={n})")
    if 2 * ell > n:
        raise SegmentationError(
            f"segment ends would overlap (2*{ell} > {n} for alpha={alpha})"
        )
    return SegmentSplit(
        left=s.slice(0, ell),
        middle=s.slice(ell, n - ell),
        right=s.slice(n - ell, n),
        end_length=ell,
    )


@dataclass(frozen=True, slots=True)
class SymmetryTransform:
    """One of the eight (swap, complement, reverse) pair symmetries.

    Applied in the order swap, complement, reverse; ``invert_witness`` undoes
    the composition so a witness found on the transformed pair becomes a
    witness for the original pair.
    """

    swap_strings: bool
    complement_symbols: bool
    reverse_both: bool

    def apply_pair(
        self, x: SymbolString, y: SymbolString
    ) -> tuple[SymbolString, SymbolString]:
        p, q = (y, x) if self.swap_strings else (x, y)
        if self.complement_symbols:
            p, q = p.complement(), q.complement()
        if self.reverse_both:
            p, q = p.reverse(), q.reverse()
        return p, q

    def invert_witness(self, w: Witness, x: SymbolString, y: SymbolString) -> Witness:
        p_len, q_len = (len(y), len(x)) if self.swap_strings else (len(x), len(y))
        i_arr, j_arr = w.arrays()
        if self.reverse_both:
            i_arr = type(i_arr)("q", [p_len - 1 - v for v in reversed(i_arr)])
            j_arr = type(j_arr)("q", [q_len - 1 - v for v in reversed(j_arr)])
        if self.swap_strings:
            i_arr, j_arr = j_arr, i_arr
        return Witness(i_arr, j_arr)


ALL_TRANSFORMS: tuple[SymmetryTransform, ...] = tuple(
    SymmetryTransform(swap, comp, rev)
    for swap in (False, True)
    for comp in (False, True)
    for rev in (False, True)
)


# ---------------------------------------------------------------------------
# Context


@dataclass(frozen=True, slots=True)
class BinaryContext:
    """A normalized binary pair: |x| >= |y| and zeros(y) <= ones(y).

    ``alpha`` is the exact rational ones(x) / len(y) (zero when y is empty).
    """

    x: SymbolString
    y: SymbolString
    alpha: Fraction
    ones_x: int
    zeros_x: int
    ones_y: int
    zeros_y: int


def normalize_pair(
    x: SymbolString, y: SymbolString
) -> tuple[BinaryContext, bool, bool]:
    """Build the normalized context; returns (ctx, swapped, complemented)."""
    _require_binary(x, y)
    swapped = len(x) < len(y)
    if swapped:
        x, y = y, x
    complemented = y.ids.count(0) > y.ids.count(1)
    if complemented:
        x, y = x.complement(), y.complement()
    ones_x = x.ids.count(1)
    ones_y = y.ids.count(1)
    m = len(y)
    ctx = BinaryContext(
        x=x,
        y=y,
        alpha=Fraction(ones_x, m) if m else Fraction(0),
        ones_x=ones_x,
        zeros_x=len(x) - ones_x,
        ones_y=ones_y,
        zeros_y=m - ones_y,
    )
    return ctx, swapped, complemented


def hypothesis_flags(
    x: SymbolString, y: SymbolString, schedule: ConstantSchedule
) -> dict[str, bool]:
    """The imbalanced-solver hypotheses, recorded but never enforced.

    ``freq_bound``: ones(x) and zeros(y) are both at most (1/2 - rho) * m;
    ``freq_close``: they are within delta * m of each other. Computed on the
    normalized orientation.
    """
    ctx, _, _ = normalize_pair(x, y)
    m = len(ctx.y)
    half_less_rho = (Fraction(1, 2) - schedule.rho) * m
    return {
        "freq_bound": ctx.ones_x <= half_less_rho and ctx.zeros_y <= half_less_rho,
        "freq_close": abs(ctx.zeros_y - ctx.ones_x) <= schedule.delta * m,
    }


# ---------------------------------------------------------------------------
# Frequency gap shortcut


def frequency_gap_check(
    x: SymbolString, y: SymbolString, delta: Fraction
) -> Candidate | None:
    """Unary shortcut when one symbol's min-count dominates the other's.

    If min(zeros) > (1+delta) * min(ones) or symmetrically, the unary
    baseline is already a (1+delta)/(2+delta) approximation; return it
    (relabeled) so callers can report the shortcut. Otherwise None.
    """
    _require_binary(x, y)
    delta = as_fraction(delta)
    min0 = min(x.ids.count(0), y.ids.count(0))
    min1 = min(x.ids.count(1), y.ids.count(1))
    if min0 > (1 + delta) * min1 or min1 > (1 + delta) * min0:
        return Candidate("freq-gap", best_match(x, y).witness)
    return None


# ---------------------------------------------------------------------------
# The portfolio


def _binary_balanced(ids: bytes, radius_num: int, radius_den: int) -> bool:
    """is_balanced for a binary string at radius radius_num/radius_den.

    Same exact-integer test as :func:`lcsapprox.core.is_balanced` with s = 2,
    open-coded to keep Fraction construction out of the portfolio hot path.
    """
    length = len(ids)
    c0 = ids.count(0)
    return radius_den * abs(2 * c0 - length) <= 2 * radius_num * length


def _constructions(
    x: SymbolString,
    y: SymbolString,
    schedule: ConstantSchedule,
    ed: EdApproximator,
) -> list[tuple[int, Candidate]]:
    """All constructive candidates for one orientation of the pair.

    Candidates whose segmentation degenerates are skipped; the unary
    baseline is always produced.
    """
    out: list[tuple[int, Candidate]] = [(0, best_match(x, y))]
    n, m = len(x), len(y)
    ell = x.ids.count(1)
    if 1 <= ell and 2 * ell <= n:
        out.append((1, greedy_split(x.slice(0, n - ell), x.slice(n - ell, n), y)))
        if 2 * ell <= m:
            rx = x.slice(n - ell, n)
            ry = y.slice(m - ell, m)
            # unary left part + balanced-input solver on the equal-size ends,
            # emitted only when both ends pass the balance precondition at
            # radius 4 * beta / (ell / m)
            rnum = 4 * schedule.beta.numerator * m
            rden = schedule.beta.denominator * ell
            if _binary_balanced(rx.ids, rnum, rden) and _binary_balanced(
                ry.ids, rnum, rden
            ):
                left = match_sym(x.slice(0, n - ell), y.slice(0, m - ell), 0)
                ends_bm = best_match(rx, ry)
                ends_ed = approx_ed_lcs(rx, ry, ed)
                ends = ends_bm if ends_bm.length >= ends_ed.length else ends_ed
                w = concat_witnesses(
                    [(left.witness, 0, 0), (ends.witness, n - ell, m - ell)]
                )
                out.append((2, Candidate("unary-ed", w)))
            # zeros from both ends, ones from the middles
            w = concat_witnesses(
                [
                    (match_sym(x.slice(0, ell), y.slice(0, ell), 0).witness, 0, 0),
                    (
                        match_sym(x.slice(ell, n - ell), y.slice(ell, m - ell), 1).witness,
                        ell,
                        ell,
                    ),
                    (match_sym(rx, ry, 0).witness, n - ell, m - ell),
                ]
            )
            out.append((3, Candidate("triple-match", w)))
            # zeros of x's left end vs y's prefix, ones of x's tail vs y's right end
            w = concat_witnesses(
                [
                    (match_sym(x.slice(0, ell), y.slice(0, m - ell), 0).witness, 0, 0),
                    (match_sym(x.slice(ell, n), ry, 1).witness, ell, m - ell),
                ]
            )
            out.append((4, Candidate("cross-match", w)))
    return out


def _portfolio_entries(
    ctx: BinaryContext, schedule: ConstantSchedule, ed: EdApproximator
) -> list[tuple[int, int, Candidate]]:
    entries: list[tuple[int, int, Candidate]] = []
    for t_idx, tr in enumerate(ALL_TRANSFORMS):
        xt, yt = tr.apply_pair(ctx.x, ctx.y)
        for rank, cand in _constructions(xt, yt, schedule, ed):
            w = tr.invert_witness(cand.witness, ctx.x, ctx.y)
            entries.append((rank, t_idx, Candidate(f"{cand.strategy}@t{t_idx}", w)))
    if len(ctx.x) == len(ctx.y):
        # whole-pair ED lower bound; transform-invariant, so emit it once.
        # Keeps the portfolio exact on (near-)identical equal-length inputs.
        pair_ed = approx_ed_lcs(ctx.x, ctx.y, ed)
        entries.append((5, 0, Candidate("pair-ed", pair_ed.witness)))
    return entries


def portfolio_candidates(
    ctx: BinaryContext, schedule: ConstantSchedule, ed: EdApproximator | None = None
) -> list[Candidate]:
    """Every portfolio candidate for the normalized pair, as valid witnesses.

    Strategy labels carry an ``@t<k>`` suffix naming which of the eight
    symmetries produced them (k enumerates (swap, complement, reverse) bits,
    identity first). Equal-length pairs additionally get one "pair-ed"
    candidate, the ED-derived bound on the whole pair.
    """
    if ed is None:
        ed = default_ed_approximator()
    return [cand for _, _, cand in _portfolio_entries(ctx, schedule, ed)]


def imbalanced_lcs(
    x: SymbolString,
    y: SymbolString,
    schedule: ConstantSchedule,
    ed: EdApproximator | None = None,
) -> Candidate:
    """Portfolio max over all constructions and symmetries.

    Always at least the unary baseline, hence a 1/2-approximation
    unconditionally; strictly better whenever the frequency hypotheses hold.
    Ties break by construction rank, then by transform index.
    """
    if ed is None:
        ed = default_ed_approximator()
    ctx, swapped, _ = normalize_pair(x, y)
    best_key: tuple[int, int, int] | None = None
    best_cand: Candidate | None = None
    for rank, t_idx, cand in _portfolio_entries(ctx, schedule, ed):
        key = (-cand.length, rank, t_idx)
        if best_key is None or key < best_key:
            best_key = key
            best_cand = cand
    assert best_cand is not None
    w = best_cand.witness
    if swapped:
        i_arr, j_arr = w.arrays()
        w = Witness(j_arr, i_arr)
    return Candidate(best_cand.strategy, w)


def binary_lcs_approx(
    x: SymbolString,
    y: SymbolString,
    schedule: ConstantSchedule | None = None,
    ed: EdApproximator | None = None,
) -> Candidate:
    """Top-level binary solver: max of baseline, shortcut, balanced, portfolio.

    Never shorter than the unary baseline. Earlier-listed strategies win
    ties, so the simplest winning rule is always reported.
    """
    _require_binary(x, y)
    if ed is None:
        ed = default_ed_approximator()
    if schedule is None:
        from .multi import derive_schedule

        schedule = derive_schedule(2, ed.ratio)
    cands: list[Candidate] = [best_match(x, y)]
    gap = frequency_gap_check(x, y, schedule.delta)
    if gap is not None:
        cands.append(gap)
    if len(x) == len(y) and (
        is_balanced(x, schedule.rho) or is_balanced(y, schedule.rho)
    ):
        # the balanced-input two-branch max, with the baseline reused
        via_ed = approx_ed_lcs(x, y, ed)
        cands.append(cands[0] if cands[0].length >= via_ed.length else via_ed)
    cands.append(imbalanced_lcs(x, y, schedule, ed))
    best = cands[0]
    for cand in cands[1:]:
        if cand.length > best.length:
            best = cand
    return best
