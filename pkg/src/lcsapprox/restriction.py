"""Finding a two-symbol subalphabet on which both strings stay imbalanced.

When neither input is rho-balanced, sorting one string's symbol counts
exposes a frequency gap; pairing symbols across that gap yields s-1 candidate
subalphabets, at least one of which leaves both restrictions imbalanced at
radius rho/s. Balance of a restriction is always measured against the
restriction's own length (the downstream binary solver sees only the
restricted strings).
"""

from __future__ import annotations

from fractions import Fraction

from .core import RatioLike, SymbolString, as_fraction, is_balanced, restrict
from .errors import ContradictionError, PreconditionError

__all__ = ["find_imbalanced_pair", "verify_pair"]


def _sorted_symbols(a: SymbolString, b: SymbolString) -> list[int]:
    """Symbols by ascending count in ``a``.

    Ties break on first occurrence in a, then in b, then id: the first two
    keys are invariant under alphabet permutations, so the whole selection
    (and hence the solver's output length) is permutation-covariant except
    for symbols absent from both strings, which cannot matter.
    """
    n, m = len(a), len(b)

    def key(sym: int) -> tuple[int, int, int, int]:
        fa = a.ids.find(sym)
        fb = b.ids.find(sym)
        return (
            a.ids.count(sym),
            fa if fa >= 0 else n,
            fb if fb >= 0 else m,
            sym,
        )

    return sorted(range(a.alphabet.size), key=key)


def find_imbalanced_pair(
    a: SymbolString, b: SymbolString, rho: RatioLike
) -> tuple[int, int]:
    """Return symbol ids whose restrictions of a and b are both imbalanced.

    Preconditions: shared alphabet of size >= 3, and neither string is
    rho-balanced. The returned pair's restrictions are not (rho/s)-balanced
    relative to their own lengths (see :func:`verify_pair`).

    Deterministic choices: among qualifying count gaps the largest wins
    (first largest on ties); among qualifying candidate sets, the first in
    the gap-crossing enumeration order.
    """
    if a.alphabet != b.alphabet:
        raise PreconditionError("both strings must share one alphabet")
    s = a.alphabet.size
    if s < 3:
        raise PreconditionError(f"alphabet size must be >= 3, got {s}")
    rho = as_fraction(rho)
    if is_balanced(a, rho):
        raise PreconditionError("first string is rho-balanced")
    if is_balanced(b, rho):
        raise PreconditionError("second string is rho-balanced")

    n = len(a)
    counts_a = [a.ids.count(sym) for sym in range(s)]
    counts_b = [b.ids.count(sym) for sym in range(s)]
    order = _sorted_symbols(a, b)

    # a gap: counts_a[order[j]] - counts_a[order[j-1]] > (rho/s) * n, exactly
    p, q = rho.numerator, rho.denominator
    best_j = -1
    best_gap = -1
    for j in range(1, s):
        gap = counts_a[order[j]] - counts_a[order[j - 1]]
        if q * s * gap > p * n and gap > best_gap:
            best_j = j
            best_gap = gap
    if best_j < 0:
        raise ContradictionError(
            "no count gap above rho*n/s although the string is imbalanced"
        )

    j = best_j
    candidates = [(order[hi], order[j - 1]) for hi in range(s - 1, j - 1, -1)]
    candidates += [(order[j], order[lo]) for lo in range(j - 2, -1, -1)]

    # restriction balance from counts: a two-symbol restriction is balanced
    # at radius r iff |c1 - c2| <= 2 * r * (c1 + c2)
    def imbalanced(c1: int, c2: int) -> bool:
        return q * s * abs(c1 - c2) > 2 * p * (c1 + c2)

    for pair in candidates:
        u, v = pair
        if imbalanced(counts_a[u], counts_a[v]) and imbalanced(counts_b[u], counts_b[v]):
            return (u, v) if u < v else (v, u)
    raise ContradictionError(
        "all candidate subalphabets produced a balanced restriction"
    )


def verify_pair(
    a: SymbolString, b: SymbolString, sigma_pair: tuple[int, int], rho: RatioLike
) -> bool:
    """Check that both restrictions to ``sigma_pair`` are (rho/s)-imbalanced.

    Never raises: malformed pairs simply fail the check.
    """
    s = a.alphabet.size
    radius = as_fraction(rho) / s
    try:
        ra = restrict(a, sigma_pair)
        rb = restrict(b, sigma_pair)
    except Exception:
        return False
    return not is_balanced(ra.restricted, radius) and not is_balanced(
        rb.restricted, radius
    )
