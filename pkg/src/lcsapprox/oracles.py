"""Ground-truth LCS and insert/delete edit distance oracles.

``lcs_exact`` and ``ed_exact`` are independent dynamic programs (one is not
derived from the other), so the identity 2*lcs + ed = n + m is a genuine
cross-implementation check. ``ed_banded`` computes the same distance as
``ed_exact`` in O((n+m)*d) by band doubling and doubles as the package's
default "approximate" edit distance with ratio exactly 1.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from ._backend import kernels
from .core import SymbolString, Witness
from .errors import ContradictionError, InvalidAlphabetError, SizeLimitError

#: Default cap on n*m for the quadratic oracles: keeps desk-scale runs under
#: a minute while allowing exact baselines around n = 2e4.
DEFAULT_CELL_CAP = 400_000_000

#: Largest (n+1)*(m+1) handled by the direct full-table LCS backtrack; bigger
#: rectangles go through the divide-and-conquer linear-space path.
_SMALL_LCS_CELLS = 1 << 18

_BRUTE_FORCE_MAX = 20

_BIG = kernels.BIG


def _require_same_alphabet(a: SymbolString, b: SymbolString) -> None:
    if a.alphabet != b.alphabet:
        raise InvalidAlphabetError("both strings must share one alphabet")


def _check_cap(a: SymbolString, b: SymbolString, max_cells: int, op: str) -> None:
    if len(a) * len(b) > max_cells:
        raise SizeLimitError(
            f"{op} needs {len(a)}x{len(b)} DP cells, above the cell cap of {max_cells}"
        )


@dataclass(frozen=True, slots=True)
class BandConfig:
    """Banded-ED tuning: starting band width and a cap on materialized cells.

    ``max_cells`` bounds how much DP table the alignment recovery may hold at
    once; larger instances fall back to divide-and-conquer over banded rows,
    so results never change, only memory strategy.
    """

    initial_band: int = 1
    max_cells: int = 32_000_000

    def __post_init__(self) -> None:
        if self.initial_band < 1:
            raise SizeLimitError("initial_band must be >= 1")
        if self.max_cells < 1:
            raise SizeLimitError("max_cells must be positive")


DEFAULT_BAND_CONFIG = BandConfig()


# ---------------------------------------------------------------------------
# LCS


def lcs_exact(
    a: SymbolString, b: SymbolString, *, max_cells: int = DEFAULT_CELL_CAP
) -> tuple[int, Witness]:
    """True LCS length and a witness achieving it.

    Linear-space divide and conquer over the compiled row kernel; the full
    rectangle is only materialized for small subproblems.
    """
    _require_same_alphabet(a, b)
    _check_cap(a, b, max_cells, "lcs_exact")
    ii: array = array("q")
    jj: array = array("q")
    _hirschberg(a.ids, b.ids, 0, 0, ii, jj)
    return len(ii), Witness(ii, jj)


def _extend_shifted(out: array, values: array, off: int) -> None:
    if off == 0:
        out.extend(values)
    else:
        out.extend(v + off for v in values)


def _hirschberg(a: bytes, b: bytes, off_a: int, off_b: int, ii: array, jj: array) -> None:
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return
    if n <= 2 or (n + 1) * (m + 1) <= _SMALL_LCS_CELLS:
        si, sj = kernels.lcs_small(a, b)
        _extend_shifted(ii, si, off_a)
        _extend_shifted(jj, sj, off_b)
        return
    mid = n // 2
    fwd = kernels.lcs_last_row(a[:mid], b)
    bwd = kernels.lcs_last_row(a[mid:][::-1], b[::-1])
    best = -1
    best_k = 0
    for k in range(m + 1):
        v = fwd[k] + bwd[m - k]
        if v > best:
            best = v
            best_k = k
    _hirschberg(a[:mid], b[:best_k], off_a, off_b, ii, jj)
    _hirschberg(a[mid:], b[best_k:], off_a + mid, off_b + best_k, ii, jj)


def lcs_bruteforce(a: SymbolString, b: SymbolString) -> int:
    """Exact LCS length by subsequence enumeration (oracle for the oracle)."""
    _require_same_alphabet(a, b)
    if min(len(a), len(b)) > _BRUTE_FORCE_MAX:
        raise SizeLimitError(
            f"lcs_bruteforce is capped at shorter length {_BRUTE_FORCE_MAX}"
        )
    s_short, s_long = (a.ids, b.ids) if len(a) <= len(b) else (b.ids, a.ids)
    return kernels.lcs_subset_len(s_short, s_long)


# ---------------------------------------------------------------------------
# Edit distance


def ed_exact(
    a: SymbolString, b: SymbolString, *, max_cells: int = DEFAULT_CELL_CAP
) -> int:
    """Exact insert/delete edit distance by a standalone quadratic DP."""
    _require_same_alphabet(a, b)
    _check_cap(a, b, max_cells, "ed_exact")
    return kernels.ed_len(a.ids, b.ids)


def ed_banded(
    a: SymbolString, b: SymbolString, config: BandConfig = DEFAULT_BAND_CONFIG
) -> int:
    """Exact indel distance in O((n+m)*d) cells via band doubling.

    The band starts at ``config.initial_band`` and doubles until the computed
    distance is certified (distance <= band implies exactness).
    """
    _require_same_alphabet(a, b)
    band = config.initial_band
    while True:
        d = kernels.ed_banded_pass(a.ids, b.ids, band)
        if d <= band:
            return d
        band *= 2


def ed_banded_alignment(
    a: SymbolString, b: SymbolString, config: BandConfig = DEFAULT_BAND_CONFIG
) -> tuple[int, Witness]:
    """Exact banded distance plus the matched pairs of an optimal alignment.

    The witness is a common subsequence of length (n + m - d) / 2, i.e. a
    true LCS witness (optimal indel alignments match exactly the LCS).
    """
    d = ed_banded(a, b, config)
    ii: array = array("q")
    jj: array = array("q")
    cap = max(config.max_cells, 2 * (len(a) + len(b) + 2))
    _banded_align(a.ids, b.ids, d, 0, 0, ii, jj, cap)
    if 2 * len(ii) + d != len(a) + len(b):
        raise ContradictionError("banded alignment size disagrees with distance")
    return d, Witness(ii, jj)


def _extend_identity(out: array, off: int, count: int) -> None:
    if count < 4096:
        out.extend(range(off, off + count))
        return
    import numpy as np

    out.frombytes(np.arange(off, off + count, dtype=np.int64).tobytes())


def _banded_align(
    a: bytes, b: bytes, d: int, off_a: int, off_b: int, ii: array, jj: array, cap: int
) -> None:
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return
    if d == 0:
        _extend_identity(ii, off_a, n)
        _extend_identity(jj, off_b, n)
        return
    band = max(d, 1)
    if n <= 2 or (n + 1) * (2 * band + 1) <= cap:
        si, sj = kernels.ed_banded_small(a, b, band)
        _extend_shifted(ii, si, off_a)
        _extend_shifted(jj, sj, off_b)
        return
    mid = n // 2
    fwd = kernels.ed_banded_last_row(a[:mid], b, band)
    bwd = kernels.ed_banded_last_row(a[mid:][::-1], b[::-1], band)
    best = None
    best_k = -1
    for k in range(m + 1):
        fv = fwd[k]
        gv = bwd[m - k]
        if fv >= _BIG or gv >= _BIG:
            continue
        v = fv + gv
        if best is None or v < best:
            best = v
            best_k = k
    if best != d:
        raise ContradictionError(
            f"banded alignment split lost optimality ({best} != {d})"
        )
    _banded_align(a[:mid], b[:best_k], fwd[best_k], off_a, off_b, ii, jj, cap)
    _banded_align(
        a[mid:], b[best_k:], bwd[m - best_k], off_a + mid, off_b + best_k, ii, jj, cap
    )
