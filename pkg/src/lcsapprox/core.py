"""Alphabets, symbol strings, histograms, witnesses, restrictions, schedules.

Everything here is immutable after construction and all operations are pure,
so values can be shared freely across threads and worker processes.

Symbol strings hold dense ids (0..s-1) in a ``bytes`` payload, which keeps
alphabet size bounded by 255 and lets the kernels work on raw buffers.
"""

from __future__ import annotations

import dataclasses
from array import array
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._backend import kernels
from .errors import (
    InvalidAlphabetError,
    InvalidSubalphabetError,
    InvalidSymbolError,
    WitnessError,
)

RatioLike = Fraction | int | float | str

#: witness index arrays below this length use plain Python loops; above it
#: they go through numpy (vectorized shift during concatenation).
_NUMPY_CUTOFF = 4096


def as_fraction(value: RatioLike) -> Fraction:
    """Coerce to an exact Fraction (floats convert to their exact binary value)."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


# ---------------------------------------------------------------------------
# Alphabet / SymbolString


@dataclass(frozen=True, slots=True)
class Alphabet:
    """An ordered set of distinct byte values; the i-th byte has symbol id i."""

    symbols: bytes

    def __post_init__(self) -> None:
        if not 2 <= len(self.symbols) <= 255:
            raise InvalidAlphabetError(
                f"alphabet size must be in [2, 255], got {len(self.symbols)}"
            )
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidAlphabetError("alphabet symbols must be pairwise distinct")

    @property
    def size(self) -> int:
        return len(self.symbols)

    @classmethod
    def of_size(cls, s: int) -> "Alphabet":
        """The canonical alphabet whose symbols are the byte values 0..s-1."""
        return cls(bytes(range(s)))

    @classmethod
    def from_text(cls, text: str) -> "Alphabet":
        return cls(text.encode("latin-1"))

    def sub(self, ids: Sequence[int]) -> "Alphabet":
        """Subalphabet keeping the given ids, ordered by ascending original id."""
        return Alphabet(bytes(self.symbols[i] for i in sorted(ids)))


@dataclass(frozen=True, slots=True)
class SymbolString:
    """A sequence of dense symbol ids over an alphabet.

    The constructor trusts its input; use :meth:`checked` for data that does
    not come from this package (file ingestion, generators).
    """

    ids: bytes
    alphabet: Alphabet

    @classmethod
    def checked(cls, ids: bytes, alphabet: Alphabet) -> "SymbolString":
        if ids and max(ids) >= alphabet.size:
            raise InvalidSymbolError(
                f"symbol id {max(ids)} out of range for alphabet of size {alphabet.size}"
            )
        return cls(ids, alphabet)

    @classmethod
    def from_text(cls, text: str, alphabet: Alphabet) -> "SymbolString":
        """Map characters to ids via the alphabet's byte values."""
        table = {v: i for i, v in enumerate(alphabet.symbols)}
        try:
            return cls(bytes(table[b] for b in text.encode("latin-1")), alphabet)
        except KeyError as exc:
            raise InvalidSymbolError(f"byte {exc.args[0]!r} not in alphabet") from None

    @property
    def length(self) -> int:
        return len(self.ids)

    def __len__(self) -> int:
        return len(self.ids)

    def slice(self, lo: int, hi: int) -> "SymbolString":
        return SymbolString(self.ids[lo:hi], self.alphabet)

    def reverse(self) -> "SymbolString":
        return SymbolString(self.ids[::-1], self.alphabet)

    _COMPLEMENT_TABLE = bytes((1, 0)) + bytes(range(2, 256))

    def complement(self) -> "SymbolString":
        """Swap symbols 0 and 1 (binary alphabets only)."""
        if self.alphabet.size != 2:
            raise InvalidAlphabetError("complement requires a binary alphabet")
        return SymbolString(self.ids.translate(self._COMPLEMENT_TABLE), self.alphabet)

    def concat(self, other: "SymbolString") -> "SymbolString":
        if self.alphabet != other.alphabet:
            raise InvalidAlphabetError("cannot concatenate across alphabets")
        return SymbolString(self.ids + other.ids, self.alphabet)


# ---------------------------------------------------------------------------
# Histograms and balance


@dataclass(frozen=True, slots=True)
class FrequencyHistogram:
    """Per-symbol occurrence counts; sums to the string length."""

    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


def histogram(a: SymbolString) -> FrequencyHistogram:
    return FrequencyHistogram(
        tuple(a.ids.count(sym) for sym in range(a.alphabet.size))
    )


def is_balanced(a: SymbolString, rho: RatioLike) -> bool:
    """True iff every symbol count is within rho*n of n/s (exact rationals).

    |c - n/s| <= rho*n is evaluated as q*|s*c - n| <= p*s*n for rho = p/q, so
    small instances never suffer float-threshold artifacts.
    """
    r = as_fraction(rho)
    n = len(a)
    s = a.alphabet.size
    p, q = r.numerator, r.denominator
    bound = p * s * n
    for sym in range(s):
        c = a.ids.count(sym)
        if q * abs(s * c - n) > bound:
            return False
    return True


# ---------------------------------------------------------------------------
# Witnesses


class Witness:
    """An index-aligned common subsequence of two strings.

    Stores the two index columns as int64 arrays; treat instances as
    immutable. ``pairs`` materializes the (i, j) tuple view.
    """

    __slots__ = ("_i", "_j")

    def __init__(self, i_arr: array, j_arr: array):
        if len(i_arr) != len(j_arr):
            raise WitnessError("witness index columns differ in length")
        self._i = i_arr
        self._j = j_arr

    @classmethod
    def empty(cls) -> "Witness":
        return cls(array("q"), array("q"))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Witness":
        ii = array("q")
        jj = array("q")
        for i, j in pairs:
            ii.append(i)
            jj.append(j)
        return cls(ii, jj)

    @classmethod
    def identity(cls, length: int) -> "Witness":
        idx = array("q", range(length))
        return cls(idx, idx)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self._i, self._j))

    def arrays(self) -> tuple[array, array]:
        return self._i, self._j

    def __len__(self) -> int:
        return len(self._i)

    @property
    def length(self) -> int:
        return len(self._i)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Witness):
            return NotImplemented
        return self._i == other._i and self._j == other._j

    def __hash__(self) -> int:
        return hash((bytes(self._i.tobytes()), bytes(self._j.tobytes())))

    def __repr__(self) -> str:
        if len(self) <= 8:
            return f"Witness({list(zip(self._i, self._j))!r})"
        head = list(zip(self._i[:4], self._j[:4]))
        return f"Witness(len={len(self)}, {head!r}...)"


def _shift(arr: array, off: int) -> array:
    if off == 0:
        return arr
    if len(arr) < _NUMPY_CUTOFF:
        return array("q", [v + off for v in arr])
    import numpy as np

    shifted = np.frombuffer(arr, dtype=np.int64) + off
    return array("q", shifted.tobytes())


def shift_witness(w: Witness, di: int, dj: int) -> Witness:
    """Translate all pairs by (di, dj)."""
    i_arr, j_arr = w.arrays()
    return Witness(_shift(i_arr, di), _shift(j_arr, dj))


def concat_witnesses(parts: Sequence[tuple[Witness, int, int]]) -> Witness:
    """Concatenate witnesses after shifting each by its (di, dj) offset.

    The caller is responsible for offsets that keep indices strictly
    increasing across part boundaries.
    """
    ii = array("q")
    jj = array("q")
    for w, di, dj in parts:
        i_arr, j_arr = w.arrays()
        ii.extend(_shift(i_arr, di))
        jj.extend(_shift(j_arr, dj))
    return Witness(ii, jj)


def validate_witness(a: SymbolString, b: SymbolString, w: Witness) -> bool:
    """True iff all witness invariants hold against a and b (never raises)."""
    i_arr, j_arr = w.arrays()
    return bool(kernels.validate_pairs(i_arr, j_arr, a.ids, b.ids))


# ---------------------------------------------------------------------------
# Restrictions


@dataclass(frozen=True, slots=True, eq=False)
class Restriction:
    """Maximal subsequence of a string over a subalphabet, with its index map."""

    restricted: SymbolString
    index_map: array

    def lift_index(self, i: int) -> int:
        return self.index_map[i]


def restrict(a: SymbolString, sub: Iterable[int]) -> Restriction:
    """Restrict ``a`` to the given symbol ids (>= 2 of them, all in-alphabet).

    The restricted string lives on the subalphabet (dense ids reassigned in
    ascending original-id order) and ``index_map`` gives each kept position's
    index in the original string.
    """
    ids = sorted(set(sub))
    if len(ids) < 2:
        raise InvalidSubalphabetError("subalphabet needs at least 2 symbols")
    if ids[0] < 0 or ids[-1] >= a.alphabet.size:
        raise InvalidSubalphabetError(
            f"symbol ids {ids} not all within alphabet of size {a.alphabet.size}"
        )
    table = bytearray([255]) * 256
    for new_id, old_id in enumerate(ids):
        table[old_id] = new_id
    new_ids, index_map = kernels.filter_sub(a.ids, bytes(table))
    return Restriction(SymbolString(new_ids, a.alphabet.sub(ids)), index_map)


def lift_witness(r_a: Restriction, r_b: Restriction, w: Witness) -> Witness:
    """Map a witness on the restricted pair back to original coordinates."""
    if not validate_witness(r_a.restricted, r_b.restricted, w):
        raise WitnessError("witness invalid for the restricted pair")
    i_arr, j_arr = w.arrays()
    ma, mb = r_a.index_map, r_b.index_map
    return Witness(
        array("q", [ma[i] for i in i_arr]),
        array("q", [mb[j] for j in j_arr]),
    )


# ---------------------------------------------------------------------------
# Constant schedule


@dataclass(frozen=True, slots=True)
class ConstantSchedule:
    """The solver's parameter chain, stored as exact rationals.

    Field roles: ``rho`` balance radius for the balanced-input solver;
    ``rho_prime`` balance radius assumed of the (unknown) optimum;
    ``beta`` end-segment deviation; ``gamma`` balanced-input gain;
    ``delta`` frequency-closeness slack; ``epsilon_prime`` binary-stage gain;
    ``epsilon`` k-ary-stage gain; ``c`` the edit-distance approximator's
    guaranteed ratio. Use :func:`lcsapprox.multi.validate_schedule` to check
    the inequalities the analysis needs.
    """

    rho: Fraction
    rho_prime: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    epsilon_prime: Fraction
    epsilon: Fraction
    c: Fraction

    def replace(self, **kw: Fraction) -> "ConstantSchedule":
        return dataclasses.replace(self, **kw)

    def as_floats(self) -> dict[str, float]:
        return {
            f.name: float(getattr(self, f.name))
            for f in dataclasses.fields(self)
        }
