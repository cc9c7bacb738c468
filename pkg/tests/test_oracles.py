"""Exact oracles: LCS, indel edit distance, banded ED, brute force."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BINARY, bstr, kstr
from lcsapprox.core import Alphabet, SymbolString, validate_witness
from lcsapprox.errors import InvalidAlphabetError, SizeLimitError
from lcsapprox.oracles import (
    BandConfig,
    ed_banded,
    ed_banded_alignment,
    ed_exact,
    lcs_bruteforce,
    lcs_exact,
)


def rand_pair(rng, s, max_n, max_m=None):
    alphabet = Alphabet.of_size(s)
    n = rng.randrange(max_n + 1)
    m = rng.randrange((max_m if max_m is not None else max_n) + 1)
    return (
        SymbolString(bytes(rng.randrange(s) for _ in range(n)), alphabet),
        SymbolString(bytes(rng.randrange(s) for _ in range(m)), alphabet),
    )


class TestLcsExact:
    def test_examples(self):
        length, w = lcs_exact(bstr("0110"), bstr("0110"))
        assert length == 4 and w.pairs == ((0, 0), (1, 1), (2, 2), (3, 3))
        assert lcs_exact(bstr("01"), bstr("10"))[0] == 1
        assert lcs_exact(bstr("0011"), bstr("0101"))[0] == 3

    def test_witness_always_validates(self):
        rng = random.Random(2)
        for _ in range(300):
            a, b = rand_pair(rng, rng.choice([2, 3, 4]), 40)
            length, w = lcs_exact(a, b)
            assert len(w) == length
            assert validate_witness(a, b, w)

    def test_divide_and_conquer_path(self):
        # large enough to recurse past the small-table threshold
        rng = random.Random(3)
        a, b = rand_pair(rng, 2, 0)
        a = SymbolString(bytes(rng.randrange(2) for _ in range(700)), BINARY)
        b = SymbolString(bytes(rng.randrange(2) for _ in range(800)), BINARY)
        length, w = lcs_exact(a, b)
        assert validate_witness(a, b, w) and len(w) == length
        assert length == lcs_exact(b, a)[0]

    def test_cell_cap(self):
        a = SymbolString(bytes(100), BINARY)
        with pytest.raises(SizeLimitError, match="cell cap"):
            lcs_exact(a, a, max_cells=9999)

    def test_alphabet_mismatch(self):
        with pytest.raises(InvalidAlphabetError):
            lcs_exact(bstr("01"), kstr("01", 3))


class TestBruteForce:
    def test_examples(self):
        assert lcs_bruteforce(bstr(""), bstr("0101")) == 0
        assert lcs_bruteforce(bstr("000"), bstr("000")) == 3
        assert lcs_bruteforce(bstr("0011"), bstr("0101")) == 3

    def test_length_cap(self):
        a = SymbolString(bytes(21), BINARY)
        with pytest.raises(SizeLimitError):
            lcs_bruteforce(a, a)

    def test_matches_dp_small_exhaustive(self):
        # all binary pairs with n, m <= 5 (acceptance covers n, m <= 10)
        strs = [
            bytes((bits >> k) & 1 for k in range(n))
            for n in range(6)
            for bits in range(2**n)
        ]
        for a in strs:
            sa = SymbolString(a, BINARY)
            for b in strs:
                sb = SymbolString(b, BINARY)
                assert lcs_bruteforce(sa, sb) == lcs_exact(sa, sb)[0]


class TestEdExact:
    def test_examples(self):
        assert ed_exact(bstr("0101"), bstr("0101")) == 0
        assert ed_exact(bstr("01"), bstr("10")) == 2
        assert ed_exact(bstr("0011"), bstr("0101")) == 2

    def test_cell_cap(self):
        a = SymbolString(bytes(100), BINARY)
        with pytest.raises(SizeLimitError):
            ed_exact(a, a, max_cells=9999)

    @settings(max_examples=300, deadline=None)
    @given(st.binary(max_size=16), st.binary(max_size=16), st.integers(2, 4))
    def test_identity_with_lcs(self, rawa, rawb, s):
        alphabet = Alphabet.of_size(s)
        a = SymbolString(bytes(v % s for v in rawa), alphabet)
        b = SymbolString(bytes(v % s for v in rawb), alphabet)
        assert 2 * lcs_exact(a, b)[0] + ed_exact(a, b) == len(a) + len(b)


class TestEdBanded:
    def test_examples(self):
        long_equal = SymbolString(bytes(10**5), BINARY)
        assert ed_banded(long_equal, long_equal) == 0
        assert ed_banded(bstr("0011"), bstr("0101")) == 2
        assert ed_banded(bstr("0" * 8), bstr("1" * 8)) == 16

    def test_equals_exact_random(self):
        rng = random.Random(4)
        for _ in range(250):
            a, b = rand_pair(rng, rng.choice([2, 3]), 60)
            assert ed_banded(a, b) == ed_exact(a, b)

    def test_initial_band_config(self):
        a, b = bstr("0011"), bstr("0101")
        assert ed_banded(a, b, BandConfig(initial_band=64)) == 2

    def test_bad_config(self):
        with pytest.raises(SizeLimitError):
            BandConfig(initial_band=0)


class TestBandedAlignment:
    def test_witness_is_exact_lcs(self):
        rng = random.Random(5)
        for _ in range(200):
            a, b = rand_pair(rng, 2, 50)
            d, w = ed_banded_alignment(a, b)
            assert d == ed_exact(a, b)
            assert validate_witness(a, b, w)
            assert len(w) == lcs_exact(a, b)[0]

    def test_divide_and_conquer_small_cap(self):
        # tiny table cap forces the banded divide-and-conquer recursion
        rng = random.Random(6)
        config = BandConfig(initial_band=1, max_cells=64)
        for _ in range(60):
            a, b = rand_pair(rng, 2, 90)
            d, w = ed_banded_alignment(a, b, config)
            assert d == ed_exact(a, b)
            assert validate_witness(a, b, w)
            assert 2 * len(w) + d == len(a) + len(b)

    def test_identity_fast_path(self):
        a = SymbolString(bytes(50000), BINARY)
        d, w = ed_banded_alignment(a, a)
        assert d == 0 and len(w) == 50000
        assert validate_witness(a, a, w)
