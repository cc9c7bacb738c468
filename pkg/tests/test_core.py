"""Core types: alphabets, histograms, balance, restrictions, witnesses."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BINARY, TERNARY, bstr, tstr
from lcsapprox.core import (
    Alphabet,
    SymbolString,
    Witness,
    concat_witnesses,
    histogram,
    is_balanced,
    lift_witness,
    restrict,
    shift_witness,
    validate_witness,
)
from lcsapprox.errors import (
    InvalidAlphabetError,
    InvalidSubalphabetError,
    InvalidSymbolError,
    WitnessError,
)
from sweep_support import lift_closure_chunk, run_chunks, split_range, all_strings

sym_strings = st.builds(
    lambda raw, s: SymbolString(bytes(v % s for v in raw), Alphabet.of_size(s)),
    st.binary(max_size=40),
    st.integers(min_value=2, max_value=5),
)


class TestAlphabet:
    def test_size_bounds(self):
        with pytest.raises(InvalidAlphabetError):
            Alphabet(b"0")
        with pytest.raises(InvalidAlphabetError):
            Alphabet(bytes(256))  # duplicates
        assert Alphabet.of_size(255).size == 255
        assert Alphabet.from_text("ACGT").symbols == b"ACGT"

    def test_dense_ids_by_position(self):
        a = Alphabet.from_text("CAB")
        s = SymbolString.from_text("ABC", a)
        assert s.ids == bytes([1, 2, 0])
        with pytest.raises(InvalidSymbolError):
            SymbolString.from_text("ABCD", a)

    def test_checked_rejects_out_of_range(self):
        with pytest.raises(InvalidSymbolError):
            SymbolString.checked(bytes([0, 3]), TERNARY)


class TestHistogram:
    def test_examples(self):
        assert histogram(bstr("")).counts == (0, 0)
        assert histogram(bstr("0101")).counts == (2, 2)
        assert histogram(tstr("000111222")).counts == (3, 3, 3)

    @settings(max_examples=200, deadline=None)
    @given(sym_strings)
    def test_counts_sum_to_length(self, s):
        h = histogram(s)
        assert sum(h.counts) == len(s) == h.total
        assert len(h.counts) == s.alphabet.size


class TestBalance:
    def test_examples(self):
        assert is_balanced(bstr("0101"), Fraction(1, 10))
        assert not is_balanced(bstr("0001"), Fraction(1, 10))
        # counts (6,3,3): n/s = 4, deviation 2 > 1.2
        assert not is_balanced(tstr("000000111222"), Fraction(1, 10))

    def test_exact_boundary(self):
        # counts (3,1): |c - 2| = 1; balanced iff rho >= 1/4, decided exactly
        s = bstr("0001")
        assert is_balanced(s, Fraction(1, 4))
        assert not is_balanced(s, Fraction(1, 4) - Fraction(1, 10**12))

    @settings(max_examples=200, deadline=None)
    @given(sym_strings, st.fractions(min_value="1/100", max_value=1), st.fractions(min_value=0, max_value=1))
    def test_monotone_in_rho(self, s, rho, bump):
        if is_balanced(s, rho):
            assert is_balanced(s, rho + bump)


class TestRestrict:
    def test_examples(self):
        r = restrict(tstr("012012"), {0, 1})
        assert r.restricted.ids == bytes([0, 1, 0, 1])
        assert list(r.index_map) == [0, 1, 3, 4]
        r = restrict(tstr("222"), {0, 1})
        assert r.restricted.ids == b"" and list(r.index_map) == []
        r = restrict(tstr("0102"), {0, 2})
        assert r.restricted.ids == bytes([0, 0, 1])
        assert list(r.index_map) == [0, 2, 3]

    def test_errors(self):
        with pytest.raises(InvalidSubalphabetError):
            restrict(tstr("012"), {0})
        with pytest.raises(InvalidSubalphabetError):
            restrict(tstr("012"), {0, 7})

    @settings(max_examples=200, deadline=None)
    @given(sym_strings, st.data())
    def test_order_preserving_and_maximal(self, s, data):
        size = s.alphabet.size
        sub = data.draw(
            st.sets(st.integers(0, size - 1), min_size=2, max_size=size)
        )
        r = restrict(s, sub)
        idx = list(r.index_map)
        assert idx == sorted(set(idx))
        # reading original positions through the map reproduces the restriction
        sub_sorted = sorted(sub)
        remap = {old: new for new, old in enumerate(sub_sorted)}
        assert bytes(remap[s.ids[i]] for i in idx) == r.restricted.ids
        # maximality: every kept-symbol position appears
        assert len(idx) == sum(s.ids.count(v) for v in sub)


class TestWitness:
    def test_validate_examples(self):
        a, b = bstr("01"), bstr("01")
        assert validate_witness(a, b, Witness.empty())
        assert validate_witness(a, b, Witness.from_pairs([(0, 0), (1, 1)]))
        assert not validate_witness(a, b, Witness.from_pairs([(0, 1), (1, 0)]))

    def test_pairs_view_and_identity(self):
        w = Witness.identity(3)
        assert w.pairs == ((0, 0), (1, 1), (2, 2))
        assert len(w) == w.length == 3

    def test_shift_and_concat(self):
        w1 = Witness.from_pairs([(0, 0), (1, 2)])
        w2 = Witness.from_pairs([(0, 0)])
        joined = concat_witnesses([(w1, 0, 0), (w2, 2, 3)])
        assert joined.pairs == ((0, 0), (1, 2), (2, 3))
        assert shift_witness(w1, 5, 7).pairs == ((5, 7), (6, 9))

    def test_ragged_columns_rejected(self):
        from array import array

        with pytest.raises(WitnessError):
            Witness(array("q", [1]), array("q", []))


class TestLiftWitness:
    def test_examples(self):
        a, b = tstr("012"), tstr("102")
        ra, rb = restrict(a, {0, 2}), restrict(b, {0, 2})
        # restrictions are "02" in both; match both symbols
        w = Witness.from_pairs([(0, 0), (1, 1)])
        lifted = lift_witness(ra, rb, w)
        assert lifted.pairs == ((0, 1), (2, 2))
        assert validate_witness(a, b, lifted)

    def test_empty_and_identity_restriction(self):
        a, b = bstr("0101"), bstr("0110")
        ra, rb = restrict(a, {0, 1}), restrict(b, {0, 1})
        assert lift_witness(ra, rb, Witness.empty()) == Witness.empty()
        w = Witness.from_pairs([(0, 0), (1, 2)])
        assert lift_witness(ra, rb, w) == w

    def test_invalid_witness_rejected(self):
        a, b = tstr("012"), tstr("102")
        ra, rb = restrict(a, {0, 2}), restrict(b, {0, 2})
        with pytest.raises(WitnessError):
            lift_witness(ra, rb, Witness.from_pairs([(1, 0), (0, 1)]))

    def test_closure_exhaustive_binary_len6(self):
        total = len(all_strings(2, 6))
        chunks = [(2, 6, lo, hi) for lo, hi in split_range(total, 8)]
        results = run_chunks(lift_closure_chunk, chunks)
        failures = [f for _, fails in results for f in fails]
        assert not failures, failures[:3]
        assert sum(n for n, _ in results) == total * total

    def test_closure_exhaustive_ternary_len6(self):
        total = len(all_strings(3, 6))
        chunks = [(3, 6, lo, hi) for lo, hi in split_range(total, 16)]
        results = run_chunks(lift_closure_chunk, chunks)
        failures = [f for _, fails in results for f in fails]
        assert not failures, failures[:3]
        assert sum(n for n, _ in results) == total * total * 3
