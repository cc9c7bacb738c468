"""Shared enumeration helpers and process-pool workers for the heavy sweeps.

The exhaustive acceptance checks iterate millions of string pairs; the
workers here are plain top-level functions so they can be dispatched to a
fork-based process pool and return compact aggregates (counts plus the first
few failures, which should always be empty).
"""

from __future__ import annotations

import multiprocessing
import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from lcsapprox._backend import kernels
from lcsapprox.binary import binary_lcs_approx
from lcsapprox.core import (
    Alphabet,
    SymbolString,
    lift_witness,
    restrict,
    validate_witness,
)
from lcsapprox.multi import derive_schedule, equal_length_lcs_approx
from lcsapprox.oracles import ed_banded, ed_exact, lcs_bruteforce, lcs_exact
from lcsapprox.primitives import best_match, default_ed_approximator
from lcsapprox.core import Witness

WORKERS = max(1, os.cpu_count() or 1)

MAX_FAILURES = 5


def run_chunks(worker, chunks: list) -> list:
    """Map worker over chunks, in parallel when the host has the cores."""
    if WORKERS > 1 and len(chunks) > 1:
        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=WORKERS, mp_context=ctx) as pool:
            return list(pool.map(worker, chunks))
    return [worker(c) for c in chunks]


def split_range(total: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step = (total + pieces - 1) // pieces
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


@lru_cache(maxsize=None)
def all_strings(base: int, max_len: int) -> tuple[bytes, ...]:
    """All strings over ids 0..base-1 of length 0..max_len (shortlex order)."""
    out: list[bytes] = [b""]
    level: list[bytes] = [b""]
    for _ in range(max_len):
        level = [s + bytes([c]) for s in level for c in range(base)]
        out.extend(level)
    return tuple(out)


@lru_cache(maxsize=None)
def fixed_length_strings(base: int, length: int) -> tuple[bytes, ...]:
    out: list[bytes] = [b""]
    for _ in range(length):
        out = [s + bytes([c]) for s in out for c in range(base)]
    return tuple(out)


# ---------------------------------------------------------------------------
# Criterion 1 (+ frequency-bound invariant): identity over binary pairs


def identity_chunk(args: tuple[int, int, int]) -> tuple[int, list]:
    """2*lcs + ed == n + m and lcs <= min0 + min1 over binary pairs."""
    max_len, lo, hi = args
    strs = all_strings(2, max_len)
    alphabet = Alphabet.of_size(2)
    syms = [SymbolString(s, alphabet) for s in strs]
    checked = 0
    failures: list = []
    for a_sym in syms[lo:hi]:
        a = a_sym.ids
        a0 = a.count(0)
        a1 = len(a) - a0
        for b_sym in syms:
            b = b_sym.ids
            lcs_len, w = lcs_exact(a_sym, b_sym)
            ed_len = ed_exact(a_sym, b_sym)
            checked += 1
            if 2 * lcs_len + ed_len != len(a) + len(b):
                failures.append(("identity", a, b, lcs_len, ed_len))
            if not validate_witness(a_sym, b_sym, w) or len(w) != lcs_len:
                failures.append(("lcs-witness", a, b))
            b0 = b.count(0)
            b1 = len(b) - b0
            if lcs_len > min(a0, b0) + min(a1, b1):
                failures.append(("freq-bound", a, b))
            if len(failures) >= MAX_FAILURES:
                return checked, failures
    return checked, failures


# ---------------------------------------------------------------------------
# Criterion 2: oracle equivalence over binary pairs


def oracle_equiv_chunk(args: tuple[int, int, int]) -> tuple[int, list]:
    max_len, lo, hi = args
    strs = all_strings(2, max_len)
    alphabet = Alphabet.of_size(2)
    syms = [SymbolString(s, alphabet) for s in strs]
    checked = 0
    failures: list = []
    for a_sym in syms[lo:hi]:
        for b_sym in syms:
            lcs_len, _ = lcs_exact(a_sym, b_sym)
            brute = lcs_bruteforce(a_sym, b_sym)
            banded = ed_banded(a_sym, b_sym)
            full = ed_exact(a_sym, b_sym)
            checked += 1
            if lcs_len != brute:
                failures.append(("lcs", a_sym.ids, b_sym.ids, lcs_len, brute))
            if banded != full:
                failures.append(("ed", a_sym.ids, b_sym.ids, banded, full))
            if len(failures) >= MAX_FAILURES:
                return checked, failures
    return checked, failures


# ---------------------------------------------------------------------------
# Criterion 4, s = 3 part: unary baseline floor via the count identity


def bm_floor_ternary_chunk(args: tuple[int, int, int]) -> tuple[int, list]:
    """3 * (max-symbol min-count) >= lcs over all ternary pairs.

    Uses the count formula for the baseline length; its equality with
    best_match is asserted exhaustively elsewhere (test_primitives).
    """
    max_len, lo, hi = args
    strs = all_strings(3, max_len)
    counts = [(s.count(0), s.count(1), s.count(2)) for s in strs]
    lcs_len = kernels.lcs_len
    checked = 0
    failures: list = []
    for ia in range(lo, hi):
        a = strs[ia]
        a0, a1, a2 = counts[ia]
        for ib, b in enumerate(strs):
            b0, b1, b2 = counts[ib]
            m0 = a0 if a0 < b0 else b0
            m1 = a1 if a1 < b1 else b1
            m2 = a2 if a2 < b2 else b2
            bm = m0 if m0 >= m1 else m1
            if m2 > bm:
                bm = m2
            if 3 * bm < lcs_len(a, b):
                failures.append((a, b, bm, lcs_len(a, b)))
                if len(failures) >= MAX_FAILURES:
                    return checked, failures
            checked += 1
    return checked, failures


# ---------------------------------------------------------------------------
# Criteria 5 + 7 (+ portfolio dominance): binary solver sweep


def binary_solver_chunk(args: tuple[int, int, int]) -> tuple[int, int, list]:
    max_len, lo, hi = args
    strs = all_strings(2, max_len)
    alphabet = Alphabet.of_size(2)
    syms = [SymbolString(s, alphabet) for s in strs]
    schedule = derive_schedule(2, 1)
    ed = default_ed_approximator()
    checked = 0
    gap_checked = 0
    failures: list = []
    for a_sym in syms[lo:hi]:
        a = a_sym.ids
        a0 = a.count(0)
        a1 = len(a) - a0
        for b_sym in syms:
            b = b_sym.ids
            out = binary_lcs_approx(a_sym, b_sym, schedule, ed)
            lcs_len = kernels.lcs_len(a, b)
            bm = best_match(a_sym, b_sym).length
            checked += 1
            if not validate_witness(a_sym, b_sym, out.witness):
                failures.append(("witness", a, b))
            if 2 * out.length < lcs_len:
                failures.append(("floor", a, b, out.length, lcs_len))
            if out.length < bm:
                failures.append(("dominance", a, b, out.length, bm))
            b0 = b.count(0)
            b1 = len(b) - b0
            min0 = a0 if a0 < b0 else b0
            min1 = a1 if a1 < b1 else b1
            if 2 * min0 > 3 * min1 or 2 * min1 > 3 * min0:
                gap_checked += 1
                if 5 * bm < 3 * lcs_len:
                    failures.append(("gap-ratio", a, b, bm, lcs_len))
            if len(failures) >= MAX_FAILURES:
                return checked, gap_checked, failures
    return checked, gap_checked, failures


# ---------------------------------------------------------------------------
# Criterion 6: equal-length ternary solver sweep


def ternary_equal_chunk(args: tuple[int, int, int]) -> tuple[int, list]:
    length, lo, hi = args
    strs = fixed_length_strings(3, length)
    alphabet = Alphabet.of_size(3)
    syms = [SymbolString(s, alphabet) for s in strs]
    schedule = derive_schedule(3, 1)
    ed = default_ed_approximator()
    checked = 0
    failures: list = []
    for a_sym in syms[lo:hi]:
        a = a_sym.ids
        for b_sym in syms:
            rep = equal_length_lcs_approx(a_sym, b_sym, schedule, ed)
            lcs_len = kernels.lcs_len(a, b_sym.ids)
            checked += 1
            if not validate_witness(a_sym, b_sym, rep.answer.witness):
                failures.append(("witness", a, b_sym.ids))
            if 3 * rep.answer.length < lcs_len:
                failures.append(("floor", a, b_sym.ids, rep.answer.length, lcs_len))
            if rep.answer.length < rep.candidates[0].length:
                failures.append(("dominance", a, b_sym.ids))
            if len(failures) >= MAX_FAILURES:
                return checked, failures
    return checked, failures


# ---------------------------------------------------------------------------
# Criterion 4, s = 2 part: unary baseline floor via the public API


def bm_floor_binary_chunk(args: tuple[int, int, int]) -> tuple[int, list]:
    max_len, lo, hi = args
    strs = all_strings(2, max_len)
    alphabet = Alphabet.of_size(2)
    syms = [SymbolString(s, alphabet) for s in strs]
    checked = 0
    failures: list = []
    for a_sym in syms[lo:hi]:
        for b_sym in syms:
            bm = best_match(a_sym, b_sym).length
            lcs_len = kernels.lcs_len(a_sym.ids, b_sym.ids)
            checked += 1
            if 2 * bm < lcs_len:
                failures.append((a_sym.ids, b_sym.ids, bm, lcs_len))
                if len(failures) >= MAX_FAILURES:
                    return checked, failures
    return checked, failures


# ---------------------------------------------------------------------------
# Criterion 8: rejection-sampled imbalanced pairs


def imbalanced_sample_chunk(args: tuple[int, int]) -> tuple[int, int, list]:
    """Sample non-balanced pairs and run the subalphabet finder on each.

    Returns (pairs checked, contradiction errors, verify failures).
    """
    from fractions import Fraction

    from lcsapprox.core import is_balanced
    from lcsapprox.errors import ContradictionError
    from lcsapprox.harness import InstanceSpec, generate, splitmix64
    from lcsapprox.restriction import find_imbalanced_pair, verify_pair

    lo, hi = args
    rho = Fraction(1, 20)
    checked = 0
    contradictions = 0
    failures: list = []
    for trial in range(lo, hi):
        s = 3 + trial % 4
        length = 50 + (trial * 2654435761) % 451
        attempt = 0
        while True:
            seed = 1_000_000 + trial * 1009 + attempt
            weights = [1 + int(v % 9) for v in splitmix64(seed, 0, s)]
            spec = InstanceSpec(
                family="skewed-random",
                n=length,
                m=length,
                s=s,
                seed=seed,
                params={"skew": weights},
            )
            a, b = generate(spec)
            if not is_balanced(a, rho) and not is_balanced(b, rho):
                break
            attempt += 1
        checked += 1
        try:
            pair = find_imbalanced_pair(a, b, rho)
        except ContradictionError:
            contradictions += 1
            continue
        if not verify_pair(a, b, pair, rho):
            failures.append((s, length, trial, pair))
    return checked, contradictions, failures[:MAX_FAILURES]


# ---------------------------------------------------------------------------
# Criterion 10: exact-ED approximator recovers the exact LCS


def approx_ed_equal_chunk(args: tuple[int, int]) -> tuple[int, list]:
    from lcsapprox.harness import InstanceSpec, generate, splitmix64
    from lcsapprox.primitives import approx_ed_lcs

    lo, hi = args
    checked = 0
    failures: list = []
    for trial in range(lo, hi):
        n = 1 + int(splitmix64(7777, trial, 1)[0] % 2000)
        spec = InstanceSpec(
            family="uniform-random", n=n, m=n, s=2, seed=50_000 + trial
        )
        a, b = generate(spec)
        cand = approx_ed_lcs(a, b)
        lcs_len, _ = lcs_exact(a, b)
        checked += 1
        if cand.length != lcs_len or not validate_witness(a, b, cand.witness):
            failures.append((n, trial, cand.length, lcs_len))
            if len(failures) >= MAX_FAILURES:
                return checked, failures
    return checked, failures


# ---------------------------------------------------------------------------
# Witness-lift closure sweep (core invariant)


def lift_closure_chunk(args: tuple[int, int, int, int]) -> tuple[int, list]:
    """Witnesses on restrictions lift to valid witnesses of equal length."""
    base, max_len, lo, hi = args
    strs = all_strings(base, max_len)
    alphabet = Alphabet.of_size(base)
    syms = [SymbolString(s, alphabet) for s in strs]
    subsets = [
        (i, j) for i in range(base) for j in range(i + 1, base)
    ]
    checked = 0
    failures: list = []
    for a_sym in syms[lo:hi]:
        for b_sym in syms:
            for sub in subsets:
                ra = restrict(a_sym, sub)
                rb = restrict(b_sym, sub)
                ii, jj = kernels.lcs_small(ra.restricted.ids, rb.restricted.ids)
                w = Witness(ii, jj)
                if not validate_witness(ra.restricted, rb.restricted, w):
                    failures.append(("restricted-witness", a_sym.ids, b_sym.ids, sub))
                    continue
                lifted = lift_witness(ra, rb, w)
                checked += 1
                if len(lifted) != len(w) or not validate_witness(
                    a_sym, b_sym, lifted
                ):
                    failures.append(("lift", a_sym.ids, b_sym.ids, sub))
                if len(failures) >= MAX_FAILURES:
                    return checked, failures
    return checked, failures
