"""Instance generation, ratio experiments, scaling benchmarks, ingestion.

Reproducibility: every generated instance is a pure function of its spec.
Randomness comes from SplitMix64 in counter mode — value(i) is the SplitMix64
finalizer applied to seed + (i+1) * 0x9E3779B97F4A7C15 (mod 2^64) — so any
language can regenerate instances bit-exactly. Symbols are drawn as
value % s; see the family functions for how each stream is laid out.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from hashlib import sha256
from typing import Any, Callable, Iterable

import numpy as np

from .core import Alphabet, ConstantSchedule, SymbolString, validate_witness
from .errors import (
    AlphabetTooLargeError,
    SpecError,
    UnknownSymbolError,
    WitnessError,
)
from .multi import (
    SolveReport,
    SolverConfig,
    derive_schedule,
    equal_length_lcs_approx,
    lcs_approx,
)
from .binary import binary_lcs_approx
from .oracles import (
    DEFAULT_CELL_CAP,
    ed_banded,
    ed_exact,
    lcs_exact,
)
from .primitives import EdApproximator, best_match, default_ed_approximator

__all__ = [
    "InstanceSpec",
    "ReportRecord",
    "generate",
    "run_experiment",
    "bench_scaling",
    "ingest",
    "splitmix64",
    "schedule_digest",
    "ALGORITHMS",
]

_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_MASK = (1 << 64) - 1

FAMILIES = (
    "uniform-random",
    "skewed-random",
    "unary-adversarial",
    "case-portfolio",
    "near-identical",
)


def splitmix64(seed: int, start: int, count: int) -> np.ndarray:
    """Counter-mode SplitMix64 values for counters start..start+count-1."""
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = (np.uint64(seed & _MASK) + idx * np.uint64(_GOLDEN)).astype(np.uint64)
    z ^= z >> np.uint64(30)
    z *= np.uint64(_MIX1)
    z ^= z >> np.uint64(27)
    z *= np.uint64(_MIX2)
    z ^= z >> np.uint64(31)
    return z


def _splitmix_one(seed: int, counter: int) -> int:
    return int(splitmix64(seed, counter, 1)[0])


# ---------------------------------------------------------------------------
# Instance specs and generation


@dataclass(frozen=True, slots=True)
class InstanceSpec:
    """A fully seeded description of one generated instance."""

    family: str
    n: int
    s: int
    seed: int
    m: int | None = None
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise SpecError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.n < 1:
            raise SpecError(f"n must be >= 1, got {self.n}")
        if self.m is not None and self.m < 1:
            raise SpecError(f"m must be >= 1, got {self.m}")
        if not 2 <= self.s <= 255:
            raise SpecError(f"s must be in [2, 255], got {self.s}")

    def as_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "s": self.s,
            "seed": self.seed,
            "params": dict(self.params),
        }

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> "InstanceSpec":
        known = {"family", "n", "m", "s", "seed", "params"}
        extra = set(raw) - known
        if extra:
            raise SpecError(f"unknown instance spec fields: {sorted(extra)}")
        try:
            return cls(
                family=raw["family"],
                n=int(raw["n"]),
                s=int(raw["s"]),
                seed=int(raw["seed"]),
                m=int(raw["m"]) if raw.get("m") is not None else None,
                params=dict(raw.get("params") or {}),
            )
        except KeyError as exc:
            raise SpecError(f"instance spec is missing field {exc.args[0]!r}") from None


def _ids_uniform(seed: int, start: int, count: int, s: int) -> bytes:
    return (splitmix64(seed, start, count) % np.uint64(s)).astype(np.uint8).tobytes()


def _ids_skewed(seed: int, start: int, count: int, weights: list[float]) -> bytes:
    w = np.asarray(weights, dtype=np.float64)
    cum = np.cumsum(w / w.sum())
    u = splitmix64(seed, start, count).astype(np.float64) / float(1 << 64)
    ids = np.searchsorted(cum, u, side="right").astype(np.uint8)
    np.minimum(ids, len(weights) - 1, out=ids)
    return ids.tobytes()


def _positions_subset(seed: int, start: int, n: int, k: int) -> np.ndarray:
    """k distinct positions in [0, n): the first k slots of a seeded shuffle."""
    keys = splitmix64(seed, start, n)
    order = np.argsort(keys, kind="stable")
    return np.sort(order[:k])


_LAYOUTS = ("uniform", "left", "right", "middle")


def _place_minority(
    seed: int, start: int, length: int, k: int, layout: str
) -> np.ndarray:
    if layout == "left":
        return np.arange(k)
    if layout == "right":
        return np.arange(length - k, length)
    if layout == "middle":
        lo = (length - k) // 2
        return np.arange(lo, lo + k)
    return _positions_subset(seed, start, length, k)


def generate(spec: InstanceSpec) -> tuple[SymbolString, SymbolString]:
    """Deterministically build the instance described by ``spec``."""
    alphabet = Alphabet.of_size(spec.s)
    family = spec.family
    n = spec.n
    m = spec.m if spec.m is not None else n
    seed = spec.seed
    s = spec.s

    if family == "uniform-random":
        a = _ids_uniform(seed, 16, n, s)
        b = _ids_uniform(seed, 16 + n, m, s)
    elif family == "skewed-random":
        weights = list(spec.params.get("skew") or range(1, s + 1))
        if len(weights) != s or any(w <= 0 for w in weights):
            raise SpecError(f"params.skew must hold {s} positive weights")
        a = _ids_skewed(seed, 16, n, weights)
        b = _ids_skewed(seed, 16 + n, m, weights)
    elif family == "near-identical":
        if m != n:
            raise SpecError("near-identical requires m equal to n (field m)")
        edits = int(spec.params.get("edits", 1))
        if edits < 0:
            raise SpecError("params.edits must be >= 0")
        a = _ids_uniform(seed, 16, n, s)
        b = bytearray(a)
        ctr = 16 + n
        for _ in range(edits):
            del_pos = _splitmix_one(seed, ctr) % len(b)
            del b[del_pos]
            ins_pos = _splitmix_one(seed, ctr + 1) % (len(b) + 1)
            sym = _splitmix_one(seed, ctr + 2) % s
            b.insert(ins_pos, sym)
            ctr += 3
        if edits and bytes(b) == a:
            # a deletion re-inserted into identical context; force a change
            pos = _splitmix_one(seed, ctr) % n
            b[pos] = (b[pos] + 1) % s
        b = bytes(b)
    elif family == "unary-adversarial":
        # periodic symbol blocks; the partner string shifts the block index,
        # so the best unary answer is ~n/s of an LCS of ~n - shift
        k0 = max(1, round(n ** (1 / 3)))
        block = int(spec.params.get("block", 0)) or (
            k0 + _splitmix_one(seed, 0) % (k0 + 1)
        )
        rot = 1 + _splitmix_one(seed, 1) % (s - 1)
        idx = np.arange(n, dtype=np.uint64)
        a = ((idx // np.uint64(block)) % np.uint64(s)).astype(np.uint8).tobytes()
        b = (((idx // np.uint64(block)) + np.uint64(rot)) % np.uint64(s)).astype(
            np.uint8
        ).tobytes()
        m = n
    elif family == "case-portfolio":
        if s != 2:
            raise SpecError("case-portfolio generates binary instances (field s)")
        if m > n:
            raise SpecError("case-portfolio requires m <= n (field m)")
        alpha = float(spec.params.get("alpha", 0.3))
        if not 0 < alpha <= 1:
            raise SpecError("params.alpha must be in (0, 1]")
        delta = float(spec.params.get("delta", 0.05))
        ones_x = int(alpha * m)
        layout_x = _LAYOUTS[_splitmix_one(seed, 0) % len(_LAYOUTS)]
        layout_y = _LAYOUTS[_splitmix_one(seed, 1) % len(_LAYOUTS)]
        jitter_range = 2 * int(delta * m) + 1
        zeros_y = ones_x + _splitmix_one(seed, 2) % jitter_range - int(delta * m)
        zeros_y = min(max(zeros_y, 0), m)
        xa = np.zeros(n, dtype=np.uint8)
        xa[_place_minority(seed, 16, n, ones_x, layout_x)] = 1
        yb = np.ones(m, dtype=np.uint8)
        yb[_place_minority(seed, 16 + n, m, zeros_y, layout_y)] = 0
        a, b = xa.tobytes(), yb.tobytes()
    else:  # pragma: no cover - guarded by InstanceSpec
        raise SpecError(f"unknown family {family!r}")

    return SymbolString(a, alphabet), SymbolString(b, alphabet)


# ---------------------------------------------------------------------------
# Algorithms available to experiments and benchmarks


def _solve_bm(a: SymbolString, b: SymbolString, schedule, ed) -> SolveReport:
    cand = best_match(a, b)
    return SolveReport(answer=cand, candidates=[cand], path="bm", schedule=schedule)


def _solve_binary(a, b, schedule, ed) -> SolveReport:
    cand = binary_lcs_approx(a, b, schedule, ed)
    base = best_match(a, b)
    return SolveReport(
        answer=cand, candidates=[base, cand], path="binary", schedule=schedule
    )


def _solve_equal(a, b, schedule, ed) -> SolveReport:
    return equal_length_lcs_approx(a, b, schedule, ed)


def _solve_auto(a, b, schedule, ed) -> SolveReport:
    return lcs_approx(a, b, SolverConfig(mode="auto", schedule=schedule, ed=ed))


def _solve_reduce(a, b, schedule, ed) -> SolveReport:
    return lcs_approx(a, b, SolverConfig(mode="reduce", schedule=schedule, ed=ed))


ALGORITHMS: dict[str, Callable[..., SolveReport]] = {
    "bm": _solve_bm,
    "binary": _solve_binary,
    "equal": _solve_equal,
    "auto": _solve_auto,
    "reduce": _solve_reduce,
}


def schedule_digest(schedule: ConstantSchedule | None) -> str:
    if schedule is None:
        return "none"
    blob = ";".join(
        f"{name}={getattr(schedule, name)}"
        for name in (
            "rho",
            "rho_prime",
            "beta",
            "gamma",
            "delta",
            "epsilon_prime",
            "epsilon",
            "c",
        )
    )
    return sha256(blob.encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# Experiments


@dataclass(slots=True)
class ReportRecord:
    """One (instance, algorithm) result in canonical, diffable form."""

    instance: dict[str, Any]
    algorithm: str
    output_length: int
    exact_length: int | None
    ratio: float | None
    wall_ms: float | None
    candidates: list[tuple[str, int]]
    schedule_digest: str

    def to_json_line(self) -> str:
        payload = {
            "instance": self.instance,
            "algorithm": self.algorithm,
            "output_length": self.output_length,
            "exact_length": self.exact_length,
            "ratio": self.ratio,
            "wall_ms": self.wall_ms,
            "candidates": [[s, l] for s, l in self.candidates],
            "schedule_digest": self.schedule_digest,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _run_one(
    task: tuple[int, dict[str, Any], str, int, bool]
) -> tuple[int, ReportRecord]:
    idx, spec_raw, algo_name, exact_cap, timing = task
    spec = InstanceSpec.from_dict(spec_raw)
    a, b = generate(spec)
    schedule = derive_schedule(spec.s, 1)
    ed = default_ed_approximator()
    solve = ALGORITHMS[algo_name]
    t0 = time.perf_counter()
    report = solve(a, b, schedule, ed)
    elapsed_ms = (time.perf_counter() - t0) * 1e3
    if not validate_witness(a, b, report.answer.witness):
        raise WitnessError(
            f"invalid witness from {algo_name} on instance {spec_raw!r}"
        )
    exact = None
    if len(a) * len(b) <= exact_cap:
        exact, _ = lcs_exact(a, b, max_cells=exact_cap)
    record = ReportRecord(
        instance=spec.as_dict(),
        algorithm=algo_name,
        output_length=report.length,
        exact_length=exact,
        ratio=(
            None
            if exact is None
            else (1.0 if exact == 0 else report.length / exact)
        ),
        wall_ms=round(elapsed_ms, 3) if timing else None,
        candidates=report.breakdown(),
        schedule_digest=schedule_digest(report.schedule),
    )
    return idx, record


def run_experiment(
    specs: Iterable[InstanceSpec],
    algorithms: Iterable[str],
    *,
    exact_cap: int = DEFAULT_CELL_CAP,
    workers: int = 1,
    timing: bool = False,
) -> list[ReportRecord]:
    """Run every (instance, algorithm) pair and return canonically ordered records.

    Witness validation failures raise (they are correctness bugs, never
    swallowed). Records come back sorted by (instance index, algorithm
    index) regardless of worker scheduling; timing is off by default so two
    runs of the same config produce byte-identical reports.
    """
    algorithms = list(algorithms)
    for name in algorithms:
        if name not in ALGORITHMS:
            raise SpecError(f"unknown algorithm {name!r} (field algorithms)")
    tasks = []
    for i, spec in enumerate(specs):
        for k, algo in enumerate(algorithms):
            tasks.append(
                (i * len(algorithms) + k, spec.as_dict(), algo, exact_cap, timing)
            )
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=8))
    else:
        results = [_run_one(t) for t in tasks]
    results.sort(key=lambda pair: pair[0])
    return [record for _, record in results]


# ---------------------------------------------------------------------------
# Scaling benchmarks


def _bench_lcs_exact(a, b, schedule, ed):
    lcs_exact(a, b, max_cells=len(a) * len(b) + 1)


def _bench_ed_exact(a, b, schedule, ed):
    ed_exact(a, b, max_cells=len(a) * len(b) + 1)


def _bench_ed_banded(a, b, schedule, ed):
    ed_banded(a, b)


_BENCH_EXTRA: dict[str, Callable[..., Any]] = {
    "lcs-exact": _bench_lcs_exact,
    "ed-exact": _bench_ed_exact,
    "ed-banded": _bench_ed_banded,
}


def bench_algorithms() -> list[str]:
    return sorted(ALGORITHMS) + sorted(_BENCH_EXTRA)


def bench_scaling(
    algorithm: str,
    sizes: list[int],
    family: str,
    seed: int,
    *,
    s: int = 2,
    reps: int = 3,
    params: dict[str, Any] | None = None,
) -> dict[str, Any]:
    """Wall times per size (best of ``reps``) plus a fitted log-log slope.

    Only the solve is timed; generation and any oracle work are excluded.
    """
    if sorted(sizes) != list(sizes):
        raise SpecError("sizes must be ascending (field sizes)")
    if algorithm in ALGORITHMS:
        fn = ALGORITHMS[algorithm]
    elif algorithm in _BENCH_EXTRA:
        fn = _BENCH_EXTRA[algorithm]
    else:
        raise SpecError(f"unknown bench algorithm {algorithm!r} (field algo)")
    ed = default_ed_approximator()
    times: list[float] = []
    for size in sizes:
        spec = InstanceSpec(family=family, n=size, s=s, seed=seed, params=params or {})
        a, b = generate(spec)
        schedule = derive_schedule(s, 1)
        best = float("inf")
        for _ in range(reps):
            t0 = time.perf_counter()
            fn(a, b, schedule, ed)
            best = min(best, time.perf_counter() - t0)
        times.append(best)
    slope = float(
        np.polyfit(np.log2(np.asarray(sizes, float)), np.log2(np.asarray(times)), 1)[0]
    )
    return {
        "algorithm": algorithm,
        "family": family,
        "s": s,
        "seed": seed,
        "sizes": list(sizes),
        "seconds": times,
        "slope": slope,
    }


# ---------------------------------------------------------------------------
# Ingestion


_WHITESPACE = b" \t\r\n\x0b\x0c"


def ingest(
    path_a: str,
    path_b: str,
    alphabet_mode: str = "auto",
    *,
    keep_whitespace: bool = False,
) -> tuple[SymbolString, SymbolString]:
    """Read two byte files and map them onto one dense-id alphabet.

    ``alphabet_mode`` is either "auto" (alphabet = the union of observed byte
    values, ascending) or an explicit string whose characters define the
    alphabet in id order. Whitespace bytes are dropped unless
    ``keep_whitespace`` is set.
    """
    raws = []
    for path in (path_a, path_b):
        with open(path, "rb") as fh:
            raw = fh.read()
        if not keep_whitespace:
            raw = raw.translate(None, delete=_WHITESPACE)
        raws.append(raw)

    if alphabet_mode == "auto":
        observed = sorted(set(raws[0]) | set(raws[1]))
        if len(observed) > 255:
            raise AlphabetTooLargeError(
                f"{len(observed)} distinct byte values; at most 255 are supported"
            )
        if len(observed) < 2:
            raise SpecError(
                "fewer than 2 distinct byte values observed; pass an explicit "
                "alphabet (field alphabet)"
            )
        alphabet = Alphabet(bytes(observed))
    else:
        symbols = alphabet_mode.encode("latin-1")
        if len(symbols) > 255:
            raise AlphabetTooLargeError("explicit alphabet exceeds 255 symbols")
        alphabet = Alphabet(symbols)

    table = {v: i for i, v in enumerate(alphabet.symbols)}
    out: list[SymbolString] = []
    for path, raw in zip((path_a, path_b), raws):
        try:
            ids = bytes(table[v] for v in raw)
        except KeyError as exc:
            raise UnknownSymbolError(
                f"{path}: byte {exc.args[0]!r} not in the explicit alphabet"
            ) from None
        out.append(SymbolString(ids, alphabet))
    return out[0], out[1]
