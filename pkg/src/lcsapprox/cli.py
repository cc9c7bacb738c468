"""Command line interface.

Subcommands: approx (run the approximation solvers on two files), exact
(oracle lengths), gen (write a seeded instance), experiment (batch runs to
JSONL), bench (runtime scaling), kernels (compiled vs pure-Python backend
comparison).

Exit codes: 0 success, 2 precondition or spec error, 3 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from ._backend import backend_name
from .core import ConstantSchedule
from .errors import ContradictionError, PreconditionError, SpecError, WitnessError
from .harness import (
    ALGORITHMS,
    InstanceSpec,
    ReportRecord,
    bench_algorithms,
    bench_scaling,
    generate,
    ingest,
    run_experiment,
    schedule_digest,
)
from .multi import SolverConfig, derive_schedule, lcs_approx, validate_schedule
from .oracles import DEFAULT_CELL_CAP, ed_exact, lcs_exact


def _load_schedule(path: str) -> ConstantSchedule:
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    fields = (
        "rho",
        "rho_prime",
        "beta",
        "gamma",
        "delta",
        "epsilon_prime",
        "epsilon",
        "c",
    )
    missing = [f for f in fields if f not in raw]
    if missing:
        raise SpecError(f"schedule file is missing fields {missing}")
    values = {}
    for name in fields:
        v = raw[name]
        values[name] = Fraction(str(v)) if isinstance(v, str) else Fraction(v)
    return ConstantSchedule(**values)


def _cmd_approx(args: argparse.Namespace) -> int:
    a, b = ingest(args.a, args.b, args.alphabet, keep_whitespace=args.keep_whitespace)
    s = a.alphabet.size
    if args.schedule == "default":
        schedule = derive_schedule(s, 1)
    else:
        schedule = _load_schedule(args.schedule)
        if not validate_schedule(schedule, s):
            raise SpecError(
                f"schedule from {args.schedule} violates the invariants for s={s}"
            )
    config = SolverConfig(mode=args.mode, ell=args.ell, schedule=schedule)
    t0 = time.perf_counter()
    report = lcs_approx(a, b, config)
    elapsed_ms = (time.perf_counter() - t0) * 1e3
    print(
        f"n={len(a)} m={len(b)} s={s} mode={args.mode} "
        f"length={report.length} strategy={report.answer.strategy} path={report.path}"
    )
    if args.json:
        record = ReportRecord(
            instance={"a": args.a, "b": args.b, "n": len(a), "m": len(b), "s": s},
            algorithm=f"approx:{args.mode}",
            output_length=report.length,
            exact_length=None,
            ratio=None,
            wall_ms=round(elapsed_ms, 3),
            candidates=report.breakdown(),
            schedule_digest=schedule_digest(report.schedule),
        )
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(record.to_json_line() + "\n")
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    a, b = ingest(args.a, args.b, args.alphabet, keep_whitespace=args.keep_whitespace)
    lcs_len, _ = lcs_exact(a, b, max_cells=args.max_cells)
    ed_len = ed_exact(a, b, max_cells=args.max_cells)
    if 2 * lcs_len + ed_len != len(a) + len(b):
        raise ContradictionError(
            "oracle identity 2*lcs + ed = n + m failed "
            f"({2 * lcs_len} + {ed_len} != {len(a) + len(b)})"
        )
    print(f"n={len(a)} m={len(b)} lcs={lcs_len} ed={ed_len} identity=ok")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    params = json.loads(args.params) if args.params else {}
    spec = InstanceSpec(
        family=args.family, n=args.n, m=args.m, s=args.s, seed=args.seed, params=params
    )
    a, b = generate(spec)
    path_a = f"{args.out}.a"
    path_b = f"{args.out}.b"
    with open(path_a, "wb") as fh:
        fh.write(a.ids)
    with open(path_b, "wb") as fh:
        fh.write(b.ids)
    print(
        f"wrote {path_a} ({len(a)} symbols) and {path_b} ({len(b)} symbols); "
        f"family={spec.family} s={spec.s} seed={spec.seed}"
    )
    return 0


def _cmd_experiment(args: argparse.Namespace) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict) or "specs" not in raw:
        raise SpecError("experiment config must be an object with a specs list")
    specs = [InstanceSpec.from_dict(item) for item in raw["specs"]]
    algorithms = raw.get("algorithms") or ["bm", "auto"]
    options = raw.get("options") or {}
    known = {"exact_cap", "workers", "timing"}
    extra = set(options) - known
    if extra:
        raise SpecError(f"unknown experiment options: {sorted(extra)}")
    records = run_experiment(
        specs,
        algorithms,
        exact_cap=int(options.get("exact_cap", DEFAULT_CELL_CAP)),
        workers=int(options.get("workers", 1)),
        timing=bool(options.get("timing", False)),
    )
    with open(args.out, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(record.to_json_line() + "\n")
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    sizes = [int(x) for x in args.sizes.split(",") if x]
    params = json.loads(args.params) if args.params else {}
    result = bench_scaling(
        args.algo,
        sizes,
        args.family,
        args.seed,
        s=args.s,
        reps=args.reps,
        params=params,
    )
    print(f"algorithm={result['algorithm']} family={result['family']} "
          f"s={result['s']} seed={result['seed']} backend={backend_name()}")
    print(f"{'size':>10} {'seconds':>12}")
    for size, sec in zip(result["sizes"], result["seconds"]):
        print(f"{size:>10} {sec:>12.6f}")
    print(f"log-log slope: {result['slope']:.3f}")
    return 0


def _cmd_kernels(args: argparse.Namespace) -> int:
    from . import _pykernels

    try:
        from . import _ckernels
    except ImportError:
        _ckernels = None

    from .harness import splitmix64

    sizes = [int(x) for x in args.sizes.split(",") if x]

    def gen_pair(n: int) -> tuple[bytes, bytes]:
        a = (splitmix64(args.seed, 16, n) % 2).astype("uint8").tobytes()
        b = bytearray(a)
        b[n // 2] ^= 1
        return a, bytes(b)

    def bench(fn, *fn_args) -> float:
        best = float("inf")
        for _ in range(args.reps):
            t0 = time.perf_counter()
            fn(*fn_args)
            best = min(best, time.perf_counter() - t0)
        return best

    def banded_distance(mod, a: bytes, b: bytes) -> int:
        band = 1
        while True:
            d = mod.ed_banded_pass(a, b, band)
            if d <= band:
                return d
            band *= 2

    print(f"backends: python{' + compiled' if _ckernels else ' only'}")
    header = f"{'kernel':<16} {'n':>9} {'python_s':>12} {'compiled_s':>12} {'speedup':>9}"
    print(header)
    for n in sizes:
        a, b = gen_pair(n)
        rows = [
            ("lcs_len", lambda mod: bench(mod.lcs_len, a, b)),
            ("ed_banded", lambda mod: bench(banded_distance, mod, a, b)),
            ("positions", lambda mod: bench(mod.positions, a, 0, a.count(0))),
            ("greedy_scan", lambda mod: bench(mod.greedy_scan, 5, 5, 5, 5, b)),
        ]
        for name, runner in rows:
            py_t = runner(_pykernels)
            if _ckernels is not None:
                c_t = runner(_ckernels)
                print(f"{name:<16} {n:>9} {py_t:>12.6f} {c_t:>12.6f} {py_t / c_t:>8.1f}x")
            else:
                print(f"{name:<16} {n:>9} {py_t:>12.6f} {'-':>12} {'-':>9}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcsapprox",
        description="Approximate LCS over constant-size alphabets, with exact "
        "oracles and a measurement harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("approx", help="run the approximation solver on two files")
    p.add_argument("--a", required=True, help="first input file")
    p.add_argument("--b", required=True, help="second input file")
    p.add_argument("--alphabet", default="auto", help="'auto' or explicit symbol list")
    p.add_argument(
        "--mode", default="auto", choices=["auto", "equal", "binary", "reduce"]
    )
    p.add_argument("--ell", type=int, default=2, help="subalphabet size for reduce")
    p.add_argument("--schedule", default="default", help="'default' or a JSON file")
    p.add_argument("--json", default=None, help="write a JSON report line here")
    p.add_argument("--keep-whitespace", action="store_true")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("exact", help="exact LCS and edit distance oracles")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--alphabet", default="auto")
    p.add_argument("--max-cells", type=int, default=DEFAULT_CELL_CAP)
    p.add_argument("--keep-whitespace", action="store_true")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("gen", help="generate a seeded instance to PREFIX.a/.b")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output path prefix")
    p.add_argument("--params", default=None, help="family params as JSON")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("experiment", help="batch (instance, algorithm) runs to JSONL")
    p.add_argument("--config", required=True, help="experiment config JSON")
    p.add_argument("--out", required=True, help="output JSONL path")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("bench", help="runtime scaling of one algorithm")
    p.add_argument("--algo", required=True, help=f"one of {bench_algorithms()}")
    p.add_argument("--sizes", required=True, help="ascending comma-separated sizes")
    p.add_argument("--family", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--params", default=None, help="family params as JSON")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("kernels", help="compare compiled vs pure-Python kernels")
    p.add_argument("--sizes", default="512,2048")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--reps", type=int, default=3)
    p.set_defaults(func=_cmd_kernels)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (WitnessError, ContradictionError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
