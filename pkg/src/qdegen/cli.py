"""Command-line surface: every computation, machine-readable output, verification.

Subcommands: degeneracy, kernel-basis, pisot, converge, identity, verify,
dense-dump, report.  Each emits one self-describing record as text (default)
or JSON (``--format json``).  Big integers are always serialized as decimal
strings.  Exit codes: 0 all checks pass, 1 a computed check failed,
2 usage or capacity error.

The record layout is stable and, apart from the timing fields, byte-identical
across runs with identical inputs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .core import ENUMERATION_CAP, LatticeSpec
from .degeneracy import (
    MODULAR_CAP,
    WORKERS_ENV_VAR,
    count_enumerate,
    count_modular,
    count_recurrence,
    identity_check,
    kernel_basis,
)
from .dense import build_dense, diagonal_csv
from .errors import DomainError, QdegenError, RootFindingError
from .spectral import (
    ROOTS_K_CAP,
    dominant_root,
    per_site_sequence,
    pisot_check,
)
from .verify import IDENTITY_MAX, run_all

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _fmt(x: float) -> str:
    """Floats are printed with 15 significant digits."""
    return f"{x:.15g}"


def _record(command: str, parameters: dict, results: dict,
            exact_values: dict, started: float) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "results": results,
        "exact_values": exact_values,
        "timing_ms": round((time.perf_counter() - started) * 1000.0, 3),
    }


def _emit(record: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_degeneracy(args) -> int:
    started = time.perf_counter()
    spec = LatticeSpec(args.sites, args.window)
    methods = {}
    if args.method in ("enumerate", "all"):
        if args.method == "all" and spec.n > ENUMERATION_CAP:
            pass  # out of this method's domain; the others still run
        else:
            methods["enumerate"] = count_enumerate(spec, workers=args.workers).count
    if args.method in ("recurrence", "all"):
        methods["recurrence"] = count_recurrence(spec.n, spec.k).count
    if args.method in ("modular", "all"):
        applicable = spec.k == 2 and 2 <= spec.n <= MODULAR_CAP
        if args.method == "modular" or applicable:
            methods["modular"] = count_modular(spec.n, spec.k).count
    counts = set(methods.values())
    agreement = len(counts) == 1
    count = counts.pop() if agreement else None
    record = _record(
        "degeneracy",
        {"sites": spec.n, "window": spec.k, "method": args.method},
        {
            "agreement": agreement,
            "counts": {m: str(c) for m, c in sorted(methods.items())},
        },
        {"count": str(count)} if agreement else {},
        started,
    )
    lines = [f"degeneracy  sites={spec.n} window={spec.k} method={args.method}"]
    for m, c in sorted(methods.items()):
        lines.append(f"  {m} = {c}")
    lines.append(f"agreement = {str(agreement).lower()}")
    if agreement:
        lines.append(f"count = {count}")
    _emit(record, args.format, lines)
    if not agreement:
        print("error: counting methods disagree", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_kernel_basis(args) -> int:
    started = time.perf_counter()
    spec = LatticeSpec(args.sites, args.window)
    states = [s.bitstring for s in kernel_basis(spec, limit=args.limit)]
    total = count_enumerate(spec).count
    truncated = len(states) < total
    record = _record(
        "kernel-basis",
        {"sites": spec.n, "window": spec.k, "limit": args.limit},
        {"states": states, "yielded": len(states), "truncated": truncated},
        {"total": str(total)},
        started,
    )
    lines = [",".join(states)]
    if truncated:
        lines.append(f"truncated: {len(states)} of {total} shown")
    _emit(record, args.format, lines)
    return EXIT_OK


def _cmd_pisot(args) -> int:
    started = time.perf_counter()
    if args.k_min < 2 or args.k_max > ROOTS_K_CAP or args.k_min > args.k_max:
        raise DomainError(
            f"order range must satisfy 2 <= k-min <= k-max <= {ROOTS_K_CAP}, "
            f"got [{args.k_min}, {args.k_max}]"
        )
    reports = [pisot_check(k, args.tol) for k in range(args.k_min, args.k_max + 1)]
    rows = [
        {
            "k": r.k,
            "dominant_root": r.dominant_root,
            "max_conjugate_modulus": r.max_conjugate_modulus,
            "root_error_bound": r.root_error_bound,
            "is_pisot": r.is_pisot,
            "conjugates": [{"re": z.real, "im": z.imag} for z in r.conjugates],
        }
        for r in reports
    ]
    all_pisot = all(r.is_pisot for r in reports)
    record = _record(
        "pisot",
        {"k_min": args.k_min, "k_max": args.k_max, "tol": args.tol},
        {"rows": rows, "all_pisot": all_pisot},
        {},
        started,
    )
    lines = ["k,dominant_root,max_conjugate_modulus,root_error_bound,is_pisot"]
    for r in reports:
        lines.append(
            f"{r.k},{_fmt(r.dominant_root)},{_fmt(r.max_conjugate_modulus)},"
            f"{_fmt(r.root_error_bound)},{str(r.is_pisot).lower()}"
        )
    _emit(record, args.format, lines)
    return EXIT_OK if all_pisot else EXIT_CHECK_FAILED


def _cmd_converge(args) -> int:
    started = time.perf_counter()
    points = per_site_sequence(args.window, args.n_max, samples=args.samples)
    dom = dominant_root(args.window)
    record = _record(
        "converge",
        {"window": args.window, "n_max": args.n_max, "samples": args.samples},
        {
            "dominant_root": dom,
            "points": [
                {"n": p.n, "per_site": p.per_site, "gap": p.gap} for p in points
            ],
        },
        {},
        started,
    )
    lines = ["n,per_site,gap,dominant_root"]
    for p in points:
        lines.append(f"{p.n},{_fmt(p.per_site)},{_fmt(p.gap)},{_fmt(dom)}")
    _emit(record, args.format, lines)
    return EXIT_OK


def _cmd_identity(args) -> int:
    started = time.perf_counter()
    if args.n_max < 2:
        raise DomainError(f"--n-max must be >= 2, got {args.n_max}")
    checks = [identity_check(n) for n in range(2, args.n_max + 1)]
    all_hold = all(c.holds for c in checks)
    last = checks[-1]
    record = _record(
        "identity",
        {"n_max": args.n_max},
        {
            "rows": [
                {"n": c.n, "lhs": str(c.lhs), "rhs": str(c.rhs), "holds": c.holds}
                for c in checks
            ],
            "all_hold": all_hold,
        },
        {f"lhs_{last.n}": str(last.lhs), f"rhs_{last.n}": str(last.rhs)},
        started,
    )
    lines = ["n,lhs,rhs,holds"]
    for c in checks:
        lines.append(f"{c.n},{c.lhs},{c.rhs},{str(c.holds).lower()}")
    _emit(record, args.format, lines)
    return EXIT_OK if all_hold else EXIT_CHECK_FAILED


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    checks = run_all(dense_max=args.dense, cross_max=args.cross)
    all_passed = all(c.passed for c in checks)
    record = _record(
        "verify",
        {"dense": args.dense, "cross": args.cross, "identity_max": IDENTITY_MAX},
        {
            "checks": [
                {
                    "name": c.name,
                    "claim": c.claim,
                    "passed": c.passed,
                    "detail": c.detail,
                    "ms": round(c.ms, 3),
                }
                for c in checks
            ],
            "all_passed": all_passed,
        },
        {},
        started,
    )
    lines = []
    for c in checks:
        tag = "PASS" if c.passed else "FAIL"
        lines.append(f"[{tag}] {c.name}: {c.claim} ({c.detail}) [{c.ms:.1f} ms]")
    lines.append(f"verify: {'all checks passed' if all_passed else 'CHECKS FAILED'}")
    _emit(record, args.format, lines)
    return EXIT_OK if all_passed else EXIT_CHECK_FAILED


def _cmd_dense_dump(args) -> int:
    started = time.perf_counter()
    spec = LatticeSpec(args.sites, args.window)
    h = build_dense(spec)
    line = diagonal_csv(h)
    record = _record(
        "dense-dump",
        {"sites": spec.n, "window": spec.k},
        {"diagonal": [int(v) for v in line.split(",")]},
        {},
        started,
    )
    _emit(record, args.format, [line])
    return EXIT_OK


def _cmd_report(args) -> int:
    from .plotting import save_convergence_figure, save_count_figure, save_root_figure

    started = time.perf_counter()
    os.makedirs(args.out, exist_ok=True)
    points = per_site_sequence(args.window, args.n_max, samples=args.samples)
    dom = dominant_root(args.window)
    counts = {p.n: count_recurrence(p.n, args.window).count for p in points}

    conv_csv = os.path.join(args.out, "convergence.csv")
    with open(conv_csv, "w", encoding="utf-8") as fh:
        fh.write("n,count,per_site,gap,dominant_root\n")
        for p in points:
            fh.write(f"{p.n},{counts[p.n]},{_fmt(p.per_site)},"
                     f"{_fmt(p.gap)},{_fmt(dom)}\n")

    reports = [pisot_check(k) for k in range(2, args.k_max + 1)]
    pisot_csv = os.path.join(args.out, "pisot.csv")
    with open(pisot_csv, "w", encoding="utf-8") as fh:
        fh.write("k,dominant_root,max_conjugate_modulus,root_error_bound,is_pisot\n")
        for r in reports:
            fh.write(f"{r.k},{_fmt(r.dominant_root)},{_fmt(r.max_conjugate_modulus)},"
                     f"{_fmt(r.root_error_bound)},{str(r.is_pisot).lower()}\n")

    conv_png = os.path.join(args.out, "convergence.png")
    roots_png = os.path.join(args.out, "roots.png")
    counts_png = os.path.join(args.out, "counts.png")
    save_convergence_figure(points, dom, args.window, conv_png)
    save_root_figure(reports, roots_png)
    save_count_figure(sorted(counts.items()), args.window, counts_png)

    written = [conv_csv, pisot_csv, conv_png, roots_png, counts_png]
    record = _record(
        "report",
        {
            "window": args.window,
            "n_max": args.n_max,
            "samples": args.samples,
            "k_max": args.k_max,
            "out": args.out,
        },
        {"files": [os.path.basename(f) for f in written],
         "all_pisot": all(r.is_pisot for r in reports)},
        {},
        started,
    )
    _emit(record, args.format, [f"wrote {f}" for f in written])
    return EXIT_OK if all(r.is_pisot for r in reports) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdegen",
        description="Exact ground-state degeneracy toolkit for projector-sum qubit chains.",
        epilog=f"set {WORKERS_ENV_VAR} to choose the enumeration worker count "
               "(default: available parallelism)",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="output format (default: text)")

    p = sub.add_parser("degeneracy", help="count ground states of an (n, k) chain")
    p.add_argument("--sites", type=int, required=True, help="chain length n")
    p.add_argument("--window", type=int, required=True, help="interaction window k")
    p.add_argument("--method", choices=("enumerate", "recurrence", "modular", "all"),
                   default="all")
    add_format(p)
    p.set_defaults(func=_cmd_degeneracy)

    p = sub.add_parser("kernel-basis", help="list the zero-energy basis states")
    p.add_argument("--sites", type=int, required=True)
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--limit", type=int, default=64, help="max states to list (default 64)")
    add_format(p)
    p.set_defaults(func=_cmd_kernel_basis)

    p = sub.add_parser("pisot", help="dominant root and conjugate moduli per order")
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=12)
    p.add_argument("--tol", type=float, default=1e-12)
    add_format(p)
    p.set_defaults(func=_cmd_pisot)

    p = sub.add_parser("converge", help="per-site ground-state count vs chain length")
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--samples", type=int, default=32)
    add_format(p)
    p.set_defaults(func=_cmd_converge)

    p = sub.add_parser("identity", help="check the complementary-counting identity")
    p.add_argument("--n-max", type=int, default=IDENTITY_MAX)
    add_format(p)
    p.set_defaults(func=_cmd_identity)

    p = sub.add_parser("verify", help="run the full cross-method verification suite")
    p.add_argument("--dense", type=int, default=10, help="dense checks up to this n (<= 12)")
    p.add_argument("--cross", type=int, default=20, help="cross-method checks up to this n (<= 24)")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dense-dump", help="dump the dense diagonal as one CSV line")
    p.add_argument("--sites", type=int, required=True)
    p.add_argument("--window", type=int, required=True)
    add_format(p)
    p.set_defaults(func=_cmd_dense_dump)

    p = sub.add_parser("report", help="write CSVs and figures for a full analysis")
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--n-max", type=int, default=2000)
    p.add_argument("--samples", type=int, default=48)
    p.add_argument("--k-max", type=int, default=12)
    p.add_argument("--out", required=True, help="output directory")
    add_format(p)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "workers"):
        args.workers = None  # resolved per WORKERS_ENV_VAR inside enumeration
    try:
        return args.func(args)
    except RootFindingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except QdegenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
