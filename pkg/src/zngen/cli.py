"""Command-line front end. Every subcommand emits machine-readable output
(json, csv, dot or text); identical invocations produce identical bytes
once --no-meta suppresses the timestamp field."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from datetime import datetime, timezone

from . import graph, oracle, spectra
from .gensets import enumerate_Gk
from .linalg import backend_name, sym_eigenvalues
from .numth import factorize
from .partition import build_partition, table_rows


def _fmt(x, precision: str) -> str:
    if isinstance(x, float):
        return repr(x) if precision == "full" else f"{x:.6g}"
    return str(x)


def _meta(args) -> dict:
    if args.no_meta:
        return {}
    return {"generated_at": datetime.now(timezone.utc).isoformat()}


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([row.get(c, "") for c in columns])
    return buf.getvalue()


def _json_dump(payload: dict, args) -> str:
    payload = {**payload, **_meta(args)}
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def cmd_classes(args) -> int:
    part = build_partition(args.n, materialize=args.materialize)
    rows = table_rows(part)
    for row in rows:
        row["degree"] = graph.degree_of_class(row["divisor"], part.n)
    if args.format == "json":
        _emit(args, _json_dump({"n": args.n, "classes": rows}, args))
    elif args.format == "csv":
        cols = ["s", "divisor", "size", "degree"]
        if args.materialize:
            cols.append("members")
            for row in rows:
                row["members"] = " ".join(map(str, row["members"]))
        _emit(args, _rows_to_csv(rows, cols))
    else:
        lines = [f"divisor classes of Z_{args.n}"]
        for row in rows:
            line = (
                f"  s={row['s']}  [{row['divisor']}]  size={row['size']}  "
                f"degree={row['degree']}"
            )
            if args.materialize:
                line += f"  members={row['members']}"
            lines.append(line)
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_gensets(args) -> int:
    fam = enumerate_Gk(args.n, args.k, expand=args.expand)
    if args.format == "json":
        _emit(args, _json_dump(fam.to_json(), args))
    else:
        lines = [f"minimal generating sets of Z_{args.n}, size {args.k}: {fam.count}"]
        for combo in fam.class_combos:
            lines.append("  classes " + " x ".join(f"[{d}]" for d in combo))
        if fam.sets is not None:
            for s in fam.sets:
                lines.append("  {" + ", ".join(map(str, s)) + "}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_props(args) -> int:
    props = graph.compute_props(args.n)
    payload = props.to_json()
    payload["generating_probability"] = str(graph.gen_probability(args.n))
    if args.format == "json":
        _emit(args, _json_dump(payload, args))
    else:
        lines = [f"properties of the generating graph of Z_{args.n}"]
        for key, val in payload.items():
            if key == "hamiltonian_cycle" and val is not None:
                val = "0,1,...,n-1,0"
            lines.append(f"  {key}: {val}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_graph(args) -> int:
    if args.which == "h":
        text = graph.h_to_dot(graph.build_h_graph(args.n))
    else:
        text = graph.to_dot(graph.build_graph(args.n, limit=args.dense_limit))
    with open(args.dot, "w") as fh:
        fh.write(text)
    if not args.no_meta:
        print(f"wrote {args.dot}")
    return 0


def _bounds_rows(bounds, precision):
    return [
        {
            "j": b.j,
            "lower": _fmt(b.lo, precision),
            "numeric": _fmt(b.numeric, precision),
            "upper": _fmt(b.hi, precision),
        }
        for b in bounds
    ]


def cmd_spectrum(args) -> int:
    kind = {"adj": "adjacency", "lap": "laplacian"}[args.matrix]
    mode = "full" if args.full else "quotient-only"
    if kind == "adjacency":
        report = spectra.adjacency_spectrum(args.n, mode=mode, limit=args.dense_limit)
        bounds = spectra.weyl_bounds_adjacency(args.n) if args.bounds else None
    else:
        report = spectra.laplacian_spectrum(args.n, mode=mode, limit=args.dense_limit)
        bounds = spectra.weyl_bounds_laplacian(args.n) if args.bounds else None
    if bounds is not None:
        report = spectra.SpectrumReport(
            n=report.n,
            matrix=report.matrix,
            eigenpairs=report.eigenpairs,
            bounds=tuple(bounds),
            oracle_residual=report.oracle_residual,
        )

    if args.format == "json":
        payload = report.to_json()
        if args.precision != "full":
            for pair in payload["eigen"]:
                pair["value"] = float(f"{pair['value']:.6g}")
            for b in payload.get("bounds", []):
                for key in ("lo", "hi", "numeric"):
                    b[key] = float(f"{b[key]:.6g}")
        _emit(args, _json_dump(payload, args))
    elif args.format == "csv":
        if bounds is not None:
            _emit(
                args,
                _rows_to_csv(
                    _bounds_rows(bounds, args.precision),
                    ["j", "lower", "numeric", "upper"],
                ),
            )
        else:
            rows = [
                {
                    "value": _fmt(p.value, args.precision),
                    "multiplicity": p.multiplicity,
                    "provenance": p.provenance,
                }
                for p in report.eigenpairs
            ]
            _emit(args, _rows_to_csv(rows, ["value", "multiplicity", "provenance"]))
    else:
        lines = [f"{kind} spectrum of the generating graph of Z_{args.n}"]
        for p in report.eigenpairs:
            lines.append(
                f"  {_fmt(p.value, args.precision)} x{p.multiplicity} ({p.provenance})"
            )
        if bounds is not None:
            lines.append("  per-index bounds (lower <= numeric <= upper):")
            for b in bounds:
                lines.append(
                    f"    j={b.j}: {_fmt(b.lo, args.precision)} <= "
                    f"{_fmt(b.numeric, args.precision)} <= {_fmt(b.hi, args.precision)}"
                )
        if report.oracle_residual is not None:
            lines.append(f"  dense-oracle residual: {report.oracle_residual:.3e}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_tables(args) -> int:
    out = []
    part = build_partition(30, materialize=True)
    out.append("class table for n = 30 (size and degree per divisor class)")
    for row in table_rows(part):
        deg = graph.degree_of_class(row["divisor"], part.n)
        out.append(
            f"  s={row['s']}  d={row['divisor']:>2}  size={row['size']}  "
            f"degree={deg}  members={row['members']}"
        )
    out.append("")
    out.append("adjacency quotient bounds for n = 15 (lower, numeric, upper)")
    for b in spectra.weyl_bounds_adjacency(15):
        out.append(
            f"  j={b.j}: {b.lo:.6g}  {b.numeric:.6g}  {b.hi:.6g}"
        )
    out.append("")
    out.append("laplacian quotient bounds for n = 15 (lower, numeric, upper)")
    for b in spectra.weyl_bounds_laplacian(15):
        out.append(
            f"  j={b.j}: {b.lo:.6g}  {b.numeric:.6g}  {b.hi:.6g}"
        )
    _emit(args, "\n".join(out) + "\n")
    return 0


def _parse_range(spec: str) -> tuple[int, int]:
    lo, _, hi = spec.partition("..")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {spec!r}, expected LO..HI")
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"bad range {spec!r}: {lo_i} > {hi_i}")
    return lo_i, hi_i


def cmd_verify(args) -> int:
    lo, hi = args.range
    names = [x.strip() for x in args.checks.split(",") if x.strip()]
    try:
        reports = oracle.run_checks(names, lo, hi)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ok = True
    payload = []
    for rep in reports:
        payload.append(rep.to_json())
        status = "pass" if rep.passed else "FAIL"
        print(f"{rep.check:<14} [{rep.lo}..{rep.hi}]  {status}  ({rep.elapsed:.2f}s)")
        for miss in rep.mismatches[:10]:
            n, detail, expect, got = (miss + ("", "", ""))[:4]
            print(f"    n={n}: {detail}: expected {expect}, got {got}")
        if len(rep.mismatches) > 10:
            print(f"    ... {len(rep.mismatches) - 10} more")
        ok = ok and rep.passed
    if args.output:
        with open(args.output, "w") as fh:
            json.dump({"reports": payload, **_meta(args)}, fh, indent=2)
    return 0 if ok else 1


def cmd_bench(args) -> int:
    lo, hi = args.range
    print(f"jacobi backend: {backend_name()}")
    print(f"{'n':>6} {'order':>6} {'quotient(s)':>12} {'dense(s)':>12} {'speedup':>9}")
    for n in range(lo, hi + 1):
        t0 = time.perf_counter()
        rep = spectra.adjacency_spectrum(n)
        t_quot = time.perf_counter() - t0
        t0 = time.perf_counter()
        dense = oracle.dense_matrix(n, "adjacency", limit=args.dense_limit)
        sym_eigenvalues(dense, max_sweeps=200)
        t_dense = time.perf_counter() - t0
        order = 1 << factorize(n).omega
        speed = t_dense / t_quot if t_quot > 0 else float("inf")
        print(f"{n:>6} {order:>6} {t_quot:>12.5f} {t_dense:>12.5f} {speed:>8.1f}x")
    if args.compare_backends:
        _bench_backends(args)
    return 0


def _bench_backends(args) -> None:
    import numpy as np

    from . import _jacobi_py

    try:
        from . import _jacobi as _ext
    except ImportError:
        print("compiled kernel unavailable; nothing to compare")
        return
    rng = np.random.default_rng(7)
    print(f"{'order':>6} {'cython(s)':>12} {'python(s)':>12} {'ratio':>8}")
    for order in (16, 32, 64, 96):
        base = rng.standard_normal((order, order))
        base = (base + base.T) / 2
        times = []
        for kernel in (_ext, _jacobi_py):
            work = np.array(base, order="C")
            norm = float(np.sqrt((work * work).sum()))
            t0 = time.perf_counter()
            kernel.jacobi_sweeps(work, 1e-12 * norm, 100)
            times.append(time.perf_counter() - t0)
        print(
            f"{order:>6} {times[0]:>12.5f} {times[1]:>12.5f} "
            f"{times[1] / times[0]:>7.1f}x"
        )


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zngen",
        description="generating graphs of Z_n: classes, minimal generating "
        "sets, graph invariants, spectra, verification",
    )
    parser.add_argument(
        "--dense-limit",
        type=int,
        default=None,
        help="override the dense materialization cap (env ZN_DENSE_LIMIT)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        p.add_argument("--output", help="write to file instead of stdout")
        p.add_argument("--no-meta", action="store_true",
                       help="suppress the timestamp field")
        p.add_argument("--precision", choices=["default", "full"], default="default")

    p = sub.add_parser("classes", help="divisor-class table")
    p.add_argument("n", type=int)
    p.add_argument("--materialize", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_classes)

    p = sub.add_parser("gensets", help="minimal generating sets of size k")
    p.add_argument("n", type=int)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--expand", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_gensets)

    p = sub.add_parser("props", help="closed-form graph invariants")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(fn=cmd_props)

    p = sub.add_parser("graph", help="DOT export")
    p.add_argument("n", type=int)
    p.add_argument("--dot", required=True, help="output path")
    p.add_argument("--which", choices=["en", "h"], default="en",
                   help="full graph or class skeleton")
    common(p)
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("spectrum", help="adjacency or Laplacian spectrum")
    p.add_argument("n", type=int)
    p.add_argument("--matrix", choices=["adj", "lap"], required=True)
    p.add_argument("--full", action="store_true",
                   help="also eigensolve the dense matrix and attach the residual")
    p.add_argument("--bounds", action="store_true",
                   help="attach per-index eigenvalue bounds")
    common(p)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("tables", help="reproduce the reference tables")
    p.add_argument("--paper", action="store_true", required=True,
                   help="emit the three reference tables (n=30 classes, n=15 bounds)")
    common(p)
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("verify", help="run brute-force checks")
    p.add_argument("--range", type=_parse_range, required=True, metavar="LO..HI")
    p.add_argument("--checks", default="all",
                   help=f"comma list from: {', '.join(oracle.CHECKS)} (or 'all')")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bench", help="quotient vs dense eigensolve timings")
    p.add_argument("--range", type=_parse_range, required=True, metavar="LO..HI")
    p.add_argument("--compare-backends", action="store_true",
                   help="also time the compiled kernel against the pure-Python one")
    common(p)
    p.set_defaults(fn=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.dense_limit is None:
        env = os.environ.get("ZN_DENSE_LIMIT")
        args.dense_limit = int(env) if env else None
    try:
        return args.fn(args)
    except (ValueError, graph.DenseLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
