"""Command-line front end: ``posprob {prob,coeff,verify,decay}``.

Exit codes: 0 success, 1 verification disagreement, 2 usage error,
3 enumeration budget exceeded, 4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .geometry import monte_carlo, volume_ratio_by_determinant
from .probability import (
    BudgetExceeded,
    check_budget,
    decay_table,
    decimal_string,
    probability,
)
from .transition import BasisPair, TriangularityError, build, coefficient_sums, format_label

EXIT_DISAGREE, EXIT_USAGE, EXIT_BUDGET, EXIT_INTERNAL = 1, 2, 3, 4


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def render_prob(result, fmt: str) -> str:
    labels = [format_label(l) for l in result.labels]
    if fmt == "json":
        return json.dumps(result.to_json())
    if fmt == "csv":
        rows = [["pair", "n", "label", "factor"]]
        rows += [[result.pair.value, result.n, l, f] for l, f in zip(labels, result.factors)]
        rows.append([result.pair.value, result.n, "probability", result.fraction])
        return _csv(rows)
    width = max(map(len, labels), default=0)
    lines = [
        f"pair {result.pair.value}, n = {result.n}",
        f"probability {result.fraction} ~ {result.decimal}",
        "factors:",
    ]
    lines += [f"  {l:<{width}}  {f}" for l, f in zip(labels, result.factors)]
    return "\n".join(lines)


def render_coeff(matrix, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(matrix.to_json())
    a = [format_label(l) for l in matrix.labels]
    b = [format_label(l) for l in matrix.basis_labels]
    if fmt == "csv":
        return _csv([[""] + b] + [[label] + list(row) for label, row in zip(a, matrix.rows)])
    sums = coefficient_sums(matrix)
    table = [[""] + b + ["sum"]] + [[label] + [str(x) for x in row] + [str(s)]
                                   for label, row, s in zip(a, matrix.rows, sums)]
    widths = [max(len(r[c]) for r in table) for c in range(len(table[0]))]
    return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in table)


def _cmd_prob(args) -> int:
    check_budget(args.pair, args.n, args.max_n)
    print(render_prob(probability(build(args.pair, args.n)), args.format))
    return 0


def _cmd_coeff(args) -> int:
    check_budget(args.pair, args.n, args.max_n)
    print(render_coeff(build(args.pair, args.n), args.format))
    return 0


def _cmd_verify(args) -> int:
    check_budget(args.pair, args.n, args.max_n)
    matrix = build(args.pair, args.n)
    exact = probability(matrix).value
    det = volume_ratio_by_determinant(matrix)
    report = monte_carlo(matrix, args.samples, args.seed, args.workers, exact=exact)
    agree = det == exact and report.within(3.0)
    if args.format == "json":
        print(json.dumps({
            "pair": args.pair.value,
            "n": args.n,
            "exact": str(exact),
            "determinant": str(det),
            "monte_carlo": report.to_json(),
            "agree": agree,
        }))
    elif args.format == "csv":
        print(_csv([
            ["pair", "n", "exact", "determinant", "estimate", "stderr", "samples", "seed", "workers", "agree"],
            [args.pair.value, args.n, exact, det, report.estimate, report.standard_error,
             report.sample_count, report.seed, report.workers, agree],
        ]))
    else:
        print(f"pair {args.pair.value}, n = {args.n}")
        print(f"exact        {exact} ~ {decimal_string(exact)}")
        print(f"determinant  {det}")
        print(f"monte carlo  {report.estimate:.6g} +/- {report.standard_error:.2g} "
              f"({report.hits}/{report.sample_count} hits, seed {report.seed}, {report.workers} worker(s))")
        print("agree" if agree else "DISAGREE")
    return 0 if agree else EXIT_DISAGREE


def _cmd_decay(args) -> int:
    rows = decay_table(args.pair, args.n_max, args.max_n)
    exceeded = [r for _, r in rows if isinstance(r, BudgetExceeded)]
    if args.format == "json":
        print(json.dumps([
            {"n": n, "error": str(r)} if isinstance(r, BudgetExceeded) else r.to_json()
            for n, r in rows
        ]))
    elif args.format == "csv":
        out = [["pair", "n", "probability", "decimal"]]
        for n, r in rows:
            if isinstance(r, BudgetExceeded):
                out.append([args.pair.value, n, "budget exceeded", ""])
            else:
                out.append([args.pair.value, n, r.fraction, r.decimal])
        print(_csv(out))
    else:
        for n, r in rows:
            if isinstance(r, BudgetExceeded):
                print(f"{n:>3}  budget exceeded")
            else:
                print(f"{n:>3}  {r.fraction}  ~ {r.decimal}")
    for exc in exceeded:
        print(f"posprob: {exc}", file=sys.stderr)
    return EXIT_BUDGET if exceeded else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posprob", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    pairs = [p.value for p in BasisPair]

    def common(p):
        p.add_argument("--pair", required=True, choices=pairs)
        p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
        p.add_argument("--max-n", type=int, default=None,
                       help="enumeration cap (default 12 for partitions, 8 for compositions; "
                            "env POSPROB_MAX_N)")

    for name, func, helptext in [
        ("prob", _cmd_prob, "exact probability and its factors"),
        ("coeff", _cmd_coeff, "labelled transition matrix"),
        ("verify", _cmd_verify, "exact vs determinant vs Monte Carlo"),
    ]:
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.add_argument("--n", type=int, required=True)
        if name == "verify":
            p.add_argument("--samples", type=int, default=100_000)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--workers", type=int, default=1)
        p.set_defaults(func=func)

    p = sub.add_parser("decay", help="probabilities for n = 1..n-max")
    common(p)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=_cmd_decay)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.pair = BasisPair.parse(args.pair)
    if getattr(args, "n", 1) < 1 or getattr(args, "n_max", 1) < 1:
        parser.error("degree must be at least 1")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"posprob: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TriangularityError as exc:
        print(f"posprob: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
