"""Command line interface.

Subcommands cover the full pipeline: the 24x24 sublattice-count matrix, the
cusp form coefficients, Fourier coefficients at arbitrary root types, the
determinant table, the eta-product q-expansion and its comparison against
the table, the Golay 12-subset classification, the two independent routes
to the D12 coefficient, the Hecke eigenvalue at 2, and the acceptance
selftest.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import (acceptance, cuspform, golay, hecke, niemeier, qseries,
               rootsys, subcount)

EXIT_DATA_ERROR = 3


def factor_str(n: int) -> str:
    """Readable prime-power factorization of a nonzero integer."""
    if n == 0:
        return "0"
    sign = "-" if n < 0 else ""
    n = abs(n)
    parts = []
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            parts.append(f"{p}^{e}" if e > 1 else str(p))
        p += 1 if p == 2 else 2
    if n > 1:
        parts.append(str(n))
    return sign + (" * ".join(parts) if parts else "1")


def fmt_rational(x: Fraction, factored: bool = False) -> str:
    if x.denominator == 1:
        return factor_str(x.numerator) if factored else str(x.numerator)
    if factored:
        return f"{factor_str(x.numerator)} / {factor_str(x.denominator)}"
    return f"{x.numerator}/{x.denominator}"


def _emit(args, rows, header):
    """Write tabular output as text, csv, or json."""
    if args.format == "json":
        out = [dict(zip(header, r)) for r in rows]
        json.dump(out, sys.stdout, indent=2, default=str)
        print()
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(header)
        for r in rows:
            w.writerow(r)
    else:
        widths = [max(len(str(v)) for v in [h] + [r[i] for r in rows])
                  for i, h in enumerate(header)]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for r in rows:
            print("  ".join(str(v).ljust(w) for v, w in zip(r, widths)))


def _load(args):
    cache = None
    if args.cache:
        cache = subcount.CountCache(args.cache)
    else:
        try:
            cache = niemeier.default_cache()
        except FileNotFoundError:
            cache = None
    return cuspform.CuspForm(cache=cache, data_path=args.data)


def cmd_matrix(args):
    cf = _load(args)
    header = ["row"] + [r.label for r in cf.records]
    rows = [[rootsys.format_type(t)] + list(row)
            for t, row in zip(niemeier.ROW_TYPES, cf.matrix)]
    _emit(args, rows, header)
    return 0


def cmd_cuspform(args):
    cf = _load(args)
    rows = [(rec.label, fmt_rational(c), fmt_rational(c, factored=True))
            for rec, c in zip(cf.records, cf.coefficients)]
    _emit(args, rows, ["class", "coefficient", "factored"])
    return 0


def cmd_coeff(args):
    cf = _load(args)
    t = rootsys.parse_type(args.type)
    v = cf.coefficient(t)
    _emit(args, [(rootsys.format_type(t), rootsys.det(t), fmt_rational(v))],
          ["type", "det", "coefficient"])
    return 0


def cmd_table(args):
    cf = _load(args)
    rows = [(d, rootsys.format_type(t), fmt_rational(v))
            for d, v, t in cf.det_table(args.max_det)]
    _emit(args, rows, ["det", "type", "coefficient"])
    return 0


def cmd_qexp(args):
    coeffs = qseries.eta8_12_theta(args.terms)
    rows = [(e, c) for e, c in enumerate(coeffs) if c]
    _emit(args, rows, ["exponent", "coefficient"])
    return 0


def cmd_compare(args):
    cf = _load(args)
    rows = qseries.compare_report(cf, args.max_det)
    out = [(d, rootsys.format_type(t), fmt_rational(v), s, flag)
           for d, t, v, s, flag in rows]
    _emit(args, out, ["det", "type", "table", "series", "relation"])
    return 0


def cmd_golay(args):
    classes = golay.classify_subsets()
    rows = sorted(classes.items(), key=lambda kv: kv[1])
    _emit(args, rows, ["class", "size"])
    return 0


def cmd_d12(args):
    cf = _load(args)
    theta = cf.coefficient(rootsys.parse_type("D12"))
    raw = golay.a_d12_frames()
    frames = Fraction(raw, niemeier.AUT_LEECH * 2**6 * 3**5 * 5**2 * 7)
    rows = []
    if args.method in ("theta", "both"):
        rows.append(("theta", fmt_rational(theta), ""))
    if args.method in ("frames", "both"):
        rows.append(("frames", fmt_rational(frames), factor_str(raw)))
    _emit(args, rows, ["route", "normalized", "raw"])
    if theta != frames:
        print("mismatch between the two routes", file=sys.stderr)
        return 1
    return 0


def cmd_hecke(args):
    cf = _load(args)
    try:
        lam = hecke.lambda2_over_beta(cf)
        sat = hecke.satake_product(cf)
    except niemeier.MissingDataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    rows = [
        ("lambda(2)/beta", fmt_rational(lam), fmt_rational(lam, True)),
        ("lambda(2)", fmt_rational(hecke.lambda2(cf)), ""),
        ("satake product", fmt_rational(sat), fmt_rational(sat, True)),
        ("exceeds 2^12", str(hecke.ramanujan_violated(cf)), ""),
    ]
    _emit(args, rows, ["quantity", "value", "factored"])
    return 0


def cmd_selftest(args):
    cache = subcount.CountCache(args.cache) if args.cache else None
    if cache is None:
        try:
            cache = niemeier.default_cache()
        except FileNotFoundError:
            pass
    results = acceptance.run_all(
        cache=cache, data_path=args.data,
        progress=lambda r: print(acceptance.format_results([r]), flush=True))
    failed = [r for r in results if not r[2]]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="siegel12",
        description="Degree-12 Siegel cusp form from Niemeier theta series")
    p.add_argument("--format", choices=["text", "csv", "json"],
                   default="text", help="output format for tabular results")
    p.add_argument("--cache", metavar="PATH",
                   help="sublattice count cache file (default: bundled)")
    p.add_argument("--data", metavar="PATH",
                   help="Niemeier class data file (default: bundled)")
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; runs single-threaded "
                   "for determinism")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("matrix", help="24x24 sublattice count matrix")
    sub.add_parser("cuspform", help="the 24 solved coefficients")
    sp = sub.add_parser("coeff", help="Fourier coefficient at a root type")
    sp.add_argument("type", help='root type, e.g. "A1^2 D4"')
    sp = sub.add_parser("table", help="rank-12 determinant table")
    sp.add_argument("--max-det", type=int, default=96)
    sp = sub.add_parser("qexp", help="eta(8t)^12 theta(t) q-expansion")
    sp.add_argument("--terms", type=int, default=100)
    sp = sub.add_parser("compare", help="table vs q-expansion")
    sp.add_argument("--max-det", type=int, default=96)
    sp = sub.add_parser("golay", help="Golay 12-subset classification")
    sp.add_argument("action", nargs="?", default="classify",
                    choices=["classify"])
    sp = sub.add_parser("d12", help="coefficient at D12 via both routes")
    sp.add_argument("--method", choices=["theta", "frames", "both"],
                    default="both", help="route(s) to print; equality of "
                    "the normalized values is always asserted")
    sub.add_parser("hecke", help="Hecke eigenvalue at 2")
    sub.add_parser("selftest", help="run all acceptance checks")
    return p


COMMANDS = {
    "matrix": cmd_matrix,
    "cuspform": cmd_cuspform,
    "coeff": cmd_coeff,
    "table": cmd_table,
    "qexp": cmd_qexp,
    "compare": cmd_compare,
    "golay": cmd_golay,
    "d12": cmd_d12,
    "hecke": cmd_hecke,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (niemeier.MissingDataError, subcount.CacheCorruption,
            FileNotFoundError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
