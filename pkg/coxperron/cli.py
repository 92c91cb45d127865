# -*- coding: utf-8 -*-
"""
Command line interface.

::

    coxperron certify --n 1 --json
    coxperron sweep --from 1 --to 60 --jobs 4 --out sweep.csv
    coxperron growth --matrix p1.json --coeffs 5
    coxperron roots interval --poly f.json --a -2 --b 2
    coxperron roots disk --poly f.json --radius 2

Exit status is 0 on success, 1 when a certificate is not Perron and 2
when the input violates a precondition.
"""

import argparse
import json
import logging
import sys

from .certify import PerronCertifier, summarise
from .coxeter import CoxeterMatrix, growth_rate, series_coefficients, steinberg_sum
from .diskcount import count_roots_in_disk
from .errors import CoxPerronError
from .numeric import dominant_real_root
from .polyring import Poly, as_rational
from .sturm import count_real_roots

logger = logging.getLogger(__name__)


def _rational(text):
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational number: {!r}".format(text))


def _load_poly(path):
    with open(path) as f:
        data = json.load(f)
    if not isinstance(data, list):
        raise CoxPerronError("{} does not hold a coefficient list".format(path))
    try:
        return Poly.from_json(data)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise CoxPerronError("{}: bad coefficient ({})".format(path, exc))


def _certificate_text(cert):
    lines = ["P_{}: {}".format(cert.n, "Perron" if cert.perron else "not certified")]
    if cert.d_coeffs:
        lines.append("  D = {}".format(Poly(cert.d_coeffs)))
    lines.append("  resultant(D, D') = {}".format(cert.resultant_value))
    lines.append("  real roots: {} positive, {} negative".format(
        cert.positive_root_count, cert.negative_root_count))
    lines.append("  roots with |z| < 2: {}".format(cert.disk2_count))
    lines.append("  real roots > 2: {}".format(cert.roots_beyond_2))
    if cert.tau_interval is not None:
        lines.append("  tau in [{}, {}]".format(cert.tau_interval.lo, cert.tau_interval.hi))
        lines.append("  tau = {}".format(cert.tau_decimal))
        if cert.d_coeffs:
            lines.append("  tau (companion matrix) = {:.12f}".format(
                dominant_real_root(Poly(cert.d_coeffs))))
    if cert.failure:
        lines.append("  failure: {}".format(cert.failure))
    lines.append("  {} ms".format(cert.elapsed_ms))
    return "\n".join(lines)


def cmd_certify(args):
    cert = PerronCertifier(eps=args.eps).certify(args.n)
    if args.text:
        print(_certificate_text(cert))
    else:
        print(cert.to_json(indent=2))
    return 0 if cert.perron else 1


def cmd_sweep(args):
    certifier = PerronCertifier(eps=args.eps, jobs=args.jobs)
    certs = certifier.sweep(args.start, args.stop)
    if args.out:
        if args.out.endswith(".csv"):
            summarise(certs).to_csv(args.out)
        else:
            with open(args.out, "w") as f:
                json.dump([c.to_dict() for c in certs], f, indent=2)
        logger.info("wrote %d certificates to %s", len(certs), args.out)
    print(summarise(certs).to_string())
    return 0 if all(c.perron for c in certs) else 1


def cmd_growth(args):
    matrix = CoxeterMatrix.load(args.matrix)
    gf = steinberg_sum(matrix)
    print("P = {}".format(gf.numerator))
    print("D = {}".format(gf.denominator))
    if gf.denominator.degree >= 1:
        rate = growth_rate(gf, args.eps)
        print("tau in [{}, {}]".format(rate.interval.lo, rate.interval.hi))
        print("tau = {}{}".format(rate.decimal, "" if rate.exceeds_one else " (not > 1)"))
    if args.coeffs is not None:
        print("coefficients = {}".format(series_coefficients(gf, args.coeffs)))
    return 0


def cmd_roots_interval(args):
    print(count_real_roots(_load_poly(args.poly), args.a, args.b))
    return 0


def cmd_roots_disk(args):
    print(count_roots_in_disk(_load_poly(args.poly), args.radius))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coxperron",
        description="Exact growth functions of Coxeter groups and Perron certificates.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debugging output")
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    certify = commands.add_parser("certify", help="certify the growth rate of P_n")
    certify.add_argument("--n", type=int, required=True)
    certify.add_argument("--eps", type=_rational, default=None,
                         help="width of the tau interval (default 1e-12)")
    output = certify.add_mutually_exclusive_group()
    output.add_argument("--json", dest="text", action="store_false", help="print JSON (default)")
    output.add_argument("--text", dest="text", action="store_true", help="print a readable summary")
    certify.set_defaults(func=cmd_certify, text=False)

    sweep = commands.add_parser("sweep", help="certify a range of n")
    sweep.add_argument("--from", dest="start", type=int, default=PerronCertifier.sweep_range[0])
    sweep.add_argument("--to", dest="stop", type=int, default=PerronCertifier.sweep_range[1])
    sweep.add_argument("--eps", type=_rational, default=None)
    sweep.add_argument("--jobs", type=int, default=None,
                       help="worker processes (default $COXPERRON_JOBS or 1)")
    sweep.add_argument("--out", default=None, help="write a .csv summary or JSON certificates")
    sweep.set_defaults(func=cmd_sweep)

    growth = commands.add_parser("growth", help="growth function of a Coxeter matrix")
    growth.add_argument("--matrix", required=True, help="JSON Coxeter matrix")
    growth.add_argument("--coeffs", type=int, default=None, help="print this many series terms")
    growth.add_argument("--eps", type=_rational, default=PerronCertifier.eps)
    growth.set_defaults(func=cmd_growth)

    roots = commands.add_parser("roots", help="exact root counts")
    queries = roots.add_subparsers(dest="query")
    queries.required = True
    interval = queries.add_parser("interval", help="distinct real roots in (a, b)")
    interval.add_argument("--poly", required=True, help="JSON coefficient list, constant first")
    interval.add_argument("--a", type=_rational, required=True)
    interval.add_argument("--b", type=_rational, required=True)
    interval.set_defaults(func=cmd_roots_interval)
    disk = queries.add_parser("disk", help="roots with |z| < radius")
    disk.add_argument("--poly", required=True, help="JSON coefficient list, constant first")
    disk.add_argument("--radius", type=_rational, required=True)
    disk.set_defaults(func=cmd_roots_disk)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(levelname)s %(message)s")
    try:
        return args.func(args)
    except (CoxPerronError, ValueError, OSError) as exc:
        print("error: {}".format(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
