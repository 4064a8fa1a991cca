"""Command-line interface.

Subcommands: stats, verify, cf, table, bij, export.  Exit codes: 0 success /
verified, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict

from . import harness
from .algebra import LAURENT_RING
from .contfrac import PRESET_NAMES, preset
from .lattice import enumerate_objects
from .maps import csz, csz_biwords, fv, fv_star, fz, invol_phi, invol_psi
from .permstat import (
    FAMILIES,
    Permutation,
    basic_stats,
    family_contains,
    family_iter,
    stat_polynomial,
    STAT_FIELDS,
)
from .qeuler import euler_table

BIJ_NAMES = ("fv", "fv-star", "fz", "csz", "phi", "psi")


class UsageError(Exception):
    pass


def parse_weight(text: str) -> dict:
    """Parse "x=wex,q=toht+2*thto" into the stat_polynomial weight mapping."""
    weight: dict = {}
    for clause in text.split(","):
        clause = clause.strip()
        if "=" not in clause:
            raise UsageError(f"bad weight clause {clause!r} (want var=expr)")
        var, expr = (part.strip() for part in clause.split("=", 1))
        stats: dict = {}
        for term in expr.split("+"):
            term = term.strip()
            if "*" in term:
                coeff_text, stat = (p.strip() for p in term.split("*", 1))
                coeff = int(coeff_text)
            else:
                coeff, stat = 1, term
            if stat not in STAT_FIELDS:
                raise UsageError(f"unknown statistic {stat!r} in weight")
            stats[stat] = stats.get(stat, 0) + coeff
        weight[var] = stats
    return weight


def _cmd_stats(args) -> int:
    record = basic_stats(Permutation.parse(args.perm))
    if args.json:
        print(json.dumps(record.to_json()))
    else:
        print(" ".join(f"{k}={v}" for k, v in asdict(record).items()))
    return 0


def _cmd_verify(args) -> int:
    param = args.n if args.n is not None else args.order
    report = harness.check(args.id, param)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(report)
    return 0 if report.passed else 1


def _cmd_cf(args) -> int:
    series = preset(args.preset).expand(args.order)
    if args.json:
        print(json.dumps(series.to_json()))
    else:
        print(series)
    return 0


def _cmd_table(args) -> int:
    if args.what == "euler":
        rows = euler_table(args.n)
        print(json.dumps([row.to_json() for row in rows]))
        return 0
    if args.family is None or args.weight is None:
        raise UsageError("table needs --family and --weight (or --what euler)")
    weight = parse_weight(args.weight)
    poly = stat_polynomial(args.family, args.n, weight)
    if args.json:
        print(json.dumps(poly.to_json()))
    else:
        print(poly)
    return 0


_BIJ_MAPS = {"fv": fv, "fv-star": fv_star, "fz": fz,
             "csz": csz, "phi": invol_phi, "psi": invol_psi}


def _verify_bij(name: str, n: int) -> str | None:
    if name == "fv":
        if n % 2 == 0:
            return "fv verification needs odd n"
        images = {fv(s) for s in family_iter("A", n)}
        paths = list(enumerate_objects("diagramme", n - 1))
        if len(images) != sum(1 for _ in family_iter("A", n)):
            return "images collide"
        if not images.issubset(set(paths)):
            return "image outside the diagramme codomain"
        if len(images) != len(paths):
            return "image does not fill the codomain"
        return None
    if name == "fv-star":
        if n % 2 == 1:
            return "fv-star verification needs even n"
        images = {fv_star(s) for s in family_iter("A", n)}
        paths = list(enumerate_objects("restricted_diagramme", n))
        if len(images) != sum(1 for _ in family_iter("A", n)):
            return "images collide"
        if not images.issubset(set(paths)):
            return "image outside the restricted codomain"
        if len(images) != len(paths):
            return "image does not fill the codomain"
        return None
    if name == "fz":
        images = {fz(s) for s in family_iter("S", n)}
        paths = list(enumerate_objects("laguerre", n))
        if len(images) != math.factorial(n):
            return "images collide"
        if set(paths) != images:
            return "image is not the full set of histories"
        return None
    if name == "csz":
        images = set()
        for sigma in family_iter("S", n):
            tau = csz(sigma)
            images.add(tau.word)
            a, b = basic_stats(sigma), basic_stats(tau)
            if (a.ndes, a.fmax, a.toht, a.thto, a.mad) != \
                    (b.wex, b.fix, b.cros, b.nest, b.inv):
                return f"statistics not carried over at {sigma}"
        if len(images) != math.factorial(n):
            return "images collide"
        return None
    if name == "phi":
        for sigma in family_iter("S", n):
            if invol_phi(invol_phi(sigma)) != sigma:
                return f"not an involution at {sigma}"
        return None
    if name == "psi":
        for sigma in family_iter("Dstar", n):
            if invol_psi(invol_psi(sigma)) != sigma:
                return f"not an involution at {sigma}"
        return None
    raise UsageError(f"unknown bijection {name!r}")


def _cmd_bij(args) -> int:
    if args.verify:
        if args.n is None:
            raise UsageError("bij --verify needs --n")
        why = _verify_bij(args.name, args.n)
        if why is None:
            print(f"{args.name} verified at n={args.n}")
            return 0
        print(f"{args.name} failed at n={args.n}: {why}", file=sys.stderr)
        return 1
    if args.perm is None:
        raise UsageError("bij needs a permutation (or --verify)")
    sigma = Permutation.parse(args.perm)
    if args.name == "csz":
        fw, gw = csz_biwords(sigma)
        print(f"descent biword:    {fw}")
        print(f"nondescent biword: {gw}")
    print(_BIJ_MAPS[args.name](sigma))
    return 0


def _cmd_export(args) -> int:
    rows = euler_table(args.n)
    payload = json.dumps([row.to_json() for row in rows], indent=2)
    if args.out == "-":
        print(payload)
    else:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
        print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pqeuler",
        description="Exact verification toolkit for (p,q)-tangent and secant numbers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="print all statistics of a permutation")
    p.add_argument("perm")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("verify", help="run a named identity check")
    p.add_argument("id", choices=harness.CHECK_IDS)
    p.add_argument("--n", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("cf", help="expand a continued-fraction preset")
    p.add_argument("preset", choices=PRESET_NAMES)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("table", help="statistic polynomial or the Euler table")
    p.add_argument("--what", choices=("euler",))
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("bij", help="apply or verify a bijection/involution")
    p.add_argument("name", choices=BIJ_NAMES)
    p.add_argument("perm", nargs="?")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--n", type=int)
    p.set_defaults(func=_cmd_bij)

    p = sub.add_parser("export", help="write the Euler table as JSON")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--out", default="euler_table.json")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # argparse signals usage problems with code 2
        return exc.code if isinstance(exc.code, int) else 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
