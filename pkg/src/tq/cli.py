"""Command-line interface.

Subcommands:
  tq compute --d1 D1 --d2 D2 [--json] [--m M] [--sign plus|minus]
             [--extra-s p,q,...] [--allow-imaginary]
  tq sweep --max N [--json]
  tq selftest
  tq lemma38 --conductor-max N --tol T

Exit codes: 0 vanishes / all checks pass, 2 inadmissible, 3 nonzero torsion
(or a failed verification), 4 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import is_squarefree
from .biquadratic import field_data, quad_field_disc
from .invariant import (VERDICT_INADMISSIBLE, VERDICT_NONZERO,
                             VERDICT_VANISHES, leading_ratio_check,
                             omega_loc_torsion, resolvent_factor_check, sweep)
from .errors import InputError, TqError
from .grouprings import V4_A, V4_B, V4_CHARS
from .localterms import (LatticeExponent, TameComplexSpec, build_tame_complex,
                         local_term_closed_form, local_term_via_complex,
                         residue_class, valuation_iso, verify_residue_resolution)
from .perfectcomplex import class_representative
from .relk0 import HomRep, torsion_class

EXIT_VANISHES = 0
EXIT_INADMISSIBLE = 2
EXIT_NONZERO = 3
EXIT_INPUT = 4


def _parse_lattice(args) -> LatticeExponent:
    return LatticeExponent(args.m, 1 if args.sign == "plus" else -1)


def _parse_extra(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(x) for x in text.split(",") if x.strip()]


def cmd_compute(args) -> int:
    report = omega_loc_torsion(args.d1, args.d2,
                               s_extra=_parse_extra(args.extra_s),
                               lat=_parse_lattice(args),
                               allow_imaginary=args.allow_imaginary)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        f = report.field
        print(f"E = Q(sqrt({f.d1}), sqrt({f.d2}))   third subfield: sqrt({f.d3})")
        print(f"ramified/extra primes: {list(report.s_f)}")
        for p, pr in sorted(report.per_prime.items()):
            loc = pr.local.to_json_dict()
            tag = "full decomposition" if pr.local.full_decomposition else \
                f"|D| = {len(pr.local.decomposition)}"
            print(f"  p = {p}: inertia {loc['inertia']}, Frobenius "
                  f"{loc['frobenius']} ({tag})")
        if report.verdict == VERDICT_INADMISSIBLE:
            print("verdict: inadmissible --", report.note)
        else:
            if report.resolvent_check is not None:
                rc = report.resolvent_check
                print(f"resolvent quotient check: {rc.status}"
                      + (f" (r = {rc.value}, {rc.completion})" if rc.value is not None else
                         f" ({rc.reason})"))
            print(f"torsion class: {report.torsion.unit}   verdict: {report.verdict}")
    if report.verdict == VERDICT_INADMISSIBLE:
        return EXIT_INADMISSIBLE
    return EXIT_VANISHES if report.verdict == VERDICT_VANISHES else EXIT_NONZERO


def cmd_sweep(args) -> int:
    summary = sweep(args.max)
    if args.json:
        print(json.dumps(summary.to_json_dict(), indent=2))
    else:
        print(f"pairs scanned: {summary.n_fields} (1 < d1 < d2 <= {args.max}, squarefree)")
        for verdict in (VERDICT_VANISHES, VERDICT_NONZERO, VERDICT_INADMISSIBLE):
            print(f"  {verdict}: {summary.counts[verdict]}")
        if summary.nonzero_fields:
            print("NONZERO TORSION FIELDS (predicted vanishing fails here):")
            for d1, d2 in summary.nonzero_fields:
                print(f"  d1 = {d1}, d2 = {d2}")
    return EXIT_NONZERO if summary.nonzero_fields else EXIT_VANISHES


def _selftest_cases():
    from .grouprings import idempotent, GroupRingElem, V4
    yield ("idempotents sum to 1 and are orthogonal",
           lambda: sum((idempotent(c) for c in V4_CHARS),
                       GroupRingElem.zero(V4)) == GroupRingElem.one(V4)
           and all((idempotent(c) * idempotent(d)).is_zero()
                   for c in V4_CHARS for d in V4_CHARS if c != d))

    def tame_fixtures():
        for p in (3, 5, 7, 11, 13, 17, 19):
            spec = TameComplexSpec(p, V4_A, V4_B)
            rep = class_representative(build_tame_complex(spec),
                                       valuation_iso(spec))
            expected = {"1": Fraction(1, 2 * p - 2), "chi1": Fraction(-1),
                        "chi2": Fraction(-2, p + 1), "chi1chi2": Fraction(-1)}
            if any(rep[k] != v for k, v in expected.items()):
                return False
        return True
    yield ("tame complex determinants, p in 3..19", tame_fixtures)

    yield ("residue resolution identities, p <= 50",
           lambda: all(verify_residue_resolution(p, V4_A).ok
                       for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)))

    yield ("residue class values at p = 5",
           lambda: residue_class(5, V4_A).as_tuple() == (Fraction(5), Fraction(1),
                                                         Fraction(5), Fraction(1)))

    yield ("torsion of (3,1,1,1) is 3",
           lambda: torsion_class(HomRep((3, 1, 1, 1))).unit == 3)

    def local_routes():
        from .biquadratic import local_galois
        f = field_data(5, 13)
        for p in (5, 13):
            loc = local_galois(f, p)
            for m in (1, 2):
                for sign in (1, -1):
                    lat = LatticeExponent(m, sign)
                    a = torsion_class(local_term_closed_form(p, loc, lat))
                    b = torsion_class(local_term_via_complex(p, loc, lat))
                    if a != b:
                        return False
        return True
    yield ("closed form vs determinant route agree mod 4", local_routes)

    def worked_fields():
        if omega_loc_torsion(5, 13).verdict != VERDICT_VANISHES:
            return False
        if omega_loc_torsion(13, 17).verdict != VERDICT_VANISHES:
            return False
        if omega_loc_torsion(2, 5).verdict != VERDICT_INADMISSIBLE:
            return False
        rc = resolvent_factor_check(field_data(2, 17))
        return rc is not None and rc.status == "pass" and rc.value == Fraction(17, 1024)
    yield ("worked field examples incl. (2,17) quotient 17/1024", worked_fields)


def cmd_selftest(_args) -> int:
    failures = 0
    for name, check in _selftest_cases():
        try:
            ok = check()
        except TqError as exc:
            ok = False
            name = f"{name} [{exc}]"
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failures += 0 if ok else 1
    return EXIT_VANISHES if failures == 0 else EXIT_NONZERO


def cmd_lemma38(args) -> int:
    failures = 0
    rows = []
    for d in range(2, args.conductor_max + 1):
        if not is_squarefree(d):
            continue
        cond = abs(quad_field_disc(d))
        if cond > args.conductor_max:
            continue
        f = field_data(2, d) if d != 2 else field_data(2, 3)
        label = next(lbl for lbl, sub in f.char_to_subfield.items() if sub == d)
        check = leading_ratio_check(label, f, tol=args.tol)
        rows.append((cond, d, check))
        if not check.ok:
            failures += 1
    rows.sort()
    for cond, d, check in rows:
        print(f"{'PASS' if check.ok else 'FAIL'}  conductor {cond:4d} "
              f"(d = {d:3d})  |ratio^2 - 4/f| = {check.abs_error_squared:.3e}")
    print(f"{len(rows)} characters checked, {failures} failures (tol {args.tol:g})")
    return EXIT_VANISHES if failures == 0 else EXIT_NONZERO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tq",
        description="Exact 2-adic torsion invariant of biquadratic fields")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="one field")
    pc.add_argument("--d1", type=int, required=True)
    pc.add_argument("--d2", type=int, required=True)
    pc.add_argument("--json", action="store_true")
    pc.add_argument("--m", type=int, default=1)
    pc.add_argument("--sign", choices=("plus", "minus"), default="plus")
    pc.add_argument("--extra-s", type=str, default="",
                    help="comma-separated extra odd primes to enlarge S")
    pc.add_argument("--allow-imaginary", action="store_true")
    pc.set_defaults(func=cmd_compute)

    ps = sub.add_parser("sweep", help="all squarefree pairs up to a bound")
    ps.add_argument("--max", type=int, required=True)
    ps.add_argument("--json", action="store_true")
    ps.set_defaults(func=cmd_sweep)

    pt = sub.add_parser("selftest", help="run the built-in fixture checks")
    pt.set_defaults(func=cmd_selftest)

    pl = sub.add_parser("lemma38", help="numeric check of the leading-"
                                        "coefficient ratio against 4/f")
    pl.add_argument("--conductor-max", type=int, default=60)
    pl.add_argument("--tol", type=float, default=1e-8)
    pl.set_defaults(func=cmd_lemma38)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
