"""Command-line surface.

Subcommands: analyze, specialize, verify-extremal, rho, demo.  Exit codes:
0 success, 2 trivial/boundary branch, 3 pipeline failure after retries,
4 invalid input.  All randomness flows from --seed; there is no wall-clock
entropy anywhere.
"""

import argparse
import json
import sys

from .fields import DEFAULT_MODULUS, field_of_characteristic
from .poly import ParseError, parse_polynomial
from .groebner import IdealBasis, ideal_equal, saturate_irrelevant
from .hilbert import hilbert
from .curves import CurveIdeal, curve_ring, fixture
from .degeneration import (SpecializationError, condition_star_probe,
                           rho_table, specialize, verify_extremal_shape)

EXIT_OK = 0
EXIT_BOUNDARY = 2
EXIT_PIPELINE = 3
EXIT_INVALID = 4

_KNOWN_KEYS = ("characteristic", "variables", "generators")


def load_ideal_file(path, char_override=None):
    """Parse an ideal file into an IdealBasis.

    Format: optional `characteristic:` and `variables:` header lines, then
    `generators:` followed by one polynomial per line (leading `-` list
    markers and `#` comments allowed).  Unknown keys are rejected.
    """
    with open(path, "r", encoding="utf-8") as handle:
        raw_lines = handle.read().splitlines()
    characteristic = None
    generator_lines = []
    in_generators = False
    for lineno, raw in enumerate(raw_lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        key = head.strip().lower()
        if sep and key in _KNOWN_KEYS and not in_generators:
            if key == "characteristic":
                try:
                    characteristic = int(tail.strip())
                except ValueError:
                    raise ParseError(
                        f"{path}:{lineno}: malformed characteristic") from None
            elif key == "variables":
                if tail.split() != ["x", "y", "z", "w"]:
                    raise ParseError(
                        f"{path}:{lineno}: variables must be 'x y z w'")
            else:
                in_generators = True
                if tail.strip():
                    generator_lines.extend(
                        p for p in tail.split(",") if p.strip())
        elif sep and key in _KNOWN_KEYS and in_generators:
            raise ParseError(f"{path}:{lineno}: header key after generators")
        elif sep and not in_generators and key.isidentifier() and " " not in head.strip():
            raise ParseError(f"{path}:{lineno}: unknown key {head.strip()!r}")
        else:
            if not in_generators:
                raise ParseError(
                    f"{path}:{lineno}: generator before 'generators:' header")
            entry = line.lstrip("-").strip() if line.startswith("- ") else line
            generator_lines.append(entry)
    if not generator_lines:
        raise ParseError(f"{path}: no generators found")
    if char_override is not None:
        characteristic = char_override
    if characteristic is None:
        characteristic = DEFAULT_MODULUS
    try:
        field = field_of_characteristic(characteristic)
    except ValueError as err:
        raise ParseError(f"{path}: {err}") from None
    ring = curve_ring(field)
    gens = [parse_polynomial(ring, text) for text in generator_lines]
    basis = IdealBasis(ring, gens)
    if not basis.homogeneous:
        raise ParseError(f"{path}: generators are not homogeneous")
    if basis.is_zero:
        raise ParseError(f"{path}: the zero ideal is not a curve ideal")
    return basis


def report_to_dict(report):
    """JSON-ready dictionary for a specialization report."""
    cert = report.certificate
    return {
        "d": report.d,
        "g": report.g,
        "a": report.a,
        "l": report.l,
        "nu": report.nu,
        "branch": report.branch,
        "omega": list(report.omega),
        "seed": report.seed,
        "retries": report.retries,
        "surface": str(report.surface.equation) if report.surface else None,
        "limit_ideal": [str(g) for g in report.limit.groebner().elements],
        "F": str(cert.f_form) if cert else None,
        "G": str(cert.g_form) if cert else None,
        "n_start": report.n_start,
        "rao": list(report.rao),
        "rho": list(report.rho),
        "extremal": report.extremal,
        "family": list(report.family),
    }


def _print_report(report, out):
    print(f"d={report.d} g={report.g} a={report.a} l={report.l} "
          f"nu={report.nu}", file=out)
    print(f"branch: {report.branch}   retries: {report.retries}   "
          f"omega: {report.omega}", file=out)
    if report.surface is not None:
        print(f"surface: {report.surface.equation}", file=out)
    print("limit ideal:", file=out)
    for g in report.limit.groebner().elements:
        print(f"  {g}", file=out)
    cert = report.certificate
    if cert is not None:
        print(f"F = {cert.f_form}", file=out)
        print(f"G = {cert.g_form}", file=out)
    if report.n_start is not None:
        rng = range(report.n_start, report.n_start + len(report.rao))
        print("   n: " + " ".join(f"{n:>3}" for n in rng), file=out)
        print(" rao: " + " ".join(f"{v:>3}" for v in report.rao), file=out)
        print(" rho: " + " ".join(f"{v:>3}" for v in report.rho), file=out)
    print(f"extremal: {'true' if report.extremal else 'false'}", file=out)
    print("family:", file=out)
    for line in report.family:
        print(f"  {line}", file=out)


def cmd_analyze(args, out=None):
    out = out or sys.stdout
    basis = load_ideal_file(args.path, args.char)
    hd = hilbert(basis)
    if hd.dimension != 1:
        print(f"error: scheme has dimension {hd.dimension}, not a curve",
              file=out)
        return EXIT_INVALID
    d, g = hd.degree, hd.genus
    saturated = ideal_equal(basis, saturate_irrelevant(basis))
    if g == (d - 1) * (d - 2) // 2:
        print(f"d={d} g={g} (plane curve)"
              f"  dimension=1 saturated={'yes' if saturated else 'no'}",
              file=out)
        return EXIT_OK
    a = (d - 2) * (d - 3) // 2 - g
    l = d - 2
    nu = a + l
    print(f"d={d} g={g} a={a} l={l} nu={nu} dimension=1 "
          f"saturated={'yes' if saturated else 'no'}", file=out)
    return EXIT_OK


def _run_specialize(curve, args, out):
    try:
        report = specialize(curve, seed=args.seed, max_retries=args.retries)
    except SpecializationError as err:
        print(f"error: {err}", file=out)
        return EXIT_PIPELINE
    _print_report(report, out)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(report_to_dict(report), handle, indent=2, sort_keys=True)
            handle.write("\n")
    return EXIT_OK if report.branch == "general" else EXIT_BOUNDARY


def cmd_specialize(args, out=None):
    out = out or sys.stdout
    basis = load_ideal_file(args.path, args.char)
    curve = CurveIdeal.from_ideal(basis, saturate=True)
    return _run_specialize(curve, args, out)


def cmd_verify_extremal(args, out=None):
    out = out or sys.stdout
    basis = load_ideal_file(args.path, args.char)
    cert = verify_extremal_shape(basis, args.d, args.g)
    if cert.extremal:
        print(f"extremal: true  F = {cert.f_form}  G = {cert.g_form}",
              file=out)
        rng = range(cert.n_start, cert.n_start + len(cert.rao))
        print("   n: " + " ".join(f"{n:>3}" for n in rng), file=out)
        print(" rao: " + " ".join(f"{v:>3}" for v in cert.rao), file=out)
        return EXIT_OK
    print(f"extremal: false  failing clause: {cert.failure}", file=out)
    return EXIT_PIPELINE


def cmd_rho(args, out=None):
    out = out or sys.stdout
    lo = hi = None
    if args.range:
        try:
            lo_text, hi_text = args.range.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            print(f"error: malformed range {args.range!r}", file=out)
            return EXIT_INVALID
    try:
        values = rho_table(args.d, args.g, lo, hi)
    except ValueError as err:
        print(f"error: {err}", file=out)
        return EXIT_INVALID
    a = (args.d - 2) * (args.d - 3) // 2 - args.g
    start = lo if lo is not None else 1 - a
    for offset, value in enumerate(values):
        print(f"{start + offset:>4}  {value}", file=out)
    return EXIT_OK


def cmd_demo(args, out=None):
    out = out or sys.stdout
    field = field_of_characteristic(args.char if args.char is not None
                                    else DEFAULT_MODULUS)
    try:
        curve = fixture(args.name, field)
    except ValueError as err:
        print(f"error: {err}", file=out)
        return EXIT_INVALID
    print(f"fixture: {args.name}", file=out)
    print(f"d={curve.degree} g={curve.genus} a={curve.a} l={curve.l} "
          f"nu={curve.nu}", file=out)
    print("generators:", file=out)
    for g in curve.ideal.groebner().elements:
        print(f"  {g}", file=out)
    if args.specialize:
        return _run_specialize(curve, args, out)
    return EXIT_OK


def cmd_probe(args, out=None):
    out = out or sys.stdout
    basis = load_ideal_file(args.path, args.char)
    curve = CurveIdeal.from_ideal(basis, saturate=True)
    report = condition_star_probe(curve)
    print(f"double plane: {'yes' if report.double_plane else 'no'}", file=out)
    if report.z_degree is not None:
        print(f"deg Z = {report.z_degree} (expected {report.expected})",
              file=out)
    if report.note:
        print(report.note, file=out)
    return EXIT_OK if report.ok else EXIT_PIPELINE


def build_parser():
    parser = argparse.ArgumentParser(
        prog="extremalcurves",
        description="Degenerate space curves to extremal curves and certify "
                    "the limits.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_char(p):
        p.add_argument("--char", type=int, default=None,
                       help="coefficient characteristic: a prime, or 0 for "
                            "rationals (default: file header, else "
                            f"{DEFAULT_MODULUS})")

    p = sub.add_parser("analyze", help="degree/genus/invariants of an ideal file")
    p.add_argument("path")
    add_char(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("specialize", help="run the degeneration pipeline")
    p.add_argument("path")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=5)
    p.add_argument("--json", default=None, help="write a JSON certificate")
    add_char(p)
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("verify-extremal",
                       help="check the four-generator extremal shape")
    p.add_argument("path")
    p.add_argument("d", type=int)
    p.add_argument("g", type=int)
    add_char(p)
    p.set_defaults(func=cmd_verify_extremal)

    p = sub.add_parser("rho", help="table of the sharp Rao bound")
    p.add_argument("d", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--range", default=None, metavar="LO..HI")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("demo", help="materialize a named fixture curve")
    p.add_argument("name")
    p.add_argument("--specialize", action="store_true",
                   help="chain into the degeneration pipeline")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=5)
    p.add_argument("--json", default=None)
    add_char(p)
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("probe", help="projection probe from (1,0,0,0)")
    p.add_argument("path")
    add_char(p)
    p.set_defaults(func=cmd_probe)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
