"""Command line front end: ``lr3sym <command> [--format text|json]``."""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .chamber import cross_validate, evaluate_C, load_complex, nu3
from .errors import Lr3Error, NotChamberMap, NotUnimodular
from .gl3 import check_gl3_generator
from .lifting import LinearSymmetry, certify_symmetry, full_symmetry_group, known_symmetries, orbit_of_triple
from .oracle import lr_coefficient

SCHEMA = "lr3/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": args.command, **payload}
        print(json.dumps(doc, sort_keys=True, indent=1))
    else:
        print(text)


def _partition_arg(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0", "()", "-"):
        return ()
    try:
        return tuple(int(a) for a in text.strip("()").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated partition: {text!r}") from None


def cmd_eval(args) -> int:
    l1, l2, m1, m2, n1, n2, n3 = args.values
    point = (l1, l2, m1, m2, n1, n2)
    expected = nu3(point)
    warning = None
    if n3 != expected:
        warning = f"weight mismatch: |lam| + |mu| forces nu3 = {expected}, got {n3}"
        print(f"warning: {warning}", file=sys.stderr)
        value = 0
    else:
        value = evaluate_C(point)
    _emit(args, {"point": list(point), "nu3": n3, "value": value, "warning": warning}, str(value))
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        value = lr_coefficient(args.lam, args.mu, args.nu)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, {"lam": list(args.lam), "mu": list(args.mu), "nu": list(args.nu), "value": value},
          str(value))
    return EXIT_OK


def cmd_chamber(args) -> int:
    cc = load_complex()
    ids = sorted(cc.chambers_containing(args.point), key=lambda c: int(c[1:]))
    value = cc.evaluate(args.point)
    text = (" ".join(ids) if ids else "(outside the support)") + f"\nC = {value}"
    _emit(args, {"point": list(args.point), "chambers": ids, "value": value}, text)
    return EXIT_OK


def cmd_orbit(args) -> int:
    pts = sorted(orbit_of_triple(args.point))
    values = [evaluate_C(p) for p in pts]
    lines = [f"{len(pts)} point(s)"] + [f"{p}  C = {c}" for p, c in zip(pts, values)]
    _emit(args, {"point": list(args.point), "orbit": [list(p) for p in pts], "values": values},
          "\n".join(lines))
    return EXIT_OK


def cmd_symmetries(args) -> int:
    group, rep = full_symmetry_group()
    gens = known_symmetries()
    if args.format == "json":
        _emit(args, {
            "order": rep.order,
            "certified": rep.certified,
            "known_subgroup_order": rep.known_subgroup_order,
            "generator_order": rep.generator_order,
            "transitive": rep.transitive,
            "chamber_orbit": rep.chamber_orbit,
            "lift_basis": list(rep.lift_basis),
            "generators": {k: f.to_json() for k, f in gens.items()},
            "elements": [c.to_json() for c in rep.certificates],
        }, "")
    else:
        lines = [
            f"order: {rep.order}",
            f"certified: {rep.certified}/{rep.order}",
            f"known subgroup order: {rep.known_subgroup_order}",
            f"generated by S, T, U, X: {'yes' if rep.generator_order == rep.order else 'no'}"
            f" ({rep.generator_order})",
            f"transitive: {'yes' if rep.transitive else 'no'} ({len(rep.chamber_orbit)}/18)",
            f"lift basis: {' '.join(rep.lift_basis)}",
            "",
        ]
        for name, f in gens.items():
            lines.append(f"{name} =")
            lines.extend("  " + " ".join(f"{a:3d}" for a in row) for row in f.matrix)
        lines.append("")
        for i, c in enumerate(rep.certificates):
            perm = "".join(c.map.ray_perm.to_json()) or "()"
            lines.append(f"{i:3d}  det {c.map.det:+d}  {c.passed}/18  {'ok ' if c.valid else 'BAD'}  {perm}")
        print("\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify_map(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            f = LinearSymmetry.from_json(json.load(fh))
    except (OSError, ValueError) as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cert = certify_symmetry(f)
    except (NotUnimodular, NotChamberMap) as exc:
        reason = f"{type(exc).__name__}: {exc}"
        _emit(args, {"matrix": f.to_json(), "valid": False, "reason": reason}, f"invalid ({reason})")
        return EXIT_FAIL
    if cert.valid:
        text = f"valid: {cert.passed}/18 polynomial identities\nchamber permutation: " + " ".join(
            cert.chamber_perm.values())
    else:
        failed = [k for k, ok in cert.polynomial_checks.items() if not ok]
        text = f"invalid (PolynomialMismatch at {', '.join(failed)}): {cert.passed}/18"
    _emit(args, cert.to_json(), text)
    return EXIT_OK if cert.valid else EXIT_FAIL


def cmd_cross_validate(args) -> int:
    rep = cross_validate(args.bound, strict=False)
    _emit(args, {
        "bound": rep.bound, "points": rep.points_checked, "nonzero": rep.nonzero,
        "mismatches": [{"point": list(p), "chambers": a, "oracle": b} for p, a, b in rep.mismatches],
    }, f"{rep.points_checked} points, {len(rep.mismatches)} mismatches")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_check_gl3(args) -> int:
    rep = check_gl3_generator(args.bound, strict=False)
    _emit(args, {
        "bound": rep.bound, "triples": rep.triples, "nonzero": rep.nonzero,
        "mismatches": [{"triple": t.to_json(), "before": a, "after": b} for t, a, b in rep.mismatches],
    }, f"{rep.triples} triples, {len(rep.mismatches)} mismatches")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("bound must be >= 0")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="lr3sym", description="SL3 Littlewood-Richardson coefficients and their 144 symmetries.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="C from the chamber formulas")
    p.add_argument("values", type=int, nargs=7, metavar="N", help="l1 l2 m1 m2 n1 n2 n3")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("oracle", parents=[common], help="LR coefficient by counting tableaux")
    p.add_argument("lam", type=_partition_arg, help="e.g. 2,1")
    p.add_argument("mu", type=_partition_arg)
    p.add_argument("nu", type=_partition_arg)
    p.set_defaults(func=cmd_oracle)

    for name, func, helptext in (("chamber", cmd_chamber, "chambers containing a point"),
                                 ("orbit", cmd_orbit, "orbit of a point under the 144 symmetries")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("point", type=int, nargs=6, metavar="N", help="l1 l2 m1 m2 n1 n2")
        p.set_defaults(func=func)

    p = sub.add_parser("symmetries", parents=[common], help="compute and certify the symmetry group")
    p.set_defaults(func=cmd_symmetries)

    p = sub.add_parser("verify-map", parents=[common], help="certify a 6x6 integer matrix (JSON file)")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify_map)

    p = sub.add_parser("cross-validate", parents=[common], help="chamber formulas vs tableau counts")
    p.add_argument("--bound", type=_nonneg, default=4)
    p.set_defaults(func=cmd_cross_validate)

    p = sub.add_parser("check-gl3", parents=[common], help="check the extra GL3 generator")
    p.add_argument("--bound", type=_nonneg, default=3)
    p.set_defaults(func=cmd_check_gl3)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Lr3Error as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
