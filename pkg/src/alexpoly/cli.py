"""Command line interface.

Subcommands:

  fox PRESENTATION.json     Alexander polynomial of a presented group
  zvk FACTORIZATION.json    presentation and polynomial from braid monodromy
  closure LINK.json         polynomials of a (marked) braid closure
  curve CURVE.json          topology derived from curve data
  verify CURVE.json [FACT.json | --delta ...]   divisibility checks
  cyclo POLY                cyclotomic factorization of a polynomial

Every subcommand accepts --output text|json; json output has sorted keys
and is byte-for-byte reproducible.  Exit status: 0 on success, 1 when a
check or computation fails, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .braid import (braid_from_json, factorization_from_json,
                    strand_components, zvk_presentation)
from .curve import (affine_counts, boundary_delta, curve_from_json,
                    euler_characteristic, first_betti)
from .errors import ComputationError, InputError
from .fox import alexander_one_variable, alexander_polynomial
from .group import AbelMap, load_json_file, presentation_from_json
from .linkpoly import (MarkedLink, hat_delta, link_from_json,
                       multivariable_delta, one_variable_delta)
from .ring import (LaurentPoly, cyclotomic_factorization, normalize,
                   parse_poly, poly_to_str)
from .verify import cyclotomic_text, generic_infinity_delta, run_verification


def _print(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_fox(args: argparse.Namespace) -> int:
    pres, phi = presentation_from_json(load_json_file(args.presentation),
                                       source=args.presentation)
    if phi is None:
        phi = AbelMap.constant_one(len(pres.generators))
    delta = (alexander_one_variable(pres, phi) if args.one
             else alexander_polynomial(pres, phi))
    text = poly_to_str(delta)
    _print(args, {"alexander": text, "variables": delta.nvars}, text)
    return 0


def cmd_zvk(args: argparse.Namespace) -> int:
    fact = factorization_from_json(load_json_file(args.factorization),
                                   source=args.factorization)
    projective = True if args.projective else None
    pres, phi = zvk_presentation(fact, projective=projective)
    delta = (alexander_polynomial(pres, phi) if args.multi
             else alexander_one_variable(pres, phi))
    text = poly_to_str(delta)
    payload = {
        "alexander": text,
        "variables": delta.nvars,
        "generators": list(pres.generators),
        "relators": len(pres.relators),
    }
    lines = [f"generators: {' '.join(pres.generators)}",
             f"relators: {len(pres.relators)}",
             f"alexander: {text}"]
    _print(args, payload, "\n".join(lines))
    return 0


def _load_closure_link(args: argparse.Namespace) -> MarkedLink:
    """Accept either a link file or a bare braid file.

    For a bare braid, closure components get distinct colours in base
    strand order; --marked (a 1-based base strand) selects the colour-0
    component and --hat DEGREE supplies the degree.
    """
    obj = load_json_file(args.link)
    if isinstance(obj, dict) and "braid" in obj:
        link = link_from_json(obj, source=args.link)
        if args.marked is not None:
            raise InputError("--marked applies to bare braid files; this "
                             "file sets the marking itself", source=args.link)
        if isinstance(args.hat, int) and args.hat > 0 and link.degree != args.hat:
            link = MarkedLink(link.braid, link.colours, marked=link.marked,
                              degree=args.hat)
        return link
    braid = braid_from_json(obj, source=args.link)
    bases = sorted(min(comp) for comp in strand_components(braid))
    marked = args.marked - 1 if args.marked is not None else None
    if marked is not None and marked not in bases:
        raise InputError("marked must be the base strand of a component "
                         f"{[b + 1 for b in bases]}", source=args.link,
                         field="--marked")
    colours, nxt = {}, 1
    for base in bases:
        if base == marked:
            colours[base] = 0
        else:
            colours[base] = nxt
            nxt += 1
    degree = args.hat if isinstance(args.hat, int) and args.hat > 0 else None
    try:
        return MarkedLink(braid, colours, marked=marked, degree=degree)
    except ValueError as exc:
        raise InputError(str(exc), source=args.link) from exc


def cmd_closure(args: argparse.Namespace) -> int:
    link = _load_closure_link(args)
    try:
        if args.multi:
            kind, delta = "multivariable", multivariable_delta(link)
        elif args.hat is not None:
            kind, delta = "hat", hat_delta(link)
        else:
            kind, delta = "one-variable", one_variable_delta(link)
    except ValueError as exc:
        raise InputError(str(exc), source=args.link) from exc
    text = poly_to_str(delta)
    _print(args, {"alexander": text, "kind": kind, "variables": delta.nvars},
           text)
    return 0


def cmd_curve(args: argparse.Namespace) -> int:
    curve = curve_from_json(load_json_file(args.curve), source=args.curve)
    counts = affine_counts(curve)
    boundary = poly_to_str(boundary_delta(curve))
    payload = {
        "degree": curve.degree,
        "curve_components": curve.n_curve_components,
        "euler_characteristic": euler_characteristic(curve),
        "first_betti": first_betti(curve),
        "boundary_delta": boundary,
        "affine_points": counts.s_aff,
        "affine_chi": counts.chi_ns,
    }
    lines = [
        f"degree: {curve.degree}",
        f"curve components: {curve.n_curve_components}",
        f"chi of the divisor: {euler_characteristic(curve)}",
        f"first Betti number: {first_betti(curve)}",
        f"boundary delta: {boundary}",
        f"affine singular points: {counts.s_aff}",
        f"affine chi bound: {counts.chi_ns}",
    ]
    _print(args, payload, "\n".join(lines))
    return 0


def _delta_from_text(text: str) -> LaurentPoly:
    """Resolve a --delta value: a polynomial, or a JSON file holding a
    factorization or a presentation from which the polynomial is computed."""
    if os.path.exists(text) or text.endswith(".json"):
        obj = load_json_file(text)
        if isinstance(obj, dict) and "factors" in obj:
            pres, phi = zvk_presentation(
                factorization_from_json(obj, source=text))
        else:
            pres, phi = presentation_from_json(obj, source=text)
            if phi is None:
                phi = AbelMap.constant_one(len(pres.generators))
        return alexander_one_variable(pres, phi)
    return parse_poly(text, nvars=1, source="--delta")


def cmd_verify(args: argparse.Namespace) -> int:
    curve = curve_from_json(load_json_file(args.curve), source=args.curve)
    if (args.factorization is None) == (args.delta is None):
        raise InputError("give either a factorization file or --delta, "
                         "not both", source="verify")
    if args.factorization is not None:
        fact = factorization_from_json(load_json_file(args.factorization),
                                       source=args.factorization)
        pres, phi = zvk_presentation(fact)
        delta = alexander_one_variable(pres, phi)
    else:
        delta = _delta_from_text(args.delta)
    if args.infinity is None or args.infinity == "generic":
        delta_inf = generic_infinity_delta(curve.degree)
    elif os.path.exists(args.infinity) or args.infinity.endswith(".json"):
        link = link_from_json(load_json_file(args.infinity),
                              source=args.infinity)
        delta_inf = one_variable_delta(link)
    else:
        delta_inf = parse_poly(args.infinity, nvars=1, source="--infinity")
    report = run_verification(curve, delta, delta_inf)
    payload = report.to_json()
    payload["alexander"] = poly_to_str(delta)
    _print(args, payload, report.to_text())
    return 0 if report.ok else 1


def cmd_cyclo(args: argparse.Namespace) -> int:
    p = parse_poly(args.poly, source="argument")
    if p.is_zero:
        print("error: the zero polynomial is not a cyclotomic product",
              file=sys.stderr)
        return 1
    factors, remainder = cyclotomic_factorization(normalize(p))
    if remainder.is_unit:
        text = cyclotomic_text(factors)
        _print(args, {"cyclotomic": True,
                      "factors": {str(n): e for n, e in factors.items()},
                      "text": text},
               text)
        return 0
    _print(args, {"cyclotomic": False,
                  "remainder": poly_to_str(remainder)},
           f"not a cyclotomic product; remainder ({poly_to_str(remainder)})")
    return 1


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--output", choices=("text", "json"), default="text",
                        help="output format (default: text)")

    parser = argparse.ArgumentParser(
        prog="alexpoly",
        description="Alexander polynomials of plane curve complements "
                    "and links, with exact divisibility checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fox", parents=[shared],
                       help="Alexander polynomial of a presented group")
    p.add_argument("presentation", help="presentation JSON file")
    p.add_argument("--one", action="store_true",
                   help="compose the abelianization to a single variable")
    p.set_defaults(func=cmd_fox)

    p = sub.add_parser("zvk", parents=[shared],
                       help="presentation and polynomial from braid monodromy")
    p.add_argument("factorization", help="factorization JSON file")
    p.add_argument("--projective", action="store_true",
                   help="add the projective relation regardless of the file")
    p.add_argument("--multi", action="store_true",
                   help="one variable per curve component")
    p.set_defaults(func=cmd_zvk)

    p = sub.add_parser("closure", parents=[shared],
                       help="polynomials of a (marked) braid closure")
    p.add_argument("link", help="link JSON file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--one", action="store_true",
                      help="single-variable polynomial (the default)")
    mode.add_argument("--multi", action="store_true",
                      help="one variable per colour")
    mode.add_argument("--hat", nargs="?", const=0, type=int, metavar="DEGREE",
                      help="specialized polynomial of a marked link; the "
                           "degree defaults to the one in the file")
    p.add_argument("--marked", type=int, metavar="STRAND",
                   help="base strand of the marked component (bare braid "
                        "files only)")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("curve", parents=[shared],
                       help="topology derived from curve data")
    p.add_argument("curve", help="curve JSON file")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("verify", parents=[shared],
                       help="run the divisibility and cyclotomicity checks")
    p.add_argument("curve", help="curve JSON file")
    p.add_argument("factorization", nargs="?",
                   help="factorization JSON file (or use --delta)")
    p.add_argument("--delta", metavar="POLY_OR_JSON",
                   help="the curve polynomial, or a factorization or "
                        "presentation file to compute it from")
    p.add_argument("--infinity", metavar="POLY_OR_LINK",
                   help="polynomial at infinity: 'generic' (the default), "
                        "a link JSON file, or polynomial text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cyclo", parents=[shared],
                       help="cyclotomic factorization of a polynomial")
    p.add_argument("poly", help="polynomial, e.g. 't^2 - t + 1'")
    p.set_defaults(func=cmd_cyclo)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
