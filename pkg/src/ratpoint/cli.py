"""Command-line front end.

Commands:
  ratpoint sos "<polynomial>"     decide rational sum-of-squares, emit certificate
  ratpoint find <formula-file>    rational point in a convex semi-algebraic set
  ratpoint check "<polynomial>" <certificate.json>   verify a certificate

Exit codes: 0 success (sos_rational / point_found / check passed), 1 negative
result (not_sos, sos_real_only, no_rational_point, empty_set, check failed),
2 parse or usage error, 3 budget exhausted, 4 convexity-suspect diagnostic.

All numbers in the JSON documents are exact strings "p" or "p/q"; the only
non-deterministic field is elapsed_seconds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from ratpoint import formulas as fm
from ratpoint.cad import CADConfig
from ratpoint.errors import BudgetExhaustedError, ConvexitySuspectError, ParseError
from ratpoint.multipoly import MultiPoly
from ratpoint.parsing import parse_formula, parse_polynomial, poly_to_text
from ratpoint.rationals import format_q, qbits, qq
from ratpoint.ratpoints import find_rational_points_report
from ratpoint.sos import NOT_SOS_OVER_R, SOS_OVER_Q, SOS_OVER_R_ONLY, decide_rational_sos

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_CONVEXITY = 4


def _config_from(args) -> CADConfig:
    cfg = CADConfig()
    env = os.environ.get("RATPOINT_BUDGET_CELLS")
    if env is not None:
        cfg.max_cells = int(env)
    if getattr(args, "budget_cells", None) is not None:
        cfg.max_cells = args.budget_cells
    return cfg


def _emit(doc: dict, as_json: bool, stream) -> None:
    if as_json:
        json.dump(doc, stream, indent=2)
        stream.write("\n")
        return
    stream.write(f"status: {doc['status']}\n")
    if doc.get("point") is not None:
        stream.write("point: (" + ", ".join(doc["point"]) + ")\n")
    for term in doc.get("certificate", []) or []:
        stream.write(f"  weight {term['weight']}  square of  {term['poly']}\n")
    stats = doc.get("stats", {})
    if stats:
        stream.write(
            f"stats: max_coordinate_bits={stats['max_coordinate_bits']} "
            f"elapsed_seconds={stats['elapsed_seconds']:.3f}\n"
        )


def _point_strings(coords) -> list:
    return [format_q(c) for c in coords]


def _max_bits(values) -> int:
    out = 0
    for v in values:
        out = max(out, qbits(qq(v)))
    return out


def cmd_sos(args, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    t0 = time.monotonic()
    try:
        f = parse_polynomial(args.polynomial)
    except ParseError as e:
        print(f"parse error: {e}", file=err)
        return EXIT_USAGE
    cfg = _config_from(args)
    try:
        decision = decide_rational_sos(f, prune=args.prune, config=cfg)
    except BudgetExhaustedError as e:
        print(f"budget exhausted: {e}", file=err)
        return EXIT_BUDGET
    doc = {
        "status": None,
        "input": args.polynomial,
        "point": None,
        "certificate": None,
        "stats": {"max_coordinate_bits": 0, "elapsed_seconds": 0.0},
    }
    code = EXIT_NEGATIVE
    if decision.status == SOS_OVER_Q:
        doc["status"] = "sos_rational"
        doc["point"] = _point_strings(decision.point.coordinates)
        doc["certificate"] = [
            {"weight": format_q(c), "poly": poly_to_text(g)}
            for c, g in decision.certificate.terms
        ]
        bits = list(decision.point.coordinates)
        for c, g in decision.certificate.terms:
            bits.append(c)
            bits.extend(qq(v) for v in g.terms.values())
        doc["stats"]["max_coordinate_bits"] = _max_bits(bits)
        code = EXIT_OK
    elif decision.status == NOT_SOS_OVER_R:
        doc["status"] = "not_sos"
    elif decision.status == SOS_OVER_R_ONLY:
        doc["status"] = "sos_real_only"
    doc["stats"]["elapsed_seconds"] = time.monotonic() - t0
    _emit(doc, args.json, out)
    return code


def cmd_find(args, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    t0 = time.monotonic()
    try:
        if args.formula_file == "-":
            text = sys.stdin.read()
        else:
            with open(args.formula_file, "r", encoding="utf-8") as fh:
                text = fh.read()
        formula = parse_formula(text)
    except OSError as e:
        print(f"cannot read formula: {e}", file=err)
        return EXIT_USAGE
    except ParseError as e:
        print(f"parse error: {e}", file=err)
        return EXIT_USAGE
    cfg = _config_from(args)
    try:
        point, status = find_rational_points_report(formula, cfg)
    except BudgetExhaustedError as e:
        print(f"budget exhausted: {e}", file=err)
        return EXIT_BUDGET
    except ConvexitySuspectError as e:
        print(f"convexity suspect: {e}", file=err)
        return EXIT_CONVEXITY
    doc = {
        "status": status,
        "input": text.strip(),
        "point": _point_strings(point.coordinates) if point else None,
        "certificate": None,
        "stats": {
            "max_coordinate_bits": _max_bits(point.coordinates) if point else 0,
            "elapsed_seconds": time.monotonic() - t0,
        },
    }
    _emit(doc, args.json, out)
    return EXIT_OK if status == "point_found" else EXIT_NEGATIVE


def cmd_check(args, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        names = set()
        from ratpoint.parsing import polynomial_variables

        names.update(polynomial_variables(args.polynomial))
        if args.certificate == "-":
            payload = json.load(sys.stdin)
        else:
            with open(args.certificate, "r", encoding="utf-8") as fh:
                payload = json.load(fh)
        terms = payload["certificate"] if isinstance(payload, dict) else payload
        for term in terms:
            names.update(polynomial_variables(term["poly"]))
        variables = sorted(names)
        f = parse_polynomial(args.polynomial, variables)
        total = MultiPoly.zero(tuple(variables))
        for term in terms:
            weight = qq(term["weight"])
            if weight <= 0:
                print(f"nonpositive weight {term['weight']}", file=err)
                return EXIT_NEGATIVE
            g = parse_polynomial(term["poly"], variables)
            total = total + g * g * weight
    except (OSError, KeyError, TypeError, ValueError, ParseError) as e:
        print(f"bad input: {e}", file=err)
        return EXIT_USAGE
    diff = total - f
    if diff.is_zero():
        print("certificate check passed: weighted squares recompose the input", file=out)
        return EXIT_OK
    worst = diff.sorted_terms()[0]
    mono = MultiPoly.monomial(tuple(variables), worst[0], Fraction(1))
    print(
        "certificate mismatch: coefficient of "
        f"{poly_to_text(mono)} differs by {format_q(qq(worst[1]))}",
        file=err,
    )
    return EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ratpoint",
        description="Exact rational points in convex semi-algebraic sets and "
        "rational sum-of-squares certificates.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_sos = sub.add_parser("sos", help="decide rational sum-of-squares")
    p_sos.add_argument("polynomial", help="infix polynomial, e.g. 'x^2 + 2*x*y + y^2'")
    p_sos.add_argument("--prune", dest="prune", action="store_true", default=True)
    p_sos.add_argument("--no-prune", dest="prune", action="store_false")
    p_sos.add_argument("--json", action="store_true", help="emit a JSON document")
    p_sos.add_argument("--budget-cells", type=int, default=None)
    p_sos.set_defaults(fn=cmd_sos)

    p_find = sub.add_parser("find", help="rational point in a convex set")
    p_find.add_argument("formula_file", help="s-expression formula file, or '-'")
    p_find.add_argument("--json", action="store_true")
    p_find.add_argument("--budget-cells", type=int, default=None)
    p_find.set_defaults(fn=cmd_find)

    p_check = sub.add_parser("check", help="verify a certificate independently")
    p_check.add_argument("polynomial")
    p_check.add_argument("certificate", help="JSON file with certificate terms, or '-'")
    p_check.set_defaults(fn=cmd_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
