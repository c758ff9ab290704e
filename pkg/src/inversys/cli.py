"""Command-line front end.

Every subcommand builds an ordered payload; text mode prints it as
``key: value`` lines (a lone field prints as its bare value) under ``#``
header lines, and ``--json`` prints the same fields as one JSON object.
Exit codes: 0 success, 2 parse error, 3 invalid input, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from inversys import short
from inversys.apolarity import ann_piece, contract, hilbert_function, minimal_generators
from inversys.certify import (
    CIType, is_complete_intersection, sample_ci_witness, verify_certificate)
from inversys.errors import InputError, InvariantError, ParseError
from inversys.poly import det, format_poly, jacobian, parse
from inversys.regseq import FormSystem, is_regular_sequence

EXIT_OK, EXIT_PARSE, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3, 4


@dataclass(frozen=True)
class CommandResult:
    code: int
    output: str
    error: str = ""


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgumentError(message)


def _scalar(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _lambda(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot read lambda {text!r} as a rational p/q") from None


def _polys(args, texts):
    """Parse into a common ring: ``--nvars`` or one past the largest index."""
    k = args.nvars
    if k is None:
        k = max(parse(t).nvars for t in texts)
    return [parse(t, k) for t in texts], k


def _split_gens(text):
    parts = [p for p in text.split(";")]
    if any(not p.strip() for p in parts):
        raise ParseError(f"empty generator in {text!r}")
    return parts


def _certificate_payload(cert):
    n = len(cert.generators)
    return {
        "verdict": "valid" if cert.valid else "invalid",
        "type": list(cert.degrees),
        "socle_degree": sum(cert.degrees) - n,
        "generators": [format_poly(f) for f in cert.generators],
        "regseq": cert.witness.as_dict(),
        "contraction_residues": [format_poly(r) for r in cert.residues],
        "jacobian_contraction": (_scalar(cert.scalar) if cert.scalar is not None
                                 else format_poly(cert.jacobian_contraction)),
        "paper_conforming": all(d >= 2 for d in cert.degrees),
        "failures": cert.failures(),
    }


def cmd_contract(args):
    (op, on), k = _polys(args, [args.op, args.on])
    return {"nvars": k}, {"result": format_poly(contract(op, on))}


def cmd_ann(args):
    (H,), k = _polys(args, [args.poly])
    if args.degree is not None and not args.mingens:
        piece = ann_piece(H, args.degree)
        return {"nvars": k}, {"degree": piece.degree, "dim": piece.dim,
                              "basis": piece.strings()}
    mg = minimal_generators(H)
    return {"nvars": k}, {"socle_degree": H.degree, "count": len(mg),
                          "degrees": list(mg.degrees), "generators": mg.strings()}


def cmd_hf(args):
    (H,), k = _polys(args, [args.poly])
    return {"nvars": k}, {"hilbert_function": list(hilbert_function(H).values)}


def cmd_certify(args):
    if args.gens is None:
        (H,), k = _polys(args, [args.poly])
        dec = is_complete_intersection(H)
        if dec.is_ci:
            body = _certificate_payload(dec.certificate)
            body["verdict"] = "CI"
            del body["failures"]
        else:
            body = {"verdict": "not-CI", "type": None, "socle_degree": dec.socle_degree,
                    "generator_count": len(dec.generators),
                    "generator_degrees": list(dec.generator_degrees),
                    "generators": [format_poly(g) for g in dec.generators]}
        return {"nvars": k}, body
    polys, k = _polys(args, [args.poly] + _split_gens(args.gens))
    cert = verify_certificate(polys[0], polys[1:])
    return {"nvars": k}, _certificate_payload(cert)


def cmd_regseq(args):
    forms, k = _polys(args, _split_gens(args.gens))
    w = is_regular_sequence(FormSystem(tuple(forms)))
    return {"nvars": k}, w.as_dict()


def cmd_jac(args):
    forms, k = _polys(args, _split_gens(args.gens))
    return {"nvars": k}, {"jacobian_det": format_poly(det(jacobian(forms)))}


def _type(text):
    try:
        return CIType.of(int(t) for t in text.split(","))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise ParseError(f"cannot read type {text!r}; expected d0,...,dn") from None


def cmd_sample(args):
    (H,), k = _polys(args, [args.poly])
    rep = sample_ci_witness(H, _type(args.type), args.trials, args.seed)
    body = {"type": list(_type(args.type).degrees), "trials": rep.trials,
            "seed": rep.seed, "z1": rep.z1, "successes": rep.successes,
            "witness": ([format_poly(f) for f in rep.witness.generators]
                        if rep.witness else None),
            "note": rep.note}
    return {"nvars": k}, body


def cmd_short(args):
    what = args.what
    if what == "verify-row":
        lam = _lambda(args.lambda_) if args.lambda_ is not None else None
        rep = short.verify_table_row(args.row, lam)
        return {}, {
            "row": rep.row, "geometry": rep.geometry,
            "inverse_system": format_poly(rep.inverse_system, "y"),
            "hilbert_function": list(rep.hilbert_function),
            "generator_count": rep.generator_count,
            "generator_degrees": list(rep.generator_degrees),
            "generators": [format_poly(g) for g in rep.generators],
            "verdict": "CI" if rep.is_ci else "not-CI",
            "printed_model": list(rep.printed_model),
            "model_matches": rep.model_matches,
            "flags": list(rep.flags)}
    if args.lambda_ is None:
        raise InputError(f"short {what} needs --lambda")
    lam = _lambda(args.lambda_)
    if what == "legendre":
        return {}, {"legendre": format_poly(short.legendre(lam), "y")}
    if what == "j":
        return {}, {"j": _scalar(short.j_invariant(lam))}
    if what == "klambda":
        return {}, {"generators": [format_poly(f) for f in short.k_lambda(lam)]}
    cert = short.verify_k_lambda(lam)
    return {"nvars": 3}, _certificate_payload(cert)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nvars", type=int, default=None,
                        help="variable count (default: largest index + 1)")
    common.add_argument("--json", action="store_true", help="emit JSON")

    p = _Parser(prog="inversys", description="Inverse systems and complete intersections.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("contract", parents=[common], help="f o G")
    c.add_argument("--op", required=True)
    c.add_argument("--on", required=True)
    c.set_defaults(func=cmd_contract)

    c = sub.add_parser("ann", parents=[common], help="annihilator slice or generators")
    c.add_argument("--poly", required=True)
    c.add_argument("--degree", type=int)
    c.add_argument("--mingens", action="store_true")
    c.set_defaults(func=cmd_ann)

    c = sub.add_parser("hf", parents=[common], help="Hilbert function of S/Ann(H)")
    c.add_argument("--poly", required=True)
    c.set_defaults(func=cmd_hf)

    c = sub.add_parser("certify", parents=[common], help="complete-intersection test")
    c.add_argument("--poly", required=True)
    c.add_argument("--gens", help='candidate generators "f0;f1;...;fn"')
    c.set_defaults(func=cmd_certify)

    c = sub.add_parser("regseq", parents=[common], help="regular-sequence rank witness")
    c.add_argument("--gens", required=True)
    c.set_defaults(func=cmd_regseq)

    c = sub.add_parser("jac", parents=[common], help="Jacobian determinant")
    c.add_argument("--gens", required=True)
    c.set_defaults(func=cmd_jac)

    c = sub.add_parser("sample", parents=[common], help="random witness search")
    c.add_argument("--poly", required=True)
    c.add_argument("--type", required=True)
    c.add_argument("--trials", type=int, required=True)
    c.add_argument("--seed", type=int, required=True)
    c.set_defaults(func=cmd_sample)

    c = sub.add_parser("short", parents=[common], help="1,3,3,1 algebras")
    c.add_argument("what", choices=["legendre", "j", "klambda", "verify-row", "verify-klambda"])
    c.add_argument("--lambda", dest="lambda_")
    c.add_argument("--row", type=int)
    c.set_defaults(func=cmd_short)
    return p


def _value(v):
    if isinstance(v, list):
        if v and all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            return ",".join(str(x) for x in v)
        return "; ".join(_value(x) for x in v)
    if isinstance(v, dict):
        return " ".join(f"{k}={_value(x)}" for k, x in v.items())
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(header, body, as_json):
    if as_json:
        return json.dumps({**header, **body}, indent=2)
    lines = [f"# {k}: {_value(v)}" for k, v in header.items()]
    if len(body) == 1:
        lines.append(_value(next(iter(body.values()))))
    else:
        lines.extend(f"{k}: {_value(v)}".rstrip() for k, v in body.items())
    return "\n".join(lines)


def run(argv) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "short" and args.what == "verify-row" and args.row is None:
            raise InputError("short verify-row needs --row")
        header, body = args.func(args)
        return CommandResult(EXIT_OK, render(header, body, args.json) + "\n")
    except _ArgumentError as exc:
        return CommandResult(EXIT_PARSE, "", f"error: {exc}\n")
    except ParseError as exc:
        return CommandResult(EXIT_PARSE, "", f"parse error: {exc}\n")
    except InputError as exc:
        return CommandResult(EXIT_INPUT, "", f"invalid input: {exc}\n")
    except InvariantError as exc:
        return CommandResult(EXIT_INTERNAL, "", f"internal error: {exc}\n")


def main(argv=None):
    res = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.output)
    sys.stderr.write(res.error)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
