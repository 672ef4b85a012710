"""Command-line front end. Every subcommand reads and writes UTF-8 JSON.

Exit codes: 0 success, 1 verification failure, 2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import FAMILIES, format_table, run_bench
from .determinantal import d_poly
from .jsonio import (
    SCHEMA_VERSION,
    InvalidInputError,
    content_from_json,
    dumps,
    expansion_to_json,
    filling_from_json,
    load_json_arg,
    poly_to_json,
    shape_from_json,
    shape_to_json,
    tableau_to_json,
)
from .rearrange import ENGINES, rearrangement_coefficient
from .shapes import enumerate_ssyt
from .straighten import build_dbasis, gram_matrix, is_identity, straighten, verify_gram_schmidt
from .verify import SUITE_RUNNERS, SUITES

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


def _shape_and_content(args):
    if args.shape is None or args.content is None:
        raise InvalidInputError("--shape and --content are required")
    shape = shape_from_json(load_json_arg(args.shape))
    z = content_from_json(load_json_arg(args.content))
    return shape, z


def _filling(args, flag: str = "filling"):
    value = getattr(args, flag)
    if value is None:
        raise InvalidInputError(f"--{flag} is required")
    return filling_from_json(load_json_arg(value))


def cmd_ssyt(args) -> tuple[dict, int]:
    shape, z = _shape_and_content(args)
    # a content of the wrong total admits no tableaux at all
    tabs = enumerate_ssyt(shape, z) if sum(z) == shape.size else ()
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "shape": shape_to_json(shape),
        "content": list(z),
        "tableaux": [tableau_to_json(t) for t in tabs],
    }
    return doc, EXIT_OK


def cmd_straighten(args) -> tuple[dict, int]:
    f = _filling(args)
    if args.method != "both":
        return expansion_to_json(straighten(f, args.method, args.basis, args.engine)), EXIT_OK
    a = straighten(f, "noniterative", args.basis, args.engine)
    b = straighten(f, "iterative", args.basis)
    doc = expansion_to_json(a)
    doc["agree"] = a.coeffs == b.coeffs
    if not doc["agree"]:
        doc["diff"] = [
            {"index": i + 1, "noniterative": a.coeffs.get(i, 0), "iterative": b.coeffs.get(i, 0)}
            for i in sorted(set(a.coeffs) | set(b.coeffs))
            if a.coeffs.get(i, 0) != b.coeffs.get(i, 0)
        ]
        return doc, EXIT_FAILED
    return doc, EXIT_OK


def cmd_rcoeff(args) -> tuple[int, int]:
    f = _filling(args)
    s = _filling(args, "tableau")
    if f.shape != s.shape:
        raise InvalidInputError("filling and tableau have different shapes")
    return rearrangement_coefficient(f, s, args.engine), EXIT_OK


def cmd_dpoly(args) -> tuple[dict, int]:
    return poly_to_json(d_poly(_filling(args))), EXIT_OK


def cmd_dbasis(args) -> tuple[dict, int]:
    shape, z = _shape_and_content(args)
    try:
        ctx = enumerate_ssyt(shape, z)
    except ValueError as exc:
        raise InvalidInputError(str(exc)) from None
    db = build_dbasis(ctx, args.engine)
    gram = gram_matrix(db)
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "shape": shape_to_json(shape),
        "content": list(z),
        "tableaux": [tableau_to_json(t) for t in ctx],
        "transition": db.transition,
        "rcoeff": db.rcoeff,
        "gram": gram,
        "gramIsIdentity": is_identity(gram),
        "gramSchmidt": verify_gram_schmidt(db),
    }
    ok = doc["gramIsIdentity"] and doc["gramSchmidt"]
    return doc, EXIT_OK if ok else EXIT_FAILED


def cmd_verify(args) -> tuple[dict, int]:
    suite = args.suite
    kw: dict = {}
    if suite == "garnir-identity":
        kw = dict(count=args.count or 200, size_bound=args.size_bound or 7, seed=args.seed, m=args.m)
    elif suite == "gram":
        kw = dict(size_bound=args.size_bound or 5, m=args.m or 3)
    elif suite in ("equivalence", "engines"):
        kw = dict(size_bound=args.size_bound or 5, m=args.m or 3, samples=args.count or 0,
                  sample_size=args.sample_size, sample_m=args.sample_m, seed=args.seed)
    elif suite == "leading-monomial":
        kw = dict(size_bound=args.size_bound or 5, m=args.m)
    report = SUITE_RUNNERS[suite](**kw)
    return report.to_json(), EXIT_OK if report.ok else EXIT_FAILED


def cmd_bench(args) -> tuple[dict, int]:
    if args.repetitions < 5:
        raise InvalidInputError("--repetitions must be at least 5")
    result = run_bench(args.family, args.repetitions, args.samples, args.seed)
    result["table"] = format_table(result).splitlines()
    return result, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewschur", description="Straightening for skew Schur modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        p.add_argument("--out", help="write the JSON result here instead of stdout")
        return p

    json_help = "inline JSON or a path to a JSON file"

    p = add("ssyt", cmd_ssyt, "list the SSYT of a shape and content, largest first")
    p.add_argument("--shape", help=json_help)
    p.add_argument("--content", help=json_help)

    p = add("straighten", cmd_straighten, "expand a filling in the D-basis or the SSYT basis")
    p.add_argument("--filling", help=json_help)
    p.add_argument("--method", choices=("noniterative", "iterative", "both"), default="noniterative")
    p.add_argument("--basis", choices=("d", "ssyt"), default="d")
    p.add_argument("--engine", choices=ENGINES, default="backtrack")

    p = add("rcoeff", cmd_rcoeff, "print the rearrangement coefficient R(F, S)")
    p.add_argument("--filling", help=json_help)
    p.add_argument("--tableau", help=json_help)
    p.add_argument("--engine", choices=ENGINES, default="backtrack")

    p = add("dpoly", cmd_dpoly, "expand the determinantal polynomial D_F")
    p.add_argument("--filling", help=json_help)

    p = add("dbasis", cmd_dbasis, "build the D-basis of a context and its Gram matrix")
    p.add_argument("--shape", help=json_help)
    p.add_argument("--content", help=json_help)
    p.add_argument("--engine", choices=ENGINES, default="backtrack")

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--size-bound", type=int)
    p.add_argument("--m", type=int, help="alphabet size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, help="number of random instances")
    p.add_argument("--sample-size", type=int, default=6, help="cells per random instance")
    p.add_argument("--sample-m", type=int, default=4, help="alphabet of random instances")

    p = add("bench", cmd_bench, "compare non-iterative and iterative straightening")
    p.add_argument("--family", choices=sorted(FAMILIES), default="two-row")
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--text", action="store_true", help="print the table as text instead of JSON")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result, code = args.func(args)
    except ValueError as exc:  # InvalidInputError and library precondition failures
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "text", False):
        text = "\n".join(result["table"]) + "\n"
    else:
        text = dumps(result)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
