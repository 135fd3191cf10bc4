"""Command line driver: ``nilalg {derive,reduce,linearize,verify,dims}``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage
or parse errors.  ``NILALG_FORMAT`` sets the default output format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import List, Optional

from . import theorems
from .linearize import delta
from .magma import ParseError, parse, render
from .onevar import Variety
from .opalgebra import OperatorAlgebra, WordParseError, display_key, parse_oppoly, render_word, word_key
from .ratlinalg import format_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMAT_ENV = "NILALG_FORMAT"


def _default_format() -> str:
    fmt = os.environ.get(FORMAT_ENV, "text").strip().lower()
    return fmt if fmt in ("text", "json") else "text"


def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _terms(p) -> List[dict]:
    return [{"word": render_word(w), "coeff": format_rational(c)}
            for w, c in sorted(p.items(), key=lambda t: word_key(t[0]), reverse=True)]


def _variety(parser: argparse.ArgumentParser, args) -> Variety:
    try:
        return Variety.parse(args.variety)
    except ValueError as exc:
        parser.error(str(exc))


def _max_degree(parser, args, variety: Variety) -> int:
    top = variety.cap if args.max_degree is None else args.max_degree
    if not 1 <= top <= variety.cap:
        parser.error(f"--max-degree must lie in 1..{variety.cap} for {variety.label}")
    return top


def cmd_derive(parser, args) -> int:
    variety = _variety(parser, args)
    top = _max_degree(parser, args, variety)
    alg = OperatorAlgebra(variety, exhaustive=args.exhaustive)
    tables = alg.tables(top)
    letters = {f"T{k}": alg.letter_rule(k) for k in "3456" if int(k) <= top}
    if args.format == "json":
        doc = {
            "variety": variety.label,
            "max_degree": top,
            "letter_rules": [{"letter": k, "tail": _terms(v)} for k, v in letters.items()],
            "tables": [t.to_json() for t in tables],
        }
        if args.normal_forms:
            doc["normal_forms"] = alg.onevar.table_json(min(top, alg.onevar.max_degree))
        _emit(_dump(doc), args.out)
    else:
        lines = [f"variety {variety.label}, degrees 1..{top}", ""]
        for k, v in letters.items():
            lines.append(f"{k} = {v}")
        for t in tables:
            lines.append("")
            lines.append(t.render_text())
            lines.append("canonical: " + (" ".join(render_word(w) for w in sorted(t.canonical, key=display_key, reverse=True)) or "none"))
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_reduce(parser, args) -> int:
    variety = _variety(parser, args)
    try:
        poly = parse_oppoly(args.expression)
    except WordParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    alg = OperatorAlgebra(variety, exhaustive=args.exhaustive)
    try:
        result = alg.reduce(poly)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        _emit(_dump({"variety": variety.label, "input": args.expression,
                     "result": str(result), "terms": _terms(result)}), args.out)
    else:
        _emit(str(result), args.out)
    return EXIT_OK


def cmd_linearize(parser, args) -> int:
    if not args.arg:
        parser.error("linearize needs at least one --arg")
    try:
        target = parse(args.target)
        margs = [parse(a) for a in args.arg]
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = delta(margs, target, args.var)
    if args.format == "json":
        _emit(_dump({"target": render(target), "args": [render(a) for a in margs],
                     "var": args.var, "result": render(result)}), args.out)
    else:
        _emit(render(result), args.out)
    return EXIT_OK


def cmd_verify(parser, args) -> int:
    reports = theorems.verify(args.theorem)
    if args.format == "json":
        doc = reports[0].to_json() if len(reports) == 1 else {"reports": [r.to_json() for r in reports]}
        _emit(_dump(doc), args.out)
    else:
        _emit("\n\n".join(r.render_text() for r in reports), args.out)
    if args.figure:
        from .plotting import plot_dimension_profiles

        plot_dimension_profiles({r.variety: r.dims for r in reports}, args.figure,
                                title="quotient dimension by degree")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_dims(parser, args) -> int:
    if args.variety == "all":
        varieties = list(Variety)
    else:
        varieties = [_variety(parser, args)]
    if len(varieties) > 1 and args.max_degree is not None and not 1 <= args.max_degree <= 12:
        parser.error("--max-degree must lie in 1..12")
    profiles = {}
    for v in varieties:
        if len(varieties) == 1:
            top = _max_degree(parser, args, v)
        else:
            # each variety is clipped to its own cap
            top = v.cap if args.max_degree is None else min(args.max_degree, v.cap)
        profiles[v.label] = theorems.quotient_dimensions(v, top, args.exhaustive)
    if args.format == "json":
        _emit(_dump(profiles), args.out)
    else:
        top = max(len(p) for p in profiles.values())
        rows = ["\t".join(["degree"] + list(profiles))]
        for d in range(top):
            rows.append("\t".join([str(d + 1)] + [str(p[d]) if d < len(p) else "" for p in profiles.values()]))
        _emit("\n".join(rows), args.out)
    if args.figure:
        from .plotting import plot_dimension_profiles

        plot_dimension_profiles(profiles, args.figure, title="quotient dimension by degree")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, variety=True):
        if variety:
            p.add_argument("--variety", default="nil4", help="nil4 | nil4-b5 | nil4-b6")
        p.add_argument("--format", choices=("text", "json"), default=_default_format())
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        p.add_argument("--exhaustive", action="store_true",
                       help="linearize with every monomial instead of basis representatives")

    p = sub.add_parser("derive", help="print reduction tables degree by degree")
    common(p)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--normal-forms", action="store_true", help="include one-variable normal forms (json)")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("reduce", help="reduce a word or word polynomial")
    common(p)
    p.add_argument("expression")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("linearize", help="linearize a polynomial in x (or y)")
    p.add_argument("target")
    p.add_argument("--arg", action="append", default=[], help="argument; repeat for several")
    p.add_argument("--var", choices=("x", "y"), default="x")
    p.add_argument("--format", choices=("text", "json"), default=_default_format())
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_linearize)

    p = sub.add_parser("verify", help="verify one theorem or all of them")
    p.add_argument("theorem", choices=("1", "2", "3", "all"))
    p.add_argument("--format", choices=("text", "json"), default=_default_format())
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--figure", metavar="PATH", help="also plot the dimension profiles")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dims", help="quotient dimension per degree (tab separated)")
    common(p)
    p.set_defaults(variety="all")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--figure", metavar="PATH", help="also plot the profile")
    p.set_defaults(func=cmd_dims)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except (ParseError, WordParseError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
