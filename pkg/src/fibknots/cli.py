"""Command line interface: ``fibknots <command> ...``.

Commands: fraction, normalize, conway, alexander, fib, table, verify.
Every command takes ``--format text|json|csv`` (csv only for ``table``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from math import gcd

from .contfrac import ContinuedFraction, Fraction, even_expansion
from .fiblinks import (
    FibLinkParams,
    LinkType,
    classify,
    closed_form_index,
    fib_link,
    mod2_closed_form,
    paper_expansion,
)
from .links import from_notation, normal_form
from .lissajous import obstruction
from .poly import GF2Poly, IntPoly, LaurentPoly, alexander_polynomial, conway_polynomial, mod2
from .verify import run_all

TABLE_COLUMNS = (
    "n", "j", "alpha", "beta", "components", "expansion", "conway",
    "conway_mod2", "N", "closed_form", "match", "lissajous",
)

LINK_NOTE = (
    "two-component link: the Conway polynomial is the value for this even "
    "expansion; other expansions of the same unoriented link may differ"
)


class NotationError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


_TOKEN = re.compile(r"\s*([+-]?\d+)\s*")


def parse_notation(text: str) -> ContinuedFraction:
    """Parse ``C(2,3,-2)``, ``[2, 3, -2]`` or ``2 3 -2``.

    Column numbers in errors are 1-based positions in ``text``.
    """
    if not text.strip():
        raise NotationError("empty notation", 1)
    start, end = 0, len(text)
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    for opener, closer in (("C(", ")"), ("[", "]")):
        if text.startswith(opener, start):
            if text[end - 1] != closer or end - start < len(opener) + 1:
                raise NotationError(f"expected closing {closer!r}", end + 1)
            start, end = start + len(opener), end - 1
            break
    quotients = []
    pos = start
    comma = None  # column of a comma still waiting for its value
    while pos < end:
        if quotients and comma is None and text[pos] == ",":
            comma = pos + 1
            pos += 1
            continue
        m = _TOKEN.match(text, pos, end)
        if not m:
            bad = pos
            while bad < end and text[bad].isspace():
                bad += 1
            if bad == end:
                break
            raise NotationError(f"unexpected character {text[bad]!r}", bad + 1)
        value = int(m.group(1))
        if value == 0 and quotients:
            raise NotationError("zero quotient after the first position", m.start(1) + 1)
        quotients.append(value)
        pos = m.end()
        comma = None
    if comma is not None:
        raise NotationError("trailing comma", comma)
    return ContinuedFraction(tuple(quotients))


def parse_fraction(text: str) -> Fraction:
    m = re.fullmatch(r"\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*", text)
    if not m:
        raise ValueError(f"cannot parse fraction {text!r}; expected alpha/beta")
    alpha, beta = int(m.group(1)), int(m.group(2))
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if gcd(alpha, beta) != 1:
        raise ValueError(f"{alpha}/{beta} is not reduced: not a canonical Schubert fraction")
    return Fraction(alpha, beta)


def parse_range(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m or int(m.group(1)) > int(m.group(2)):
        raise argparse.ArgumentTypeError(f"expected a range like 1..9, got {text!r}")
    return range(int(m.group(1)), int(m.group(2)) + 1)


# -- rendering ----------------------------------------------------------------

def poly_json(p):
    if isinstance(p, IntPoly):
        return {"variable": "z", "coeffs": list(p.coeffs)}
    if isinstance(p, LaurentPoly):
        return {"variable": "t", "min_degree": p.min_degree, "coeffs": list(p.coeffs)}
    if isinstance(p, GF2Poly):
        return p.coeffs
    raise TypeError(type(p))


def render_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=True) + "\n"


def render_text(record: dict) -> str:
    width = max(len(k) for k in record)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in record.items())


def _conway_input(notation: ContinuedFraction):
    """Even expansion to feed the matrix formula: the notation itself when it
    is already all-even without zeros, otherwise the link's normal form."""
    link = from_notation(notation)
    if notation.is_even() and all(notation):
        return link, notation
    return link, normal_form(link.fraction).quotients


def fib_record(n: int, j: int) -> dict:
    """Typed record for ``F_j^(n)``; polynomials kept as objects."""
    p = FibLinkParams(n, j)
    link = fib_link(p)
    if n % 2:
        expansion = paper_expansion(p).quotients
    else:
        expansion = link.notation
    nabla = conway_polynomial(expansion)
    nabla2 = mod2(nabla)
    closed = mod2_closed_form(p)
    verdict = obstruction(link) if classify(p) is LinkType.KNOT else None
    return {
        "n": n,
        "j": j,
        "alpha": link.fraction.num,
        "beta": link.fraction.den,
        "components": link.components,
        "expansion": list(expansion),
        "conway": nabla,
        "conway_mod2": nabla2,
        "N": closed_form_index(p).N,
        "closed_form": closed,
        "match": nabla2 == closed,
        "lissajous": verdict.status.value if verdict else "link",
    }


def _jsonable(record: dict) -> dict:
    return {k: poly_json(v) if isinstance(v, (IntPoly, GF2Poly, LaurentPoly)) else v
            for k, v in record.items()}


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ",".join(str(x) for x in v) + "]"
    return str(v)


def table_csv(n_range, j_range) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for n in n_range:
        for j in j_range:
            rec = fib_record(n, j)
            w.writerow([_cell(rec[c]) for c in TABLE_COLUMNS])
    return buf.getvalue()


# -- commands -----------------------------------------------------------------

def cmd_fraction(args, out):
    notation = parse_notation(args.notation)
    link = from_notation(notation)
    rec = {
        "notation": list(notation),
        "fraction": str(link.fraction),
        "determinant": link.determinant,
        "components": link.components,
    }
    if args.format == "json":
        out.write(render_json(rec))
    else:
        out.write(f"{link.fraction}\n")


def cmd_normalize(args, out):
    f = parse_fraction(args.fraction)
    e = even_expansion(f)
    rec = {
        "fraction": str(f),
        "expanded": str(e.fraction),
        "s_applied": e.s_applied,
        "expansion": list(e.quotients),
    }
    if args.format == "json":
        out.write(render_json(rec))
    else:
        out.write(f"{e.quotients}\n")
        if e.s_applied:
            out.write(f"s-substitution applied: expanded {e.fraction} (same link as {f})\n")


def cmd_conway(args, out):
    link, expansion = _conway_input(parse_notation(args.notation))
    nabla = conway_polynomial(expansion)
    rec = {
        "fraction": str(link.fraction),
        "expansion": list(expansion),
        "conway": poly_json(nabla),
        "conway_mod2": poly_json(mod2(nabla)),
    }
    if not link.is_knot:
        rec["note"] = LINK_NOTE
    if args.format == "json":
        out.write(render_json(rec))
    else:
        out.write(f"{nabla}\n")
        if not link.is_knot:
            out.write(f"note: {LINK_NOTE}\n")


def cmd_alexander(args, out):
    link, expansion = _conway_input(parse_notation(args.notation))
    if not link.is_knot:
        raise ValueError(
            f"link of fraction {link.fraction} has two components; "
            "the Alexander polynomial is only computed for knots"
        )
    delta = alexander_polynomial(conway_polynomial(expansion))
    if args.format == "json":
        out.write(render_json({"fraction": str(link.fraction), "alexander": poly_json(delta)}))
    else:
        out.write(f"{delta}\n")


def cmd_fib(args, out):
    rec = fib_record(args.n, args.j)
    if args.format == "json":
        out.write(render_json(_jsonable(rec)))
        return
    text = {k: _cell(v) for k, v in rec.items()}
    text["closed_form"] = f"f_{rec['N']} = {rec['closed_form']}"
    if rec["components"] == 2:
        text["note"] = LINK_NOTE
    out.write(render_text(text))


def cmd_table(args, out):
    if args.format == "csv":
        out.write(table_csv(args.n_range, args.j_range))
        return
    rows = [fib_record(n, j) for n in args.n_range for j in args.j_range]
    if args.format == "json":
        out.write(render_json([_jsonable(r) for r in rows]))
        return
    cells = [list(TABLE_COLUMNS)] + [[_cell(r[c]) for c in TABLE_COLUMNS] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(TABLE_COLUMNS))]
    for row in cells:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def cmd_verify(args, out):
    results = run_all(args.max_n, args.max_j, seed=args.seed)
    passed = sum(r.passed for r in results)
    if args.format == "json":
        out.write(render_json({
            "checks": [
                {"name": r.name, "passed": r.passed, "cells": r.cells, "failures": r.failures}
                for r in results
            ],
            "passed": passed,
            "total": len(results),
        }))
    else:
        for r in results:
            out.write(f"{r}\n")
            for label in r.failures[:10]:
                out.write(f"    failed: {label}\n")
        out.write(f"{passed}/{len(results)} checks passed\n")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    parser = argparse.ArgumentParser(prog="fibknots", description="Invariants of rational knots and Fibonacci links.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fraction", parents=[common], help="Schubert fraction of a Conway notation")
    p.add_argument("notation")
    p.set_defaults(func=cmd_fraction)

    p = sub.add_parser("normalize", parents=[common], help="even continued fraction of alpha/beta")
    p.add_argument("fraction")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("conway", parents=[common], help="Conway polynomial")
    p.add_argument("notation")
    p.set_defaults(func=cmd_conway)

    p = sub.add_parser("alexander", parents=[common], help="Alexander polynomial of a knot")
    p.add_argument("notation")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("fib", parents=[common], help="record for the Fibonacci link F_j^(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_fib)

    p = sub.add_parser("table", parents=[common], help="atlas of Fibonacci links")
    p.add_argument("--n-range", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--j-range", type=parse_range, required=True, metavar="C..D")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run the full invariant suite")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--max-j", type=int, default=15)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "csv" and args.command != "table":
        parser.error("--format csv is only available for 'table'")
    try:
        status = args.func(args, out)
    except ValueError as exc:
        print(f"fibknots {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
