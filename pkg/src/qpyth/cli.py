"""Command-line front end.

Every command builds its full output before printing anything, so a failing
command leaves stdout empty. Exit codes: 0 ok, 1 usage error, 2 verification
failure, 3 unimodality counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys

from .poly import PolyError, parse_coeffs, to_json, to_text
from .qarith import (
    QArithError,
    cf_expand,
    format_cf,
    format_fraction,
    parse_fraction,
    q_rational_any,
)
from .qtriples import (
    QTripleError,
    check_conditions,
    q_triple,
    series_solution,
    unimodality_scan,
    verify_pythagoras,
    QPythTriple,
)
from .search import SearchBounds, SearchError, search_solutions
from .triples import MAX_TREE_DEPTH, TripleError, euclid_triple, is_standard, pythagorean_tree

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_COUNTEREXAMPLE = 3

USER_ERRORS = (PolyError, QArithError, TripleError, QTripleError, SearchError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which we reserve for failed checks
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _depth_cap(text: str) -> int:
    v = _positive(text)
    if v > MAX_TREE_DEPTH:
        raise argparse.ArgumentTypeError(f"capped at {MAX_TREE_DEPTH}, got {v}")
    return v


def _global_flags(defaults: bool) -> argparse.ArgumentParser:
    # the same flags are accepted before and after the command name; only the
    # top-level copy sets defaults so a later copy does not clobber an earlier one
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=d(False), help="JSON output")
    p.add_argument("--max-depth", type=_depth_cap, default=d(MAX_TREE_DEPTH),
                   help=f"depth cap for tree commands (<= {MAX_TREE_DEPTH})")
    p.add_argument("--max-m", type=_positive, default=d(40), help="numerator bound for scans")
    p.add_argument("--max-deg", type=_positive, default=d(None), help="search: max deg C")
    p.add_argument("--max-coeff", type=_positive, default=d(None), help="search: coefficient cap")
    p.add_argument("--require-unimodal", action="store_true", default=d(False),
                   help="search: keep only unimodal A, B, C")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qpyth", description="q-deformed rationals and Pythagorean triples",
                     parents=[_global_flags(True)])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    flags = [_global_flags(False)]

    p = sub.add_parser("qrat", parents=flags, help="numerator and denominator of [m/n]_q")
    p.add_argument("fraction")
    p = sub.add_parser("cf", parents=flags, help="odd-length continued fraction of m/n >= 1")
    p.add_argument("fraction")
    p = sub.add_parser("triple", parents=flags, help="Euclid triple of coprime m >= n")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p = sub.add_parser("qtriple", parents=flags, help="q-deformed triple of m/n > 1")
    p.add_argument("fraction")
    p = sub.add_parser("series", parents=flags, help="series solution for n >= 2")
    p.add_argument("n", type=int)
    p = sub.add_parser("verify", parents=flags, help="check A^2 + q B^2 = C C*")
    p.add_argument("A", help="ascending coefficients, e.g. 1,1,1,1")
    p.add_argument("B")
    p.add_argument("C")
    for name, hlp in (("tree", "Pythagorean tree"), ("qtree", "Pythagorean tree with q-triples")):
        p = sub.add_parser(name, parents=flags, help=hlp)
        p.add_argument("depth", type=int, nargs="?", default=3)
        if name == "tree":
            p.add_argument("--q", action="store_true", help="attach q-triples to nodes")
    p = sub.add_parser("search", parents=flags, help="bounded search for solutions over a b c")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    sub.add_parser("scan-unimodal", parents=flags, help="unimodality scan up to --max-m")
    return parser


# -- renderers --------------------------------------------------------------

def _triple_lines(t: QPythTriple) -> list[str]:
    rep = check_conditions(t)
    return [
        f"A  = {to_text(t.A)}",
        f"B  = {to_text(t.B)}",
        f"C  = {to_text(t.C)}",
        f"C* = {to_text(t.Cstar)}",
        f"q=1: {t.classical()}",
        f"A^2 + q B^2 = C C*: {verify_pythagoras(t.A, t.B, t.C)}",
        f"positive {rep.con1}, palindromic {rep.con2}, monic {rep.con3}, "
        f"unimodal {rep.con4_conjectural}",
    ]


def _triple_json(t: QPythTriple) -> dict:
    out = t.to_json()
    out["pythagoras"] = verify_pythagoras(t.A, t.B, t.C)
    return out


def cmd_qrat(args):
    r = q_rational_any(parse_fraction(args.fraction))
    if args.json:
        return r.to_json(), EXIT_OK
    return [f"[{format_fraction(r.base)}]_q", f"num: {to_text(r.num)}",
            f"den: {to_text(r.den)}"], EXIT_OK


def cmd_cf(args):
    f = parse_fraction(args.fraction)
    cf = cf_expand(f)
    if args.json:
        return {"fraction": format_fraction(f), "cf": list(cf)}, EXIT_OK
    return [format_cf(cf)], EXIT_OK


def cmd_triple(args):
    t = euclid_triple(args.m, args.n)
    if args.json:
        return {"m": args.m, "n": args.n, "triple": list(t.display()),
                "standard": is_standard(t)}, EXIT_OK
    return [str(t)], EXIT_OK


def cmd_qtriple(args):
    t = q_triple(parse_fraction(args.fraction))
    if args.json:
        return _triple_json(t), EXIT_OK
    return [f"base {format_fraction(t.base)}", *_triple_lines(t)], EXIT_OK


def cmd_series(args):
    t = series_solution(args.n)
    if args.json:
        return _triple_json(t), EXIT_OK
    return [f"n = {args.n}", *_triple_lines(t)], EXIT_OK


def cmd_verify(args):
    A, B, C = (parse_coeffs(x) for x in (args.A, args.B, args.C))
    if not C:
        raise UsageError("C must be nonzero")
    t = QPythTriple(A, B, C)
    ok = verify_pythagoras(A, B, C)
    code = EXIT_OK if ok else EXIT_VERIFY
    if args.json:
        return _triple_json(t), code
    return _triple_lines(t), code


def _tree_nodes(depth: int, with_q: bool):
    for node in pythagorean_tree(depth).walk():
        item = {
            "word": node.word,
            "triple": list(node.triple.display()),
            "fraction": format_fraction(node.fraction) if node.fraction else None,
        }
        if with_q and node.fraction is not None and node.fraction > 1:
            t = q_triple(node.fraction)
            item.update(A=to_json(t.A), B=to_json(t.B), C=to_json(t.C))
        yield item


def cmd_tree(args):
    if args.depth < 0 or args.depth > args.max_depth:
        raise UsageError(f"depth must be in [0, {args.max_depth}]")
    with_q = args.command == "qtree" or getattr(args, "q", False)
    nodes = list(_tree_nodes(args.depth, with_q))
    if args.json:
        return {"depth": args.depth, "nodes": nodes}, EXIT_OK
    lines = []
    for n in nodes:
        a, b, c = n["triple"]
        line = "  " * len(n["word"]) + f"({a},{b},{c}) {n['word'] or '.'}"
        if n["fraction"]:
            line += f"  {n['fraction']}"
        if "A" in n:
            line += "  A=" + ",".join(n["A"]) + " B=" + ",".join(n["B"]) + " C=" + ",".join(n["C"])
        lines.append(line)
    return lines, EXIT_OK


def cmd_search(args):
    target = (args.a, args.b, args.c)
    bounds = SearchBounds(
        max_deg_C=args.max_deg if args.max_deg is not None else 7,
        max_coeff=args.max_coeff if args.max_coeff is not None else max(args.c, 1),
        require_unimodal=args.require_unimodal,
    )

    def progress(examined, found):
        print(f"examined {examined} (A, B) pairs, {found} solutions", file=sys.stderr)

    res = search_solutions(target, bounds, progress=progress)
    if args.json:
        return res.to_json(), EXIT_OK
    lines = [f"target ({args.a},{args.b},{args.c}), deg C <= {bounds.max_deg_C}, "
             f"coefficients <= {bounds.max_coeff}: {len(res)} solutions"]
    for i, s in enumerate(res, 1):
        lines += [f"#{i} ({s.terms()} terms)", f"  A = {to_text(s.A)}",
                  f"  B = {to_text(s.B)}", f"  C = {to_text(s.C)}"]
    return lines, EXIT_OK


def cmd_scan_unimodal(args):
    checked, bad = unimodality_scan(args.max_m)
    code = EXIT_COUNTEREXAMPLE if bad else EXIT_OK
    if args.json:
        return {"max_m": args.max_m, "checked": checked, "counterexamples": len(bad),
                "failures": [[format_fraction(f), which] for f, which in bad]}, code
    lines = [f"checked {checked} fractions with m <= {args.max_m}: "
             f"{len(bad)} counterexamples"]
    lines += [f"  {format_fraction(f)}: {which} not unimodal" for f, which in bad]
    return lines, code


COMMANDS = {
    "qrat": cmd_qrat,
    "cf": cmd_cf,
    "triple": cmd_triple,
    "qtriple": cmd_qtriple,
    "series": cmd_series,
    "verify": cmd_verify,
    "tree": cmd_tree,
    "qtree": cmd_tree,
    "search": cmd_search,
    "scan-unimodal": cmd_scan_unimodal,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, or a usage error already reported
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        out, code = COMMANDS[args.command](args)
    except (UsageError, *USER_ERRORS) as exc:
        print(f"qpyth {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(out))
    else:
        print("\n".join(out))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
