"""Command-line interface: ``dwcolor cn | invariant | pd | check``.

Exit codes: 0 on success, 1 on bad input, 2 when routes disagree or a
consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cyclotomic import check_order
from .engine import closure_of, coloring_count_formula, invariant_report
from .errors import DWColorError, NonIntegerTrace
from .fox_oracle import count_colorings
from .tangle import (
    Frac,
    format_montesinos,
    format_word,
    from_pd_json,
    montesinos_word,
    parse_montesinos,
    parse_word,
    to_pd_json,
)

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2
ROUTES = ("formula", "engine", "oracle")
DEFAULT_N_LIST = tuple(range(3, 16, 2))

CORPUS = (
    ("1/3",),
    ("-1/3",),
    ("2/5",),
    ("-2/5",),
    ("3/7",),
    ("5/2",),
    ("7/2",),
    ("3/1",),
    ("3", "3", "3"),
    ("-2", "3", "5"),
    ("3", "5", "7"),
    ("5", "5", "5"),
    ("1/3", "1/3"),
    ("2/5", "3/7"),
)


def corpus_specs():
    return [tuple(Frac.of(Fraction(x)) for x in entry) for entry in CORPUS]


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _order(text):
    try:
        n = int(text)
    except ValueError:
        raise InputError(f"n must be an integer, got {text!r}") from None
    return check_order(n)


def _orders(args):
    if args.n is not None and args.n_list is not None:
        raise InputError("give either --n or --n-list, not both")
    if args.n is not None:
        return [_order(args.n)], False
    if args.n_list is not None:
        items = [x for x in args.n_list.split(",") if x.strip()]
        if not items:
            raise InputError("--n-list is empty")
        return [_order(x.strip()) for x in items], True
    return None, False


class _Input:
    """The one input form given on the command line."""

    def __init__(self, args):
        given = [k for k in ("montesinos", "word", "pd") if getattr(args, k, None) is not None]
        if len(given) != 1:
            raise InputError("give exactly one of --montesinos, --word, --pd")
        self.kind = given[0]
        self.spec = self.word = self.diagram = None
        if self.kind == "montesinos":
            self.spec = parse_montesinos(args.montesinos)
            self.word = montesinos_word(self.spec)
            self.text = format_montesinos(self.spec)
        elif self.kind == "word":
            self.word = parse_word(args.word)
            self.text = format_word(self.word)
        else:
            try:
                with open(args.pd, encoding="utf-8") as fh:
                    self.diagram = from_pd_json(fh.read())
            except OSError as exc:
                raise InputError(f"cannot read {args.pd}: {exc.strerror}") from None
            self.text = args.pd
        if self.diagram is None:
            self.diagram = closure_of(self.word)


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print("\n".join(text_lines))


# -- commands ----------------------------------------------------------------


def _available_routes(inp, selector):
    if selector == "all":
        wanted = list(ROUTES)
    else:
        wanted = [selector]
    usable = {
        "formula": inp.spec is not None,
        "engine": inp.word is not None,
        "oracle": True,
    }
    if selector != "all" and not usable[selector]:
        raise InputError(f"route {selector!r} is not available for --{inp.kind} input")
    return [r for r in wanted if usable[r]]


def _cn_routes(inp, n, routes):
    out = {}
    for route in routes:
        if route == "formula":
            out[route] = coloring_count_formula(inp.spec, n, allow_links=True)
        elif route == "engine":
            out[route] = invariant_report(inp.word, n, allow_links=True).cn
        else:
            out[route] = count_colorings(inp.diagram, n)
    return out


def cmd_cn(args):
    inp = _Input(args)
    orders, many = _orders(args)
    if orders is None:
        raise InputError("--n or --n-list is required")
    routes = _available_routes(inp, args.route)
    results = []
    for n in orders:
        values = _cn_routes(inp, n, routes)
        results.append(
            {"input": inp.text, "n": n, "routes": values, "agree": len(set(values.values())) == 1}
        )
    lines = []
    for r in results:
        shown = "  ".join(f"{k}={v}" for k, v in r["routes"].items())
        flag = "" if r["agree"] else "  DISAGREE"
        lines.append(f"CN_{r['n']}({r['input']}): {shown}{flag}")
    _emit(args, results if many else results[0], lines)
    return EXIT_OK if all(r["agree"] for r in results) else EXIT_MISMATCH


def report_to_json(text, report):
    return {
        "input": text,
        "n": report.n,
        "value_plus": report.value_plus,
        "value_minus": report.value_minus,
        "writhe_parity": report.writhe_parity,
        "cn": report.cn,
    }


def cmd_invariant(args):
    inp = _Input(args)
    if inp.word is None:
        raise InputError("the invariant command needs --word or --montesinos")
    orders, many = _orders(args)
    if orders is None:
        raise InputError("--n or --n-list is required")
    payloads, lines = [], []
    for n in orders:
        report = invariant_report(inp.word, n)
        if args.sign is None:
            payload = report_to_json(inp.text, report)
            lines.append(
                f"n={n}  F(K,V+)={report.value_plus}  F(K,V-)={report.value_minus}  "
                f"writhe parity={report.writhe_parity}"
            )
        else:
            value = report.value_plus if args.sign == "+" else report.value_minus
            payload = {"input": inp.text, "n": n, "sign": args.sign, "value": value}
            lines.append(f"n={n}  F(K,V{args.sign})={value}")
        payloads.append(payload)
    _emit(args, payloads if many else payloads[0], lines)
    return EXIT_OK


def cmd_pd(args):
    inp = _Input(args)
    print(to_pd_json(inp.diagram))
    return EXIT_OK


def _check_one(spec, n):
    """Run every route on one corpus entry; returns (values, problems)."""
    problems = []
    word = montesinos_word(spec)
    diagram = closure_of(word)
    values = {
        "formula": coloring_count_formula(spec, n, allow_links=True),
        "oracle": count_colorings(diagram, n),
    }
    try:
        report = invariant_report(word, n, allow_links=True)
    except NonIntegerTrace as exc:
        values["engine"] = None
        problems.append(f"engine: {exc}")
    else:
        values["engine"] = report.cn
        if report.cn != report.value_plus:
            problems.append("CN != F(K,V+)")
        if abs(report.value_minus) != report.value_plus:
            problems.append("|F(K,V-)| != F(K,V+)")
    if len(set(values.values())) != 1:
        problems.append("routes disagree")
    cn = values["oracle"]
    if cn % n or cn < n:
        problems.append("CN not a positive multiple of n")
    return values, problems


def cmd_check(args):
    orders, _ = _orders(args)
    orders = orders or list(DEFAULT_N_LIST)
    rows = []
    for spec in corpus_specs():
        for n in orders:
            values, problems = _check_one(spec, n)
            rows.append(
                {
                    "input": format_montesinos(spec),
                    "n": n,
                    "routes": {r: values[r] for r in ROUTES},
                    "ok": not problems,
                    "problems": problems,
                }
            )
    failures = sum(not r["ok"] for r in rows)
    if args.format == "json":
        print(json.dumps({"n_list": orders, "cases": rows, "failures": failures}))
    else:
        width = max(len(r["input"]) for r in rows)
        print(f"{'input':<{width}}  {'n':>3}  {'formula':>8}  {'engine':>8}  {'oracle':>8}  status")
        for r in rows:
            v = r["routes"]
            status = "ok" if r["ok"] else "FAIL: " + "; ".join(r["problems"])
            print(
                f"{r['input']:<{width}}  {r['n']:>3}  {v['formula']!s:>8}  {v['engine']!s:>8}"
                f"  {v['oracle']!s:>8}  {status}"
            )
        print(f"{len(rows)} cases, {failures} failures")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


# -- argument parsing ---------------------------------------------------------


def build_parser():
    parser = _Parser(prog="dwcolor", description="Fox colorings and dihedral quantum invariants of arborescent knots.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def inputs(p, pd=True):
        p.add_argument("--montesinos", metavar="STR", help="comma-separated fractions, e.g. 1/3,-2,5/2")
        p.add_argument("--word", metavar="STR", help="tangle word, e.g. 'rt(2*rt(3))'")
        if pd:
            p.add_argument("--pd", metavar="FILE", help="planar diagram JSON file")

    def orders(p):
        p.add_argument("--n", metavar="INT", help="odd order n >= 3")
        p.add_argument("--n-list", metavar="CSV", help="comma-separated odd orders")

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("cn", help="number of Fox n-colorings")
    inputs(p)
    orders(p)
    p.add_argument("--route", choices=ROUTES + ("all",), default="all")
    fmt(p)
    p.set_defaults(func=cmd_cn)

    p = sub.add_parser("invariant", help="F(K,V+) and F(K,V-) of a knot")
    inputs(p, pd=False)
    orders(p)
    p.add_argument("--sign", choices=("+", "-"))
    fmt(p)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("pd", help="planar diagram of the closure as JSON")
    inputs(p, pd=False)
    p.set_defaults(func=cmd_pd)

    p = sub.add_parser("check", help="cross-check all routes on the built-in corpus")
    orders(p)
    fmt(p)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DWColorError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
