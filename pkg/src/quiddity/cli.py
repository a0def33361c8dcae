"""Command-line front end.

One flat verb per module operation: enumeration (``enumerate``,
``count``, ``quiddities``, ``classes``, ``of``), closed forms
(``formula``, ``table``), generating series (``series``), surgery
(``surgery``), continued fractions (``cf``), matrix products
(``modular``) and the oracle suite (``verify-all``).  Machine-readable
output, deterministic byte for byte; counting verbs go through a
persistent cache unless ``--no-cache`` is given.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__, formulas, series
from .cache import ResultCache, resolve_cache_dir
from .contfrac import (
    HirzebruchJungContinuedFraction,
    RegularContinuedFraction,
    eval_hj,
    eval_regular,
    regular_to_hj,
    strip_triangulation,
)
from .core import DomainError, parse_dissection, quiddity
from .enumeration import (
    ALL_CELLS,
    CellFilter,
    count_dissections,
    count_quiddities,
    enumerate_dissections,
    quiddity_classes,
)
from .modular import classify_monodromy, elementary_product, verify_monodromy_correspondence
from .surgery import (
    BasedDissection,
    apply_surgery,
    canonicalize_maximally_open,
    class_export,
    find_surgeries,
)
from .verification import run_all


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_filter(args: argparse.Namespace) -> CellFilter:
    if getattr(args, "ell", None) is not None and getattr(args, "sizes", None):
        raise DomainError("give at most one of --ell and --sizes")
    if getattr(args, "ell", None) is not None:
        return CellFilter.ell_periodic(args.ell)
    if getattr(args, "sizes", None):
        try:
            sizes = {int(tok) for tok in args.sizes.split(",")}
        except ValueError:
            raise DomainError(f"bad size list {args.sizes!r}") from None
        return CellFilter.size_set(sizes)
    return ALL_CELLS


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise DomainError(f"bad {what} {text!r}") from None


def _print_fraction(value: Fraction, as_json: bool, out) -> None:
    if as_json:
        print(_dumps({"r": value.numerator, "s": value.denominator}), file=out)
    else:
        print(f"{value.numerator}/{value.denominator}", file=out)


def _add_filter_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--ell", type=int, help="keep cells of size 3 mod ell")
    sub.add_argument("--sizes", help="comma-separated allowed cell sizes")


def _add_cache_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--no-cache", action="store_true")
    sub.add_argument("--cache-dir")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiddity",
        description="Enumerate polygon dissections and their quiddities.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("of", help="quiddity of a dissection")
    p.add_argument("dissection")
    p.add_argument("--json", action="store_true")

    p = verbs.add_parser("enumerate", help="stream all dissections, one per line")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    _add_filter_flags(p)
    p.add_argument("--max-results", type=int)
    p.add_argument("--json", action="store_true")

    p = verbs.add_parser("count", help="number of dissections")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_filter_flags(p)
    _add_cache_flags(p)
    p.add_argument("--json", action="store_true")

    p = verbs.add_parser("quiddities", help="number of distinct quiddities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_filter_flags(p)
    _add_cache_flags(p)
    p.add_argument("--json", action="store_true")

    p = verbs.add_parser("classes", help="map from quiddity to dissections")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_filter_flags(p)
    p.add_argument("--max-results", type=int, default=10_000_000)

    p = verbs.add_parser("formula", help="closed-form counts")
    p.add_argument("name", choices=[
        "catalan", "kirkman-cayley", "fuss", "ell-periodic", "tri-quad", "quiddity-3p",
    ])
    p.add_argument("args", type=int, nargs="*")
    _add_cache_flags(p)
    p.add_argument("--json", action="store_true")

    p = verbs.add_parser("series", help="solve a generating-function equation")
    p.add_argument("equation", choices=[
        "catalan", "kirkman-cayley", "ell-periodic", "tri-quad", "p", "q",
    ])
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--ell", type=int)

    p = verbs.add_parser("surgery", help="surgery moves and canonical forms")
    actions = p.add_subparsers(dest="action", required=True)
    a = actions.add_parser("moves")
    a.add_argument("dissection")
    a.add_argument("--require-3p", action="store_true")
    a = actions.add_parser("apply")
    a.add_argument("dissection")
    a.add_argument("--remove", required=True, help="the two chords to remove, e.g. 1-3,5-7")
    a = actions.add_parser("canon")
    a.add_argument("dissection")
    a = actions.add_parser("class")
    a.add_argument("dissection")
    a.add_argument("--require-3p", action="store_true")

    p = verbs.add_parser("cf", help="continued fractions and strips")
    actions = p.add_subparsers(dest="action", required=True)
    a = actions.add_parser("eval")
    group = a.add_mutually_exclusive_group(required=True)
    group.add_argument("--regular", help="plus-sign terms, e.g. 1,2,1,1")
    group.add_argument("--hj", help="minus-sign terms, e.g. 2,2,3")
    a.add_argument("--json", action="store_true")
    a = actions.add_parser("convert")
    a.add_argument("terms", help="plus-sign terms, e.g. 1,2,1,1")
    a = actions.add_parser("strip")
    a.add_argument("terms", help="plus-sign terms, e.g. 1,2,1,1")

    p = verbs.add_parser("modular", help="elementary matrix products")
    actions = p.add_subparsers(dest="action", required=True)
    a = actions.add_parser("product")
    a.add_argument("coefficients", help="e.g. 3,1,2,2,1")
    a = actions.add_parser("classify")
    a.add_argument("coefficients")
    a = actions.add_parser("verify")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--entry-bound", type=int)

    p = verbs.add_parser("table", help="known quiddity counts as CSV")
    p.add_argument("--max-n", type=int, default=14)
    _add_cache_flags(p)

    p = verbs.add_parser("verify-all", help="run the oracle-equivalence suite")
    p.add_argument("--scope", choices=["fast", "full"], default="fast")

    return parser


def _cached_value(args: argparse.Namespace, family: str, command: str,
                  compute, n: str = "", m: str = "", filt: str = "",
                  order: str = "") -> str:
    if getattr(args, "no_cache", False):
        return compute()
    cache = ResultCache(resolve_cache_dir(getattr(args, "cache_dir", None)))
    hit = cache.get(family, command, n, m, filt, order)
    if hit is not None:
        return hit
    value = compute()
    cache.put(family, command, value, n, m, filt, order)
    return value


def _run_formula(args: argparse.Namespace, out) -> int:
    arity = {
        "catalan": 1, "kirkman-cayley": 2, "fuss": 2,
        "ell-periodic": 3, "tri-quad": 2, "quiddity-3p": 2,
    }[args.name]
    if len(args.args) != arity:
        raise DomainError(f"formula {args.name} takes {arity} integer argument(s)")

    def compute() -> str:
        fn = {
            "catalan": lambda a: formulas.catalan(a[0]),
            "kirkman-cayley": lambda a: formulas.kirkman_cayley(a[0], a[1]),
            "fuss": lambda a: formulas.fuss(a[0], a[1]),
            "ell-periodic": lambda a: formulas.ell_periodic_count(a[0], a[1], a[2]),
            "tri-quad": lambda a: formulas.tri_quad_count(a[0], a[1]),
            "quiddity-3p": lambda a: formulas.quiddity_count_3periodic(a[0], a[1]),
        }[args.name]
        return str(fn(args.args))

    value = _cached_value(
        args, "formula", f"formula-{args.name}", compute,
        n=str(args.args[0]) if args.args else "",
        m=str(args.args[1]) if len(args.args) > 1 else "",
        filt=str(args.args[2]) if len(args.args) > 2 else "",
    )
    print(_dumps({"value": value}) if args.json else value, file=out)
    return 0


def _run_table(args: argparse.Namespace, out) -> int:
    def compute() -> str:
        lines = ["n,m,value"]
        entries = sorted(
            (n, m) for offset in (0, 3, 6, 9, 12)
            for n in range(args.max_n + 1)
            for m in (n - offset,)
            if m >= 1 or (n == 0 and m == 0)
        )
        for n, m in entries:
            lines.append(f"{n},{m},{formulas.quiddity_count_3periodic(n, m)}")
        return "\n".join(lines)

    if args.no_cache:
        print(compute(), file=out)
        return 0
    cache = ResultCache(resolve_cache_dir(args.cache_dir))
    payload = cache.get_payload(
        "table", "table", f"table-{args.max_n}.csv", compute, n=str(args.max_n))
    print(payload, file=out)
    return 0


def _run_surgery(args: argparse.Namespace, out) -> int:
    d = parse_dissection(args.dissection)
    if args.action == "moves":
        for mv in find_surgeries(d, args.require_3p):
            print(_dumps({
                "cell": mv.cell_index,
                "remove": [f"{a}-{b}" for a, b in mv.removed],
                "add": [f"{a}-{b}" for a, b in mv.added],
            }), file=out)
        return 0
    if args.action == "apply":
        removed = []
        for token in args.remove.split(","):
            parts = token.split("-")
            if len(parts) != 2:
                raise DomainError(f"bad chord token {token!r}")
            i, j = sorted((int(parts[0]), int(parts[1])))
            removed.append((i, j))
        if len(removed) != 2:
            raise DomainError("surgery removes exactly two chords")
        matches = [mv for mv in find_surgeries(d, False)
                   if set(mv.removed) == set(removed)]
        if not matches:
            raise DomainError(f"no legal surgery removes {args.remove}")
        print(apply_surgery(d, matches[0]), file=out)
        return 0
    if args.action == "canon":
        print(canonicalize_maximally_open(BasedDissection(d)), file=out)
        return 0
    print(_dumps(class_export(d, args.require_3p)), file=out)
    return 0


def _run_cf(args: argparse.Namespace, out) -> int:
    if args.action == "eval":
        if args.regular:
            value = eval_regular(RegularContinuedFraction(
                tuple(_parse_int_list(args.regular, "term list"))))
        else:
            value = eval_hj(HirzebruchJungContinuedFraction(
                tuple(_parse_int_list(args.hj, "term list"))))
        _print_fraction(value, args.json, out)
        return 0
    cf = RegularContinuedFraction(tuple(_parse_int_list(args.terms, "term list")))
    if args.action == "convert":
        print(",".join(str(t) for t in regular_to_hj(cf).terms), file=out)
        return 0
    d, tops = strip_triangulation(cf)
    q = quiddity(d)
    print(_dumps({
        "dissection": str(d),
        "top_vertices": list(tops),
        "top_quiddity": [q.entries[v] for v in tops],
    }), file=out)
    return 0


def _run_modular(args: argparse.Namespace, out) -> int:
    if args.action in ("product", "classify"):
        cs = _parse_int_list(args.coefficients, "coefficient list")
        if args.action == "product":
            print(_dumps({"matrix": elementary_product(cs).entries()}), file=out)
        else:
            report = classify_monodromy(cs)
            print(_dumps({
                "classification": report.classification,
                "matrix": report.matrix.entries(),
            }), file=out)
        return 0
    report = verify_monodromy_correspondence(args.n, args.entry_bound)
    print(_dumps(report), file=out)
    return 0


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.verb == "of":
            q = quiddity(parse_dissection(args.dissection))
            print(_dumps({"quiddity": list(q.entries)}) if args.json else str(q), file=out)
            return 0

        if args.verb == "enumerate":
            stream = enumerate_dissections(args.n, args.m, _parse_filter(args))
            results = []
            for count, d in enumerate(stream):
                if args.max_results is not None and count >= args.max_results:
                    break
                if args.json:
                    results.append(str(d))
                else:
                    print(d, file=out)
            if args.json:
                print(_dumps(results), file=out)
            return 0

        if args.verb in ("count", "quiddities"):
            filt = _parse_filter(args)
            if args.verb == "count":
                compute = lambda: str(count_dissections(args.n, args.m, filt))
            else:
                compute = lambda: str(count_quiddities(args.n, args.m, filt))
            value = _cached_value(
                args, args.verb, args.verb, compute,
                n=str(args.n), m=str(args.m), filt=filt.describe())
            print(_dumps({"value": value}) if args.json else value, file=out)
            return 0

        if args.verb == "classes":
            table = quiddity_classes(args.n, args.m, _parse_filter(args),
                                     max_dissections=args.max_results)
            payload = {
                str(q): sorted(str(d) for d in ds)
                for q, ds in table.classes.items()
            }
            print(_dumps(payload), file=out)
            return 0

        if args.verb == "formula":
            return _run_formula(args, out)

        if args.verb == "series":
            sol = series.solve_named(args.equation, args.order, args.ell)
            print(_dumps(series.series_terms_json(sol)), file=out)
            return 0

        if args.verb == "surgery":
            return _run_surgery(args, out)

        if args.verb == "cf":
            return _run_cf(args, out)

        if args.verb == "modular":
            return _run_modular(args, out)

        if args.verb == "table":
            return _run_table(args, out)

        if args.verb == "verify-all":
            results = run_all(args.scope)
            for result in results:
                print(result.line(), file=out)
            return 0 if all(r.passed for r in results) else 1

    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled verb {args.verb!r}")


def entry() -> None:
    sys.exit(main())
