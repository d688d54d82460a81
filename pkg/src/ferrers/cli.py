"""
Command-line front end.

    ferrers trees --partition 4,4,2
    ferrers chromatic --word ba --eval 3 --format json
    ferrers oracle acyclic-sink --partition 2,2 --sink v1
    ferrers selftest

Exit codes: 0 success, 1 selftest failure, 2 bad arguments, 3 domain error,
4 resource guard exceeded. In JSON output every integer that can grow
without bound is a decimal string.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, TextIO

from . import chromatic, csf, oracle, trees
from .algebra.forms import assignment_from_lists, parse_rational
from .algebra.symfun import specialize_m, specialize_p
from .core import FerrersGraph, parse_partition, parse_word
from .errors import DomainError, ParseError, ResourceLimitError
from .limits import default_guard

__all__ = ["run", "main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so run() owns the exit code and output streams
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _rationals(text: str) -> list[Fraction]:
    if not text.strip():
        return []
    return [parse_rational(tok) for tok in text.split(",")]


def _graph(args) -> FerrersGraph:
    if args.partition is not None:
        return FerrersGraph(parse_partition(args.partition))
    return FerrersGraph.from_word(parse_word(args.word))


def _shape(g: FerrersGraph) -> dict:
    return {"partition": list(g.partition.parts), "word": str(g.word)}


def _num(value) -> str:
    return str(value)


# each handler returns (json payload, text lines)

def _cmd_info(args):
    g = _graph(args)
    payload = {
        **_shape(g),
        "dual": list(g.dual.parts),
        "u_degrees": list(g.u_degrees()),
        "v_degrees": list(g.v_degrees()),
        "boxes": _num(g.edge_count),
        "rows": _num(g.row_count),
        "columns": _num(g.col_count),
    }
    text = [
        f"partition: {g.partition}",
        f"dual: {g.dual}",
        f"word: {g.word}",
        f"u degrees: {','.join(map(str, g.u_degrees()))}",
        f"v degrees: {','.join(map(str, g.v_degrees()))}",
        f"boxes: {g.edge_count}",
    ]
    return payload, text


def _scalar(fn: Callable[[FerrersGraph], object]):
    def handler(args):
        g = _graph(args)
        value = fn(g)
        return {**_shape(g), "value": _num(value)}, [str(value)]
    return handler


def _cmd_weighted(args):
    g = _graph(args)
    xs, ys = _rationals(args.x), _rationals(args.y)
    if len(xs) != g.row_count or len(ys) != g.col_count:
        raise DomainError(
            f"need {g.row_count} x values and {g.col_count} y values, "
            f"got {len(xs)} and {len(ys)}")
    sigma = trees.weighted_spanning_sum(g)
    value = sigma.evaluate(assignment_from_lists(xs, ys))
    return {**_shape(g), "factored": str(sigma), "value": _num(value)}, [str(value)]


def _cmd_hamiltonian(args):
    g = _graph(args)
    value = trees.hamiltonian_path_count(g)
    return {**_shape(g), "value": _num(value), "rooks": _num(trees.rook_count(g))}, [str(value)]


def _cmd_chromatic(args):
    g = _graph(args)
    chi = chromatic.chromatic_polynomial(g.word, workers=args.workers)
    payload = {**_shape(g), "coefficients": chi.to_json()}
    text = [str(chi)]
    if args.eval is not None:
        value = chi(args.eval)
        payload["value"] = _num(value)
        text = [str(value)]
    return payload, text


def _cmd_excedance(args):
    g = _graph(args)
    value = chromatic.excedance_statistic(g.word)
    return {**_shape(g), "value": _num(value)}, [str(value)]


def _cmd_csf(args):
    g = _graph(args)
    if args.basis == "p":
        expansion = csf.csf_p_basis(g, box_limit=args.box_limit, workers=args.workers)
        special = specialize_p
    else:
        if not g.partition.is_rectangle():
            raise DomainError(
                f"the monomial-basis formula covers complete bipartite graphs only; "
                f"{g.partition} is not a rectangle")
        expansion = csf.csf_complete_bipartite_m_basis(g.row_count, g.col_count)
        special = specialize_m
    payload = {**_shape(g), "basis": args.basis, "terms": expansion.to_json()}
    text = [str(expansion)]
    if args.specialize is not None:
        value = special(expansion, _rationals(args.specialize))
        payload["value"] = _num(value)
        text = [str(value)]
    return payload, text


def _oracle_dispatch(args):
    g = _graph(args)
    guard = default_guard()
    name = args.oracle
    extra: dict = {}
    if name == "spanning-count":
        value = oracle.oracle_spanning_count_matrix_tree(g, guard)
    elif name == "spanning-trees":
        found = oracle.oracle_spanning_trees_enumerate(g, guard)
        value = len(found)
        extra["trees"] = [sorted(list(box) for box in t) for t in found]
    elif name == "weighted-trees":
        xs, ys = _rationals(args.x or ""), _rationals(args.y or "")
        if len(xs) != g.row_count or len(ys) != g.col_count:
            raise DomainError(f"need {g.row_count} x values and {g.col_count} y values")
        value = oracle.oracle_weighted_spanning_sum(g, assignment_from_lists(xs, ys), guard)
    elif name == "hamiltonian":
        value = oracle.oracle_hamiltonian_paths(g, guard)
    elif name == "bijections":
        value = oracle.oracle_permissible_bijections(g, guard)
    elif name == "functions":
        value = oracle.oracle_permissible_functions(g, guard)
    elif name == "rooks":
        value = oracle.oracle_rook_placements(g, guard=guard)
    elif name == "chromatic-value":
        if args.t is None:
            raise DomainError("chromatic-value needs --t")
        value = oracle.oracle_chromatic_value(g, args.t, guard)
    elif name == "chromatic-poly":
        chi = oracle.oracle_chromatic_poly(g, guard)
        return {**_shape(g), "oracle": name, "coefficients": chi.to_json()}, [str(chi)]
    elif name == "excedance":
        value = oracle.oracle_excedance(g.word, guard)
    elif name == "acyclic-sink":
        value = oracle.oracle_acyclic_unique_sink(g, args.sink, guard)
        extra["sink"] = args.sink
    elif name == "coloring-corollary":
        value = oracle.oracle_coloring_corollary(g.partition, args.row, guard)
        extra["row"] = _num(args.row)
    elif name == "csf":
        value = oracle.oracle_csf_specialized(g, _rationals(args.values or ""), guard)
    else:  # pragma: no cover - argparse restricts choices
        raise DomainError(f"unknown oracle {name}")
    return {**_shape(g), "oracle": name, "value": _num(value), **extra}, [str(value)]


ORACLES = [
    "spanning-count", "spanning-trees", "weighted-trees", "hamiltonian",
    "bijections", "functions", "rooks", "chromatic-value", "chromatic-poly",
    "excedance", "acyclic-sink", "coloring-corollary", "csf",
]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    shape = common.add_mutually_exclusive_group(required=True)
    shape.add_argument("--partition", help="comma-separated parts, largest first, e.g. 4,4,2")
    shape.add_argument("--word", help="ab-word, e.g. babba (may be empty: --word '')")
    common.add_argument("--format", choices=("text", "json"), default="text")

    fmt_only = _Parser(add_help=False)
    fmt_only.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="ferrers", description="Enumerative invariants of Ferrers graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("info", parents=[common], help="partition, dual, word and degrees") \
        .set_defaults(handler=_cmd_info)
    sub.add_parser("trees", parents=[common], help="number of spanning trees") \
        .set_defaults(handler=_scalar(trees.spanning_tree_count))
    p = sub.add_parser("weighted-trees", parents=[common], help="spanning-tree weight sum")
    p.add_argument("--x", required=True, help="values of x_0..x_n, comma-separated rationals")
    p.add_argument("--y", required=True, help="values of y_0..y_m")
    p.set_defaults(handler=_cmd_weighted)
    sub.add_parser("vertebrates", parents=[common], help="number of vertebrates") \
        .set_defaults(handler=_scalar(trees.vertebrate_count))
    sub.add_parser("rooks", parents=[common], help="placements of n+1 rooks") \
        .set_defaults(handler=_scalar(trees.rook_count))
    sub.add_parser("hamiltonian", parents=[common], help="Hamiltonian paths (needs n = m)") \
        .set_defaults(handler=_cmd_hamiltonian)
    p = sub.add_parser("chromatic", parents=[common], help="chromatic polynomial")
    p.add_argument("--eval", type=int, metavar="T", help="evaluate at t = T")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(handler=_cmd_chromatic)
    sub.add_parser("excedance", parents=[common], help="excedance set statistic [w]") \
        .set_defaults(handler=_cmd_excedance)
    p = sub.add_parser("csf", parents=[common], help="chromatic symmetric function")
    p.add_argument("--basis", choices=("p", "m"), default="p")
    p.add_argument("--specialize", metavar="V1,V2,...", help="evaluate at x_i = V_i")
    p.add_argument("--box-limit", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(handler=_cmd_csf)
    p = sub.add_parser("oracle", parents=[common], help="brute-force oracles")
    p.add_argument("oracle", choices=ORACLES)
    p.add_argument("--t", type=int, help="number of colors (chromatic-value)")
    p.add_argument("--sink", default="u0", help="sink vertex label (acyclic-sink)")
    p.add_argument("--row", type=int, default=0, help="all-red row (coloring-corollary)")
    p.add_argument("--values", help="variable values (csf)")
    p.add_argument("--x", help="x values (weighted-trees)")
    p.add_argument("--y", help="y values (weighted-trees)")
    p.set_defaults(handler=_oracle_dispatch)
    sub.add_parser("selftest", parents=[fmt_only], help="run the cross-validation suite") \
        .set_defaults(handler=None)
    return parser


def render_json(payload) -> str:
    return json.dumps(payload, sort_keys=True)


def _selftest(args, out: TextIO) -> int:
    from .acceptance import CRITERIA

    results = [criterion() for criterion in CRITERIA]
    if args.format == "json":
        out.write(render_json({
            "command": "selftest",
            "passed": all(r.passed for r in results),
            "criteria": [{"criterion": _num(r.number), "title": r.title, "passed": r.passed,
                          "checks": _num(r.checks), "failures": r.failures[:5]}
                         for r in results]}) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
        passed = sum(r.passed for r in results)
        out.write(f"{passed}/{len(results)} criteria passed\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def run(argv=None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        if args.command == "selftest":
            return _selftest(args, out)
        payload, text = args.handler(args)
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except ResourceLimitError as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    if args.format == "json":
        out.write(render_json({"command": args.command, **payload}) + "\n")
    else:
        out.write("\n".join(text) + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
