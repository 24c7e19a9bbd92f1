"""``pdgp compute``: evaluate one invariant on one graph."""

from __future__ import annotations

import argparse
import logging

from apps.pdgp.commands.common import emit, emit_json, graph_options, load_graph
from apps.pdgp.core.errors import BadParameter
from apps.pdgp.models.schemas import RunConfig, poly_to_schema
from apps.pdgp.services import invariants
from apps.pdgp.services.graphs import SimpleGraph
from apps.pdgp.services.polynomial import Poly
from apps.pdgp.services.recurrence import pdgp_recursive_with_stats

logger: logging.Logger = logging.getLogger(__name__)

CHOICES: tuple[str, ...] = tuple(i.value for i in invariants.Invariant) + ("kpart", "recursive")


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("compute", parents=[parent], help="compute a graph invariant")
    graph_options(parser)
    parser.add_argument("--invariant", choices=CHOICES, default="pdgp")
    parser.add_argument("--k", type=int, default=2, help="block count for --invariant kpart")
    parser.add_argument("--unordered", action="store_true", help="kpart over unordered partitions")
    parser.set_defaults(handler=run)


def evaluate(name: str, graph: SimpleGraph, threads: int, *, k: int = 2, unordered: bool = False) -> Poly:
    if name == "kpart":
        return invariants.pdgp_k(graph, k, ordered=not unordered)
    if name == "recursive":
        result, stats = pdgp_recursive_with_stats(graph, threads)
        logger.info("recursion trace: %s", stats.summary())
        return result
    if name == invariants.Invariant.RANK.value:
        return invariants.rank_invariant(graph)
    if name == invariants.Invariant.SKEW_REFINED_CORANK.value:
        return invariants.skew_char_refined(graph, threads, corank=True)
    enumerated = {
        invariants.Invariant.PDGP.value: invariants.pdgp,
        invariants.Invariant.REFINED.value: invariants.pdgp_refined,
        invariants.Invariant.SKEW.value: invariants.skew_char,
        invariants.Invariant.SKEW_REFINED.value: invariants.skew_char_refined,
    }
    if name in enumerated:
        return enumerated[name](graph, threads)
    raise BadParameter(f"unknown invariant {name!r}")


def run(args: argparse.Namespace, config: RunConfig) -> int:
    graph = load_graph(config)
    poly = evaluate(config.invariant, graph, config.threads, k=args.k, unordered=args.unordered)
    if config.output == "json":
        emit_json(poly_to_schema(poly))
    else:
        emit([str(poly)])
    return 0
