"""``pdgp project``: a multiplicative invariant evaluated on the primitive projection."""

from __future__ import annotations

import argparse

from apps.pdgp.commands.common import emit, emit_json, graph_options, load_graph
from apps.pdgp.models.schemas import ProjectResult, RunConfig, poly_to_schema
from apps.pdgp.services.bialgebra import MULTIPLICATIVE, eval_on_projection
from apps.pdgp.services.invariants import Invariant


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("project", parents=[parent], help="evaluate an invariant on π(G)")
    graph_options(parser)
    parser.add_argument(
        "--invariant",
        choices=sorted(i.value for i in MULTIPLICATIVE) + ["kpart"],
        default=Invariant.PDGP.value,
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    graph = load_graph(config)
    poly = eval_on_projection(config.invariant, graph)
    constant = poly.is_constant()

    if config.output == "json":
        emit_json(ProjectResult(invariant=config.invariant, n=graph.n, polynomial=poly_to_schema(poly), constant=constant))
        return 0

    lines = [str(poly)]
    # Q of π(G) is reported, never asserted constant.
    if config.invariant == Invariant.SKEW.value:
        lines.append(f"note: {'constant' if constant else 'non-constant'}")
    emit(lines)
    return 0
