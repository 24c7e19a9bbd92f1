"""``pdgp chord``: both sides of the rank formula for one chord diagram."""

from __future__ import annotations

import argparse
import logging

from apps.pdgp.commands.common import emit, emit_json
from apps.pdgp.core.errors import VerificationMismatch
from apps.pdgp.models.schemas import ChordResult, RunConfig, poly_to_schema
from apps.pdgp.services.chords import intersection_graph, parse_word, pdgp_via_ribbon
from apps.pdgp.services.invariants import pdgp

logger: logging.Logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("chord", parents=[parent], help="partial-dual genus polynomial of a chord diagram")
    parser.add_argument("--word", required=True, help='double-occurrence word, e.g. "ABAB" or "0,1,0,1"')
    parser.add_argument("--via", choices=("rank", "ribbon", "both"), default="both")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    assert config.word is not None
    diagram = parse_word(config.word)
    by_rank = pdgp(intersection_graph(diagram), config.threads) if args.via in ("rank", "both") else None
    by_ribbon = pdgp_via_ribbon(diagram, config.threads) if args.via in ("ribbon", "both") else None
    match = by_rank == by_ribbon if args.via == "both" else None

    if config.output == "json":
        emit_json(
            ChordResult(
                word=diagram.to_text(),
                rank=poly_to_schema(by_rank) if by_rank is not None else None,  # type: ignore[arg-type]
                ribbon=poly_to_schema(by_ribbon) if by_ribbon is not None else None,  # type: ignore[arg-type]
                match=match,
            )
        )
    elif match is None:
        emit([str(by_rank if by_rank is not None else by_ribbon)])
    else:
        lines = []
        if by_rank is not None:
            lines.append(f"rank:   {by_rank}")
        if by_ribbon is not None:
            lines.append(f"ribbon: {by_ribbon}")
        if match is not None:
            lines.append("MATCH" if match else "MISMATCH")
        emit(lines)

    if match is False:
        logger.error("Rank formula and face tracing disagree on %s", diagram.to_text())
        return VerificationMismatch.exit_code
    return 0
