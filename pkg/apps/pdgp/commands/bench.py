"""``pdgp bench``: time pdgp at several worker counts and compare the outputs."""

from __future__ import annotations

import argparse
import logging
import time

from apps.pdgp.commands.common import emit, emit_json, graph_options, load_graph
from apps.pdgp.core.errors import ParseError, VerificationMismatch
from apps.pdgp.models.schemas import BenchReport, BenchRun, RunConfig, poly_to_schema
from apps.pdgp.services.enumeration import clear_tally_cache
from apps.pdgp.services.invariants import pdgp

logger: logging.Logger = logging.getLogger(__name__)


def _thread_counts(text: str) -> list[int]:
    try:
        counts = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ParseError(f"bad --threads-list {text!r}") from exc
    if not counts or any(c < 1 for c in counts):
        raise ParseError(f"--threads-list needs positive integers, got {text!r}")
    return counts


def register(subparsers: argparse._SubParsersAction, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("bench", parents=[parent], help="time pdgp across worker counts")
    graph_options(parser)
    parser.add_argument("--threads-list", default="1,2,4,8", help="comma-separated worker counts")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, config: RunConfig) -> int:
    graph = load_graph(config)
    counts = _thread_counts(args.threads_list)

    runs: list[BenchRun] = []
    rendered: list[str] = []
    for threads in counts:
        clear_tally_cache()
        t_start = time.monotonic()
        poly = pdgp(graph, threads)
        elapsed = time.monotonic() - t_start
        logger.info("pdgp n=%d with %d worker(s): %.3fs", graph.n, threads, elapsed)
        runs.append(BenchRun(threads=threads, elapsed_s=round(elapsed, 3)))
        rendered.append(str(poly))

    identical = len(set(rendered)) == 1
    if config.output == "json":
        emit_json(BenchReport(n=graph.n, runs=runs, polynomial=poly_to_schema(poly), identical=identical))  # type: ignore[arg-type]
    else:
        lines = [f"threads={r.threads}: {r.elapsed_s:.3f}s" for r in runs]
        lines.append(f"n={graph.n}: {'identical' if identical else 'DIFFERENT'} output across {len(runs)} run(s)")
        emit(lines)

    if not identical:
        logger.error("pdgp output differs across worker counts")
        return VerificationMismatch.exit_code
    return 0
