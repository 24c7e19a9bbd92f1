"""Shared CLI plumbing: common options, graph inputs, generator specs, output."""

from __future__ import annotations

import argparse
import logging

from pydantic import BaseModel

from apps.pdgp.core.errors import BadParameter, ParseError
from apps.pdgp.models.schemas import RunConfig
from apps.pdgp.services import graphs
from apps.pdgp.services.graph_io import parse_edge_spec, read_graph_file
from apps.pdgp.services.graphs import SimpleGraph

logger: logging.Logger = logging.getLogger(__name__)


def common_options() -> argparse.ArgumentParser:
    """Parent parser carrying the options every sub-command accepts."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--threads", type=int, default=None, help="worker processes (default: PDGP_THREADS or CPU count)")
    parent.add_argument("--cap", type=int, default=None, help="override every size cap for this run")
    parent.add_argument("--json", action="store_true", help="JSON output")
    parent.add_argument("--seed", type=int, default=0, help="seed for random generators")
    parent.add_argument("-v", "--verbose", action="count", default=0)
    return parent


def graph_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", dest="graph_file", default=None, help="graph text file")
    parser.add_argument("--edges", default=None, help='inline edges "u-v,u-v,..."')
    parser.add_argument("--n", type=int, default=None, help="vertex count for --edges")
    parser.add_argument("--gen", default=None, help="kn:N | kmn:M,N | path:N | cycle:N | empty:N | random:N,P,SEED")


# ---------------------------------------------------------------------------
# Graph inputs
# ---------------------------------------------------------------------------
def _ints(text: str, count: int, spec: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise ParseError(f"generator {spec!r}: expected {count} integer argument(s)")
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise ParseError(f"generator {spec!r}: bad integer") from exc


def parse_generator(spec: str) -> SimpleGraph:
    """Build a graph from ``kind:args``."""
    kind, sep, args = spec.partition(":")
    if not sep:
        raise ParseError(f"generator {spec!r}: expected 'kind:args'")
    kind = kind.strip().lower()
    if kind == "kn":
        (n,) = _ints(args, 1, spec)
        return graphs.complete_graph(n)
    if kind == "kmn":
        m, n = _ints(args, 2, spec)
        return graphs.complete_bipartite(m, n)
    if kind == "path":
        (n,) = _ints(args, 1, spec)
        return graphs.path(n)
    if kind == "cycle":
        (n,) = _ints(args, 1, spec)
        return graphs.cycle(n)
    if kind == "empty":
        (n,) = _ints(args, 1, spec)
        return graphs.empty_graph(n)
    if kind == "random":
        parts = [p.strip() for p in args.split(",")]
        if len(parts) != 3:
            raise ParseError(f"generator {spec!r}: expected random:N,P,SEED")
        try:
            n, p, seed = int(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ParseError(f"generator {spec!r}: bad argument") from exc
        return graphs.random_graph(n, p, seed)
    raise ParseError(f"unknown generator kind {kind!r}")


def load_graph(config: RunConfig) -> SimpleGraph:
    if config.graph_file is not None:
        return read_graph_file(config.graph_file)
    if config.edges is not None:
        assert config.n is not None
        return parse_edge_spec(config.n, config.edges)
    if config.gen is not None:
        return parse_generator(config.gen)
    raise BadParameter("no graph input given")


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------
def emit(lines: list[str]) -> None:
    """Print fully rendered output in one go."""
    print("\n".join(lines))


def emit_json(model: BaseModel) -> None:
    print(model.model_dump_json())
