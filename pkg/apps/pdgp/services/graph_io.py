"""Graph text format and inline edge syntax.

Text format: first non-comment line is ``n``; each further non-empty line is
``u v`` (0-indexed).  Lines starting with ``#`` are ignored.
"""
from __future__ import annotations

import logging
import re
from pathlib import Path

from apps.pdgp.core.errors import EmptyInput, ParseError
from apps.pdgp.services.graphs import SimpleGraph, from_edge_list

logger: logging.Logger = logging.getLogger(__name__)

_EDGE_TOKEN = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def _parse_int(token: str, what: str) -> int:
    try:
        value = int(token)
    except ValueError as exc:
        raise ParseError(f"bad {what}: {token!r}") from exc
    if value < 0:
        raise ParseError(f"negative {what}: {token!r}")
    return value


def read_graph_text(text: str) -> SimpleGraph:
    """Parse the graph text format."""
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise EmptyInput("graph text")
    n = _parse_int(lines[0], "vertex count")
    edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((_parse_int(parts[0], "vertex"), _parse_int(parts[1], "vertex")))
    return from_edge_list(n, edges)


def write_graph_text(graph: SimpleGraph) -> str:
    lines = [str(graph.n)] + [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def read_graph_file(path: str | Path) -> SimpleGraph:
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read graph file {path}: {exc}") from exc
    logger.info("Read graph file %s", path)
    return read_graph_text(text)


def parse_edge_spec(n: int, spec: str) -> SimpleGraph:
    """Inline syntax ``"0-1,1-2"``; an empty string means no edges."""
    edges: list[tuple[int, int]] = []
    for token in filter(None, (t.strip() for t in spec.split(","))):
        match = _EDGE_TOKEN.match(token)
        if match is None:
            raise ParseError(f"bad edge token {token!r}, expected 'u-v'")
        edges.append((int(match.group(1)), int(match.group(2))))
    return from_edge_list(n, edges)
