"""
Simple labeled graphs on vertices ``0..n-1`` (``n <= 63``).

A graph is an immutable tuple of bit-packed neighbour rows, so it doubles as
its own GF(2) adjacency matrix.  Vertex subsets are plain int bitmasks.
"""
from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from apps.pdgp.core.config import HARD_VERTEX_CAP, get_settings
from apps.pdgp.core.errors import (
    BadParameter,
    SameVertex,
    SelfLoop,
    SizeCapExceeded,
    VertexOutOfRange,
)
from apps.pdgp.services.gf2 import Gf2Matrix, compress_bits, full_mask, iter_bits

logger: logging.Logger = logging.getLogger(__name__)

# Bitmask over vertex indices; bits >= n of the host graph are clear.
VertexSubset = int


def subset_of(vertices: Iterable[int]) -> VertexSubset:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def check_subset(mask: VertexSubset, n: int) -> None:
    if mask < 0 or mask >> n:
        raise BadParameter(f"subset {mask:#x} has vertices outside 0..{n - 1}")


# ---------------------------------------------------------------------------
# Graph type
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n > HARD_VERTEX_CAP:
            raise SizeCapExceeded("graph vertices", self.n, HARD_VERTEX_CAP)
        if self.n < 0 or len(self.adj) != self.n:
            raise BadParameter(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        # symmetry, zero diagonal, no stray bits
        _ = self.matrix

    @cached_property
    def matrix(self) -> Gf2Matrix:
        return Gf2Matrix(self.n, self.adj)

    @property
    def vertex_mask(self) -> VertexSubset:
        return full_mask(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v, self.n)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------
def _check_vertex_count(n: int, what: str = "vertex count") -> None:
    if n < 0:
        raise BadParameter(f"negative {what} {n}")
    if n > HARD_VERTEX_CAP:
        raise SizeCapExceeded("graph vertices", n, HARD_VERTEX_CAP)


def empty_graph(n: int) -> SimpleGraph:
    _check_vertex_count(n)
    return SimpleGraph(n, (0,) * n)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    """Graph on *n* vertices with exactly the listed adjacencies.

    Raises:
        BadParameter: ``n < 0``.
        SizeCapExceeded: ``n > 63``.
        SelfLoop: an edge ``(u, u)``.
        VertexOutOfRange: an endpoint outside ``0..n-1``.
    """
    _check_vertex_count(n)
    rows = [0] * n
    for u, v in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n)
        if u == v:
            raise SelfLoop(u)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return SimpleGraph(n, tuple(rows))


def complete_graph(n: int) -> SimpleGraph:
    _check_vertex_count(n)
    mask = full_mask(n)
    return SimpleGraph(n, tuple(mask ^ (1 << v) for v in range(n)))


def complete_bipartite(m: int, n: int) -> SimpleGraph:
    """``K_{m,n}`` with sides ``0..m-1`` and ``m..m+n-1``."""
    _check_vertex_count(m, "side size")
    _check_vertex_count(n, "side size")
    _check_vertex_count(m + n)
    left = full_mask(m)
    right = full_mask(m + n) ^ left
    return SimpleGraph(m + n, tuple([right] * m + [left] * n))


def path(n: int) -> SimpleGraph:
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> SimpleGraph:
    if n < 3:
        raise BadParameter(f"cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))


def random_graph(n: int, p: float, seed: int) -> SimpleGraph:
    """Erdos-Renyi graph from numpy's PCG64 stream seeded with *seed*.

    One uniform draw per pair ``(i, j)``, ``i < j``, in lexicographic order.
    """
    if not 0.0 <= p <= 1.0:
        raise BadParameter(f"edge probability {p} outside [0, 1]")
    if seed < 0:
        raise BadParameter(f"negative seed {seed}")
    _check_vertex_count(n)
    rng = np.random.default_rng(seed)
    pairs = list(itertools.combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return from_edge_list(n, (pair for pair, x in zip(pairs, draws) if x < p))


def enumerate_labeled_graphs(n: int, cap: int | None = None) -> Iterator[SimpleGraph]:
    """Every labeled simple graph on *n* vertices, once each.

    Graph number ``k`` contains pair ``i`` (lexicographic order) iff bit ``i``
    of ``k`` is set.
    """
    limit = get_settings().PDGP_GRAPH_ENUM_CAP if cap is None else cap
    if n > limit:
        raise SizeCapExceeded("labeled graph enumeration", n, limit)
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i in iter_bits(code):
            u, v = pairs[i]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        yield SimpleGraph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------
def induced(graph: SimpleGraph, subset: VertexSubset) -> SimpleGraph:
    """Subgraph on *subset*, relabeled by increasing original index."""
    check_subset(subset, graph.n)
    rows = tuple(compress_bits(graph.adj[v] & subset, subset) for v in iter_bits(subset))
    return SimpleGraph(len(rows), rows)


def remove_vertices(graph: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    return induced(graph, graph.vertex_mask & ~subset_of(vertices))


def toggle_edge(graph: SimpleGraph, a: int, b: int) -> SimpleGraph:
    """``I'_ab``: flip the adjacency of ``{a, b}``."""
    graph._check_vertex(a)
    graph._check_vertex(b)
    if a == b:
        raise SameVertex(a)
    rows = list(graph.adj)
    rows[a] ^= 1 << b
    rows[b] ^= 1 << a
    return SimpleGraph(graph.n, tuple(rows))


def neighbor_toggle(graph: SimpleGraph, a: int, b: int) -> SimpleGraph:
    """``~I_ab``: flip the adjacency of ``a`` with every neighbour of ``b`` other than ``a``.

    The ``a``-``b`` adjacency itself is untouched, and in general
    ``neighbor_toggle(G, a, b) != neighbor_toggle(G, b, a)``.
    """
    graph._check_vertex(a)
    graph._check_vertex(b)
    if a == b:
        raise SameVertex(a)
    flip = graph.adj[b] & ~(1 << a)
    rows = list(graph.adj)
    rows[a] ^= flip
    for c in iter_bits(flip):
        rows[c] ^= 1 << a
    return SimpleGraph(graph.n, tuple(rows))


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Block-diagonal union; *h*'s vertices are shifted by ``g.n``."""
    if g.n + h.n > HARD_VERTEX_CAP:
        raise SizeCapExceeded("disjoint union vertices", g.n + h.n, HARD_VERTEX_CAP)
    return SimpleGraph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def connected_components(graph: SimpleGraph) -> list[VertexSubset]:
    """Vertex masks of the components, ordered by smallest vertex."""
    remaining = graph.vertex_mask
    components: list[VertexSubset] = []
    while remaining:
        frontier = remaining & -remaining
        seen = frontier
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= graph.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        components.append(seen)
        remaining &= ~seen
    return components
