"""
Recursive evaluation of ``∂ε`` for graphs with pendant vertices.

If ``a`` has degree one with neighbour ``b``::

    ∂ε_I = ∂ε_{I-a} + 2 z^2 ∂ε_{I-a-b}

Together with ``∂ε`` of an isolated vertex being ``2`` and multiplicativity
over connected components, this reduces a graph to its leafless cores; only
those are enumerated directly.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from apps.pdgp.services.enumeration import check_enum_cap
from apps.pdgp.services.graphs import (
    SimpleGraph,
    connected_components,
    induced,
    remove_vertices,
)
from apps.pdgp.services.invariants import pdgp
from apps.pdgp.services.polynomial import UniPoly

logger: logging.Logger = logging.getLogger(__name__)

_TWO_Z2 = UniPoly.monomial(2, 2)


@dataclass
class RecursionStats:
    isolated_stripped: int = 0
    leaf_steps: int = 0
    component_splits: int = 0
    fallback_enumerations: int = 0
    fallback_sizes: list[int] = field(default_factory=list)
    cache_hits: int = 0

    def summary(self) -> str:
        return (
            f"isolated={self.isolated_stripped} leaf_steps={self.leaf_steps} "
            f"splits={self.component_splits} fallbacks={self.fallback_enumerations} "
            f"core_sizes={self.fallback_sizes} cache_hits={self.cache_hits}"
        )


class _Evaluator:
    def __init__(self, threads: int | None) -> None:
        self.threads = threads
        self.stats = RecursionStats()
        self._memo: dict[tuple[int, ...], UniPoly] = {}

    def solve(self, graph: SimpleGraph) -> UniPoly:
        if graph.n == 0:
            return UniPoly.constant(1)
        cached = self._memo.get(graph.adj)
        if cached is not None:
            self.stats.cache_hits += 1
            return cached
        result = self._solve_uncached(graph)
        self._memo[graph.adj] = result
        return result

    def _solve_uncached(self, graph: SimpleGraph) -> UniPoly:
        isolated = [v for v in range(graph.n) if graph.adj[v] == 0]
        if isolated:
            self.stats.isolated_stripped += len(isolated)
            rest = self.solve(remove_vertices(graph, isolated))
            return rest.scale(2 ** len(isolated))

        components = connected_components(graph)
        if len(components) > 1:
            self.stats.component_splits += 1
            result = UniPoly.constant(1)
            for comp in components:
                result = result * self.solve(induced(graph, comp))
            return result

        leaf = next((v for v in range(graph.n) if graph.degree(v) == 1), None)
        if leaf is not None:
            self.stats.leaf_steps += 1
            (partner,) = graph.neighbors(leaf)
            without_leaf = self.solve(remove_vertices(graph, [leaf]))
            without_pair = self.solve(remove_vertices(graph, [leaf, partner]))
            return without_leaf + _TWO_Z2 * without_pair

        check_enum_cap(graph.n, "recursive fallback enumeration")
        self.stats.fallback_enumerations += 1
        self.stats.fallback_sizes.append(graph.n)
        logger.debug("Falling back to enumeration on a %d-vertex core", graph.n)
        return pdgp(graph, self.threads)


def pdgp_recursive_with_stats(
    graph: SimpleGraph, threads: int | None = None
) -> tuple[UniPoly, RecursionStats]:
    evaluator = _Evaluator(threads)
    result = evaluator.solve(graph)
    logger.info("pdgp_recursive: %s", evaluator.stats.summary())
    return result, evaluator.stats


def pdgp_recursive(graph: SimpleGraph, threads: int | None = None) -> UniPoly:
    """``∂ε`` via isolated-vertex stripping, component splitting and the
    degree-one recurrence; leafless connected cores are enumerated.

    Raises:
        SizeCapExceeded: a core larger than ``PDGP_ENUM_CAP``.
    """
    return pdgp_recursive_with_stats(graph, threads)[0]
