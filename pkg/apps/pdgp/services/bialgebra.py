"""
Set partitions and the graph bialgebra's primitive projection.

Multiplication of graphs is disjoint union and ``Δ(I) = Σ_A I_A ⊗ I_{A^c}``.
The projection onto primitives is::

    π(I) = Σ_{partitions {A_1..A_k} of V(I)} (-1)^{k-1} (k-1)! I_{A_1} ... I_{A_k}

For an invariant ``f`` that is multiplicative over disjoint union,
``f(π(I))`` is evaluated block by block without forming graph
combinations.
"""
from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass

from apps.pdgp.core.config import get_settings
from apps.pdgp.core.errors import (
    BadParameter,
    NonMultiplicativeInvariant,
    SizeCapExceeded,
)
from apps.pdgp.services.enumeration import check_enum_cap
from apps.pdgp.services.gf2 import iter_bits
from apps.pdgp.services.graphs import SimpleGraph, VertexSubset, induced
from apps.pdgp.services.invariants import INVARIANTS, Invariant, rank_invariant
from apps.pdgp.services.polynomial import Poly, UniPoly, one_like, zero_like

logger: logging.Logger = logging.getLogger(__name__)

# every registered invariant is multiplicative over disjoint union
MULTIPLICATIVE: frozenset[Invariant] = frozenset(INVARIANTS)
_NON_MULTIPLICATIVE_NAMES: frozenset[str] = frozenset({"kpart"})


@dataclass(frozen=True)
class SetPartition:
    """Blocks as vertex masks, sorted by smallest element."""

    blocks: tuple[VertexSubset, ...]

    def __post_init__(self) -> None:
        seen = 0
        for block in self.blocks:
            if block <= 0:
                raise BadParameter("set partition has an empty block")
            if seen & block:
                raise BadParameter("set partition blocks overlap")
            seen |= block
        lows = [b & -b for b in self.blocks]
        if lows != sorted(lows):
            raise BadParameter("set partition blocks not in canonical order")

    @property
    def ground(self) -> VertexSubset:
        mask = 0
        for block in self.blocks:
            mask |= block
        return mask

    def __len__(self) -> int:
        return len(self.blocks)

    def as_lists(self) -> list[list[int]]:
        return [list(iter_bits(b)) for b in self.blocks]


def set_partitions(subset: VertexSubset) -> Iterator[SetPartition]:
    """Every partition of the elements of *subset*, in restricted-growth order.

    Raises:
        SizeCapExceeded: more elements than ``PDGP_PARTITION_CAP``.
    """
    elements = list(iter_bits(subset))
    cap = get_settings().PDGP_PARTITION_CAP
    if len(elements) > cap:
        raise SizeCapExceeded("set partition enumeration", len(elements), cap)

    blocks: list[int] = []

    def _place(i: int) -> Iterator[SetPartition]:
        if i == len(elements):
            yield SetPartition(tuple(blocks))
            return
        bit = 1 << elements[i]
        for j in range(len(blocks)):
            blocks[j] |= bit
            yield from _place(i + 1)
            blocks[j] ^= bit
        blocks.append(bit)
        yield from _place(i + 1)
        blocks.pop()

    yield from _place(0)


def _multiplicative(selector: Invariant | str) -> Invariant:
    if isinstance(selector, str) and selector in _NON_MULTIPLICATIVE_NAMES:
        raise NonMultiplicativeInvariant(selector)
    try:
        invariant = Invariant(selector)
    except ValueError as exc:
        raise BadParameter(f"unknown invariant {selector!r}") from exc
    if invariant not in MULTIPLICATIVE:
        raise NonMultiplicativeInvariant(invariant.value)
    return invariant


def eval_on_projection(selector: Invariant | str, graph: SimpleGraph) -> Poly:
    """``f(π(G))`` for a multiplicative invariant ``f``.

    The empty graph is the bialgebra unit, whose projection is ``0``.

    Raises:
        SizeCapExceeded: ``n`` above ``PDGP_PROJECTION_CAP``.
        NonMultiplicativeInvariant: ``f`` does not factor over disjoint union.
    """
    invariant = _multiplicative(selector)
    f = INVARIANTS[invariant]
    cap = get_settings().PDGP_PROJECTION_CAP
    if graph.n > cap:
        raise SizeCapExceeded("projection evaluation", graph.n, cap)

    unit = f(graph)
    if graph.n == 0:
        return zero_like(unit)

    values: dict[VertexSubset, Poly] = {}

    def _value(block: VertexSubset) -> Poly:
        cached = values.get(block)
        if cached is None:
            cached = f(induced(graph, block))
            values[block] = cached
        return cached

    total = zero_like(unit)
    partitions = 0
    for partition in set_partitions(graph.vertex_mask):
        k = len(partition)
        weight = (-1) ** (k - 1) * math.factorial(k - 1)
        term = one_like(unit)
        for block in partition.blocks:
            term = term * _value(block)  # type: ignore[operator]
        total = total + term.scale(weight)  # type: ignore[operator]
        partitions += 1
    logger.debug("Projection of %s summed over %d partitions", invariant.value, partitions)
    return total


def coproduct_table(graph: SimpleGraph) -> list[tuple[VertexSubset, VertexSubset]]:
    """All ``(A, A^c)`` pairs of ``Δ(G)``, ``A`` in increasing mask order."""
    check_enum_cap(graph.n, "coproduct table")
    full = graph.vertex_mask
    return [(a, full ^ a) for a in range(1 << graph.n)]


def pdgp_via_coproduct(graph: SimpleGraph) -> UniPoly:
    """Σ over ``Δ(G)`` of ``r(G_A) · r(G_{A^c})``; equals ``pdgp(G)``."""
    total = UniPoly()
    for a, ac in coproduct_table(graph):
        total = total + rank_invariant(induced(graph, a)) * rank_invariant(induced(graph, ac))
    return total
