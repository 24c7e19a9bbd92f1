"""
Polynomial invariants of simple graphs built from principal GF(2) ranks.

For a graph ``I`` with adjacency matrix ``M`` and ``A ⊆ V(I)``:

* ``pdgp``               Σ_A z^{rank(M_A) + rank(M_{A^c})}
* ``pdgp_refined``       Σ_A w^{|V| - |A|} z^{rank(M_A) + rank(M_{A^c})}
* ``skew_char``          Σ_{A : rank(M_A) = |A|} w^{|V| - |A|}   (nondegenerate A)
* ``skew_char_refined``  Σ_A w^{|V| - |A|} z^{rank(M_A)}   (or z^{corank(M_A)})
* ``rank_invariant``     z^{rank(M)}
* ``pdgp_k``             Σ over ordered k-tuples of disjoint nonempty blocks
                         covering V of z^{Σ rank(M_{A_i})}

All subset sums share one pass of :mod:`apps.pdgp.services.enumeration`.
"""
from __future__ import annotations

import logging
import math
from collections.abc import Callable
from enum import Enum

import numpy as np

from apps.pdgp.core.config import get_settings
from apps.pdgp.core.errors import BadParameter, KOutOfRange, SizeCapExceeded
from apps.pdgp.services.enumeration import popcount, rank_table, tally_subsets
from apps.pdgp.services.gf2 import iter_bits, rank
from apps.pdgp.services.graphs import SimpleGraph, neighbor_toggle, toggle_edge
from apps.pdgp.services.polynomial import BiPoly, Poly, UniPoly

logger: logging.Logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Subset-sum invariants
# ---------------------------------------------------------------------------
def pdgp(graph: SimpleGraph, threads: int | None = None) -> UniPoly:
    """Partial-dual genus polynomial ``∂ε_I(z)``."""
    tally = tally_subsets(graph, threads)
    counts = [sum(col) for col in zip(*tally.genus)]
    return UniPoly.from_counts(counts)


def pdgp_refined(graph: SimpleGraph, threads: int | None = None) -> BiPoly:
    """Refined partial-dual genus polynomial, graded by ``w^{|V| - |A|}``."""
    return BiPoly.from_counts(tally_subsets(graph, threads).genus)


def skew_char(graph: SimpleGraph, threads: int | None = None) -> UniPoly:
    """Skew characteristic polynomial ``Q_I(w)``, summed over nondegenerate ``M_A``.

    Only subsets with ``rank(M_A) = |A|`` count; this is the ``z^0`` slice of
    ``skew_char_refined(corank=True)``.
    """
    tally = tally_subsets(graph, threads)
    n = tally.n
    return UniPoly.from_counts((row[n - w] for w, row in enumerate(tally.skew)), var="w")


def skew_char_refined(
    graph: SimpleGraph, threads: int | None = None, *, corank: bool = False
) -> BiPoly:
    """Refined skew characteristic polynomial ``Q̄_I(w, z)``.

    With ``corank=True`` the ``z`` exponent is ``|A| - rank(M_A)`` instead of
    ``rank(M_A)``; both gradings are four-term invariants.
    """
    tally = tally_subsets(graph, threads)
    if not corank:
        return BiPoly.from_counts(tally.skew)
    n = tally.n
    return BiPoly(
        ((w, (n - w) - r), c)
        for w, row in enumerate(tally.skew)
        for r, c in enumerate(row)
        if c
    )


def rank_invariant(graph: SimpleGraph) -> UniPoly:
    """``r_I(z) = z^{rank(M_I)}``."""
    return UniPoly.monomial(rank(graph.matrix))


# ---------------------------------------------------------------------------
# k-part generalization
# ---------------------------------------------------------------------------
def _submasks_without_low(rest: int) -> np.ndarray:
    """All proper submasks of *rest* as a ``uint64`` array (``rest`` itself excluded)."""
    bits = list(iter_bits(rest))
    x = np.arange((1 << len(bits)) - 1, dtype=np.uint64)
    out = np.zeros_like(x)
    for i, b in enumerate(bits):
        out |= ((x >> np.uint64(i)) & np.uint64(1)) << np.uint64(b)
    return out


def _split_once(s: int, prev: np.ndarray, half_ranks: np.ndarray, width: int) -> np.ndarray:
    """Σ over blocks T ∋ low(s), T ≠ s, of shift(prev[s \\ T], rank(T)/2)."""
    low = s & -s
    rest = s ^ low
    acc = np.zeros(width, dtype=np.int64)
    if not rest:
        return acc
    u = _submasks_without_low(rest)
    blocks = (u | np.uint64(low)).astype(np.int64)
    remainders = (u ^ np.uint64(rest)).astype(np.int64)
    shifts = half_ranks[blocks]
    contrib = prev[remainders]
    for shift in np.unique(shifts):
        summed = contrib[shifts == shift].sum(axis=0)
        acc[shift:] += summed[: width - shift]
    return acc


def pdgp_k(graph: SimpleGraph, k: int, *, ordered: bool = True) -> UniPoly:
    """``∂ε^{(k)}``: sum over k-tuples of disjoint nonempty blocks covering ``V``.

    Tuples are ordered by default, so ``pdgp_k(G, 2) = pdgp(G) - 2 z^{rank(M)}``;
    ``ordered=False`` counts each set partition once (ordered result / k!).

    Raises:
        KOutOfRange: ``k == 0`` or ``k > n``.
        SizeCapExceeded: ``n`` above ``PDGP_KPART_CAP``.
    """
    n = graph.n
    if not 1 <= k <= n:
        raise KOutOfRange(k, n)
    cap = get_settings().PDGP_KPART_CAP
    if n > cap:
        raise SizeCapExceeded("k-part enumeration", n, cap)

    factor = math.factorial(k) if ordered else 1
    full = graph.vertex_mask
    if k == 1:
        return rank_invariant(graph).scale(factor)

    half_ranks = (rank_table(graph) // 2).astype(np.int64)
    width = n // 2 + 1
    total = 1 << n
    sizes = popcount(np.arange(total, dtype=np.uint64))

    # layer[s] = unordered partitions of s into j blocks, by total half-rank
    layer = np.zeros((total, width), dtype=np.int64)
    nonempty = np.arange(1, total)
    layer[nonempty, half_ranks[nonempty]] = 1
    for j in range(2, k):
        nxt = np.zeros_like(layer)
        for s in range(1, total):
            if sizes[s] >= j:
                nxt[s] = _split_once(s, layer, half_ranks, width)
        layer = nxt
        logger.debug("pdgp_k layer %d of %d done", j, k)

    final = _split_once(full, layer, half_ranks, width)
    return UniPoly({2 * d: int(c) * factor for d, c in enumerate(final) if c})


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------
def kn_closed(n: int) -> UniPoly:
    """``∂ε`` of the complete graph ``K_n``."""
    if n < 1:
        raise BadParameter(f"K_n needs n >= 1, got {n}")
    if n % 2 == 0:
        return UniPoly({n: 2 ** (n - 1), n - 2: 2 ** (n - 1)})
    return UniPoly({n - 1: 2**n})


def kmn_closed(m: int, n: int) -> UniPoly:
    """``∂ε`` of the complete bipartite graph ``K_{m,n}``."""
    if m < 1 or n < 1:
        raise BadParameter(f"K_(m,n) needs m, n >= 1, got ({m}, {n})")
    return UniPoly(
        {
            0: 2,
            2: 2 ** (m + 1) + 2 ** (n + 1) - 6,
            4: 2 ** (m + n) - 2 ** (m + 1) - 2 ** (n + 1) + 4,
        }
    )


# ---------------------------------------------------------------------------
# Invariant selectors and the four-term relation
# ---------------------------------------------------------------------------
class Invariant(str, Enum):
    PDGP = "pdgp"
    REFINED = "refined"
    SKEW = "skew"
    SKEW_REFINED = "skew-refined"
    SKEW_REFINED_CORANK = "skew-refined-corank"
    RANK = "rank"


InvariantFn = Callable[[SimpleGraph], Poly]

INVARIANTS: dict[Invariant, InvariantFn] = {
    Invariant.PDGP: pdgp,
    Invariant.REFINED: pdgp_refined,
    Invariant.SKEW: skew_char,
    Invariant.SKEW_REFINED: skew_char_refined,
    Invariant.SKEW_REFINED_CORANK: lambda g: skew_char_refined(g, corank=True),
    Invariant.RANK: rank_invariant,
}

# invariants the four-term sweep checks by default; --extended adds the rest
FOUR_TERM_CORE: tuple[Invariant, ...] = (
    Invariant.PDGP,
    Invariant.REFINED,
    Invariant.SKEW,
    Invariant.SKEW_REFINED,
)
FOUR_TERM_EXTENDED: tuple[Invariant, ...] = FOUR_TERM_CORE + (
    Invariant.SKEW_REFINED_CORANK,
    Invariant.RANK,
)


def resolve_invariant(selector: Invariant | str | InvariantFn) -> InvariantFn:
    if callable(selector) and not isinstance(selector, str):
        return selector
    try:
        return INVARIANTS[Invariant(selector)]
    except ValueError as exc:
        raise BadParameter(f"unknown invariant {selector!r}") from exc


def four_term_defect(
    selector: Invariant | str | InvariantFn, graph: SimpleGraph, a: int, b: int
) -> Poly:
    """``f(I) - f(I'_ab) - f(~I_ab) + f(~I'_ab)``; zero for every four-term invariant."""
    f = resolve_invariant(selector)
    toggled = toggle_edge(graph, a, b)
    tilde = neighbor_toggle(graph, a, b)
    tilde_toggled = toggle_edge(tilde, a, b)
    return f(graph) - f(toggled) - f(tilde) + f(tilde_toggled)  # type: ignore[operator]
