"""
Parallel subset enumeration engine.

Every invariant that sums over ``A ⊆ V`` only needs, per subset, the three
numbers ``|A|``, ``rank(M_A)`` and ``rank(M_{A^c})``.  The engine walks the
masks with the top vertex absent, pairs each ``A`` with ``A^c`` and
histograms:

* ``genus[w][e]``: subsets with ``n - |A| = w`` and
  ``rank(M_A) + rank(M_{A^c}) = e``;
* ``skew[w][r]``: subsets with ``n - |A| = w`` and ``rank(M_A) = r``.

Mask ranges are independent, so they run on a process pool when the graph
is large enough; merging is integer addition and the result does not depend
on the worker count or chunking.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from apps.pdgp.core.config import get_settings
from apps.pdgp.core.errors import SizeCapExceeded
from apps.pdgp.services.gf2 import full_mask, subset_ranks
from apps.pdgp.services.graphs import SimpleGraph

logger: logging.Logger = logging.getLogger(__name__)

_BYTE_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def popcount(masks: np.ndarray) -> np.ndarray:
    """Per-element popcount of a ``uint64`` array (numpy < 2 has no bitwise_count)."""
    as_bytes = np.ascontiguousarray(masks, dtype=np.uint64).view(np.uint8).reshape(-1, 8)
    return _BYTE_POPCOUNT[as_bytes].sum(axis=1, dtype=np.int64)


@dataclass(frozen=True)
class SubsetTally:
    """Histograms of one full pass over ``2^n`` vertex subsets."""

    n: int
    genus: tuple[tuple[int, ...], ...]
    skew: tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# Worker
# ---------------------------------------------------------------------------
def _tally_range(rows: tuple[int, ...], lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Histograms for masks ``lo..hi-1`` (top vertex absent) and their complements."""
    n = len(rows)
    masks = np.arange(lo, hi, dtype=np.uint64)
    comps = masks ^ np.uint64(full_mask(n))
    r = subset_ranks(rows, masks).astype(np.int64)
    rc = subset_ranks(rows, comps).astype(np.int64)
    size = popcount(masks)

    width_g = 2 * n + 1
    width_s = n + 1
    exps = r + rc
    # A has w = n - |A|; its complement has w = |A|.
    genus_idx = np.concatenate(((n - size) * width_g + exps, size * width_g + exps))
    skew_idx = np.concatenate(((n - size) * width_s + r, size * width_s + rc))
    genus = np.bincount(genus_idx, minlength=(n + 1) * width_g).reshape(n + 1, width_g)
    skew = np.bincount(skew_idx, minlength=(n + 1) * width_s).reshape(n + 1, width_s)
    return genus, skew


def _ranges(n: int, chunk_bits: int) -> list[tuple[int, int]]:
    half = 1 << (n - 1)
    step = 1 << chunk_bits
    return [(lo, min(lo + step, half)) for lo in range(0, half, step)]


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------
def check_enum_cap(n: int, what: str = "subset enumeration", cap: int | None = None) -> None:
    limit = get_settings().PDGP_ENUM_CAP if cap is None else cap
    if n > limit:
        raise SizeCapExceeded(what, n, limit)


def tally_subsets(graph: SimpleGraph, threads: int | None = None) -> SubsetTally:
    """Enumerate all subsets of ``V(graph)`` once and return the histograms.

    Raises:
        SizeCapExceeded: ``graph.n`` above ``PDGP_ENUM_CAP``.
    """
    check_enum_cap(graph.n)
    workers = threads if threads is not None else get_settings().resolved_threads()
    return _tally_cached(graph.adj, max(1, workers))


@lru_cache(maxsize=4096)
def _tally_cached(rows: tuple[int, ...], workers: int) -> SubsetTally:
    n = len(rows)
    if n == 0:
        return SubsetTally(0, ((1,),), ((1,),))

    settings = get_settings()
    ranges = _ranges(n, settings.PDGP_CHUNK_BITS)
    genus = np.zeros((n + 1, 2 * n + 1), dtype=object)
    skew = np.zeros((n + 1, n + 1), dtype=object)

    t_start = time.monotonic()
    parallel = workers > 1 and len(ranges) > 1 and n >= settings.PDGP_PARALLEL_MIN_VERTICES
    if parallel:
        logger.info("Enumerating 2^%d subsets over %d ranges with %d workers", n, len(ranges), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _tally_range,
                [rows] * len(ranges),
                [lo for lo, _ in ranges],
                [hi for _, hi in ranges],
            )
            for g_part, s_part in parts:
                genus += g_part.astype(object)
                skew += s_part.astype(object)
    else:
        for lo, hi in ranges:
            g_part, s_part = _tally_range(rows, lo, hi)
            genus += g_part.astype(object)
            skew += s_part.astype(object)

    logger.debug("Subset tally for n=%d finished in %.2fs", n, time.monotonic() - t_start)
    return SubsetTally(
        n=n,
        genus=tuple(tuple(int(c) for c in row) for row in genus),
        skew=tuple(tuple(int(c) for c in row) for row in skew),
    )


def clear_tally_cache() -> None:
    _tally_cached.cache_clear()


def rank_table(graph: SimpleGraph) -> np.ndarray:
    """``rank(M_A)`` for every mask ``A`` in ``0..2^n-1`` (``uint8``)."""
    n = graph.n
    step = 1 << get_settings().PDGP_CHUNK_BITS
    total = 1 << n
    parts = [
        subset_ranks(graph.adj, np.arange(lo, min(lo + step, total), dtype=np.uint64))
        for lo in range(0, total, step)
    ]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint8)
