"""
Chord diagrams, intersection graphs and the face-tracing genus oracle.

A chord diagram with ``m`` chords is a double-occurrence word of length
``2m``; it stands for the orientable bouquet obtained by attaching one
untwisted band per chord to a single vertex disc.

Genus bookkeeping never builds the partial dual: for a bouquet ``G`` and a
chord subset ``A``::

    ε(G^A) = ε(F_A) + ε(F_{A^c}),    ε(F_A) = 1 + |A| - #boundary(F_A)

where ``F_A`` is the spanning surface keeping only the bands in ``A``.
"""
from __future__ import annotations

import logging
import re
import string
import time
from collections import Counter
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from apps.pdgp.core.config import HARD_VERTEX_CAP, get_settings
from apps.pdgp.core.errors import (
    BadOccurrenceCount,
    BadParameter,
    EmptyInput,
    ParseError,
    SizeCapExceeded,
)
from apps.pdgp.services.gf2 import full_mask
from apps.pdgp.services.graphs import SimpleGraph
from apps.pdgp.services.polynomial import UniPoly

logger: logging.Logger = logging.getLogger(__name__)

# Bitmask over chord indices 0..m-1.
ChordSubset = int

_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class ChordDiagram:
    """Double-occurrence word, labels canonicalized to ``0..m-1`` by first occurrence."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = Counter(self.word)
        if any(c != 2 for c in counts.values()):
            bad = next(label for label, c in counts.items() if c != 2)
            raise BadOccurrenceCount(str(bad), counts[bad])
        if self.word != _canonical(self.word):
            raise BadParameter("chord word is not in first-occurrence form")
        if self.m > HARD_VERTEX_CAP:
            raise SizeCapExceeded("chord count", self.m, HARD_VERTEX_CAP)

    @property
    def m(self) -> int:
        return len(self.word) // 2

    @property
    def chord_mask(self) -> ChordSubset:
        return full_mask(self.m)

    def endpoints(self) -> list[tuple[int, int]]:
        """``(first, second)`` positions of every chord, indexed by label."""
        first: dict[int, int] = {}
        ends = [(0, 0)] * self.m
        for pos, label in enumerate(self.word):
            if label in first:
                ends[label] = (first[label], pos)
            else:
                first[label] = pos
        return ends

    def to_text(self) -> str:
        if self.m <= 26:
            return "".join(string.ascii_uppercase[c] for c in self.word)
        return " ".join(str(c) for c in self.word)

    def __str__(self) -> str:
        return self.to_text()


def _canonical(word: tuple[int, ...] | list[object]) -> tuple[int, ...]:
    relabel: dict[object, int] = {}
    for label in word:
        relabel.setdefault(label, len(relabel))
    return tuple(relabel[label] for label in word)


def from_labels(word: list[object] | tuple[object, ...]) -> ChordDiagram:
    """Canonicalize an arbitrary double-occurrence sequence of hashable labels."""
    counts = Counter(word)
    for label, count in counts.items():
        if count != 2:
            raise BadOccurrenceCount(str(label), count)
    return ChordDiagram(_canonical(list(word)))


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------
def parse_word(text: str) -> ChordDiagram:
    """Parse ``"ABAB"``, ``"A B A B"`` or ``"0,1,0,1"``.

    Raises:
        EmptyInput: no tokens.
        BadOccurrenceCount: a token that does not appear exactly twice.
        ParseError: twisted-band markers (``~x`` or ``-x``, separated or contiguous).
    """
    stripped = text.strip()
    if not stripped:
        raise EmptyInput("chord word")
    separated = bool(_SEPARATORS.search(stripped))
    if separated:
        tokens = [t for t in _SEPARATORS.split(stripped) if t]
    else:
        tokens = list(stripped)
    if not tokens:
        raise EmptyInput("chord word")
    for token in tokens:
        # a contiguous word is split per character, so its markers arrive as lone tokens
        if "~" in token or (token.startswith("-") and (len(token) > 1 or not separated)):
            raise ParseError(f"twisted chord {token!r}: only orientable bouquets are supported")
    return from_labels(tokens)


# ---------------------------------------------------------------------------
# Intersection graph
# ---------------------------------------------------------------------------
def intersection_graph(diagram: ChordDiagram) -> SimpleGraph:
    """One vertex per chord; chords are adjacent iff their endpoints interleave."""
    ends = diagram.endpoints()
    rows = [0] * diagram.m
    for c, (i1, i2) in enumerate(ends):
        for d in range(c + 1, diagram.m):
            j1, j2 = ends[d]
            if (i1 < j1 < i2) != (i1 < j2 < i2):
                rows[c] |= 1 << d
                rows[d] |= 1 << c
    return SimpleGraph(diagram.m, tuple(rows))


# ---------------------------------------------------------------------------
# Face tracing
# ---------------------------------------------------------------------------
def boundary_components(diagram: ChordDiagram, subset: ChordSubset) -> int:
    """Number of boundary components of the spanning surface ``F_A``.

    The word is restricted to the endpoints of chords in *subset*; with ``τ``
    swapping the two ends of each chord and ``ρ(i) = i + 1`` the count is the
    number of cycles of ``ρ∘τ``.  The bare disc has one boundary.
    """
    kept = [label for label in diagram.word if (subset >> label) & 1]
    length = len(kept)
    if length == 0:
        return 1
    partner = [0] * length
    first: dict[int, int] = {}
    for pos, label in enumerate(kept):
        if label in first:
            partner[pos] = first[label]
            partner[first[label]] = pos
        else:
            first[label] = pos

    seen = [False] * length
    cycles = 0
    for start in range(length):
        if seen[start]:
            continue
        cycles += 1
        pos = start
        while not seen[pos]:
            seen[pos] = True
            pos = partner[pos] + 1
            if pos == length:
                pos = 0
    return cycles


def euler_genus_spanning(diagram: ChordDiagram, subset: ChordSubset) -> int:
    """``ε(F_A) = 2c - |V| + |E| - |F| = 1 + |A| - #boundary``."""
    return 1 + subset.bit_count() - boundary_components(diagram, subset)


def partial_dual_genus(diagram: ChordDiagram, subset: ChordSubset) -> int:
    """Euler genus of the partial dual ``G^A``."""
    complement = diagram.chord_mask & ~subset
    return euler_genus_spanning(diagram, subset) + euler_genus_spanning(diagram, complement)


def face_count(diagram: ChordDiagram) -> int:
    """Boundary components of the whole bouquet."""
    return boundary_components(diagram, diagram.chord_mask)


# ---------------------------------------------------------------------------
# Brute-force partial-dual genus polynomial
# ---------------------------------------------------------------------------
def _genus_histogram(word: tuple[int, ...], lo: int, hi: int) -> list[int]:
    diagram = ChordDiagram(word)
    counts = [0] * (2 * diagram.m + 1)
    for mask in range(lo, hi):
        counts[partial_dual_genus(diagram, mask)] += 2
    return counts


def pdgp_via_ribbon(diagram: ChordDiagram, threads: int | None = None) -> UniPoly:
    """Σ_A z^{ε(G^A)} over all chord subsets, by face tracing.

    ``ε(G^A) = ε(G^{A^c})``, so only subsets without the last chord are
    traced and each is counted twice.

    Raises:
        SizeCapExceeded: ``m`` above ``PDGP_ENUM_CAP``.
    """
    settings = get_settings()
    m = diagram.m
    if m > settings.PDGP_ENUM_CAP:
        raise SizeCapExceeded("ribbon oracle chords", m, settings.PDGP_ENUM_CAP)
    if m == 0:
        return UniPoly.constant(1)

    half = 1 << (m - 1)
    step = 1 << settings.PDGP_CHUNK_BITS
    ranges = [(lo, min(lo + step, half)) for lo in range(0, half, step)]
    workers = threads if threads is not None else settings.resolved_threads()

    totals = [0] * (2 * m + 1)
    t_start = time.monotonic()
    if workers > 1 and len(ranges) > 1 and m >= settings.PDGP_PARALLEL_MIN_VERTICES:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _genus_histogram,
                [diagram.word] * len(ranges),
                [lo for lo, _ in ranges],
                [hi for _, hi in ranges],
            )
            for part in parts:
                totals = [a + b for a, b in zip(totals, part)]
    else:
        for lo, hi in ranges:
            part = _genus_histogram(diagram.word, lo, hi)
            totals = [a + b for a, b in zip(totals, part)]
    logger.debug("Ribbon oracle on %d chords took %.2fs", m, time.monotonic() - t_start)
    return UniPoly.from_counts(totals)


# ---------------------------------------------------------------------------
# Corpora
# ---------------------------------------------------------------------------
def enumerate_diagrams(m: int, cap: int | None = None) -> Iterator[ChordDiagram]:
    """All ``(2m-1)!!`` perfect matchings of ``2m`` points, once each."""
    limit = get_settings().PDGP_DIAGRAM_ENUM_CAP if cap is None else cap
    if m > limit:
        raise SizeCapExceeded("chord diagram enumeration", m, limit)
    if m < 0:
        raise BadParameter(f"negative chord count {m}")

    word = [-1] * (2 * m)

    def _fill(label: int) -> Iterator[ChordDiagram]:
        if label == m:
            yield ChordDiagram(tuple(word))
            return
        first = word.index(-1)
        word[first] = label
        for second in range(first + 1, 2 * m):
            if word[second] == -1:
                word[second] = label
                yield from _fill(label + 1)
                word[second] = -1
        word[first] = -1

    yield from _fill(0)


def random_diagram(m: int, seed: int) -> ChordDiagram:
    """Uniform random matching from numpy's PCG64 stream seeded with *seed*."""
    if m < 0:
        raise BadParameter(f"negative chord count {m}")
    if m > HARD_VERTEX_CAP:
        raise SizeCapExceeded("chord count", m, HARD_VERTEX_CAP)
    if seed < 0:
        raise BadParameter(f"negative seed {seed}")
    rng = np.random.default_rng(seed)
    order = rng.permutation(2 * m)
    word: list[int] = [0] * (2 * m)
    for i, pos in enumerate(order):
        word[int(pos)] = i // 2
    return ChordDiagram(_canonical(word))


def rotate(diagram: ChordDiagram, shift: int) -> ChordDiagram:
    """Same diagram read from a different base point on the circle."""
    if not diagram.word:
        return diagram
    k = shift % len(diagram.word)
    return ChordDiagram(_canonical(diagram.word[k:] + diagram.word[:k]))
