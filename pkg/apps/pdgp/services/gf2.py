"""
GF(2) linear algebra on symmetric zero-diagonal matrices.

Rows are bit-packed into Python ints (bit ``j`` of row ``i`` is entry
``(i, j)``).  Rank is computed with an XOR basis keyed by leading bit, which
is plain Gaussian elimination with word-parallel row operations.

Two entry points exist for principal-submatrix ranks:

1. ``rank_of_subset``: one subset, scalar Python ints.
2. ``subset_ranks``: a whole batch of subsets at once, as a numpy
   ``uint64`` array; the elimination runs column-by-column over the batch,
   so every subset in the batch is reduced by the same vectorized XORs.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from apps.pdgp.core.config import HARD_VERTEX_CAP
from apps.pdgp.core.errors import BadParameter, SizeCapExceeded

logger: logging.Logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Bit helpers
# ---------------------------------------------------------------------------
def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits of *mask* in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def compress_bits(word: int, mask: int) -> int:
    """Gather the bits of *word* at the positions of *mask* into the low bits."""
    out = 0
    for i, pos in enumerate(iter_bits(mask)):
        if (word >> pos) & 1:
            out |= 1 << i
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


# ---------------------------------------------------------------------------
# Matrix type
# ---------------------------------------------------------------------------
@dataclass(frozen=True, slots=True)
class Gf2Matrix:
    """Symmetric zero-diagonal ``n x n`` matrix over GF(2), ``n <= 63``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n > HARD_VERTEX_CAP:
            raise SizeCapExceeded("matrix dimension", self.n, HARD_VERTEX_CAP)
        if self.n < 0 or len(self.rows) != self.n:
            raise BadParameter(f"expected {self.n} rows, got {len(self.rows)}")
        limit = full_mask(self.n)
        for i, row in enumerate(self.rows):
            if row & ~limit or row < 0:
                raise BadParameter(f"row {i} has bits outside 0..{self.n - 1}")
            if (row >> i) & 1:
                raise BadParameter(f"nonzero diagonal entry at {i}")
            for j in iter_bits(row):
                if not (self.rows[j] >> i) & 1:
                    raise BadParameter(f"matrix not symmetric at ({i}, {j})")

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]]) -> Gf2Matrix:
        """Build from a nested 0/1 list (row-major)."""
        rows = []
        for row in entries:
            word = 0
            for j, value in enumerate(row):
                if value & 1:
                    word |= 1 << j
            rows.append(word)
        return cls(len(rows), tuple(rows))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_dense(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]


# ---------------------------------------------------------------------------
# Scalar rank
# ---------------------------------------------------------------------------
def _basis_rank(vectors: Iterable[int]) -> int:
    basis: dict[int, int] = {}
    for x in vectors:
        while x:
            lead = x.bit_length() - 1
            pivot = basis.get(lead)
            if pivot is None:
                basis[lead] = x
                break
            x ^= pivot
    return len(basis)


def rank(matrix: Gf2Matrix) -> int:
    """Rank of *matrix* over GF(2); always even for this matrix class."""
    return _basis_rank(matrix.rows)


def rank_of_subset(matrix: Gf2Matrix, subset: int) -> int:
    """Rank of the principal submatrix on the vertices in *subset*.

    The submatrix is never materialized: rows are masked in place.
    """
    rows = matrix.rows
    return _basis_rank(rows[v] & subset for v in iter_bits(subset))


def corank(matrix: Gf2Matrix) -> int:
    return matrix.n - rank(matrix)


def principal_submatrix(matrix: Gf2Matrix, subset: int) -> Gf2Matrix:
    """Restrict *matrix* to the rows/columns in *subset*, keeping index order."""
    rows = tuple(compress_bits(matrix.rows[v] & subset, subset) for v in iter_bits(subset))
    return Gf2Matrix(len(rows), rows)


# ---------------------------------------------------------------------------
# Batched rank over many subsets (numpy, word-parallel)
# ---------------------------------------------------------------------------
_ZERO = np.uint64(0)


def subset_ranks(rows: Sequence[int], masks: np.ndarray) -> np.ndarray:
    """Principal-submatrix ranks for every subset in *masks*.

    Args:
        rows: bit-packed rows of an ``n x n`` symmetric zero-diagonal matrix.
        masks: ``uint64`` array of vertex subsets.

    Returns:
        ``uint8`` array of ranks, aligned with *masks*.
    """
    n = len(rows)
    masks = np.asarray(masks, dtype=np.uint64)
    ranks = np.zeros(masks.shape, dtype=np.uint8)
    if n == 0 or masks.size == 0:
        return ranks

    bit = [np.uint64(1 << h) for h in range(n)]
    row_words = [np.uint64(r) for r in rows]
    basis = np.zeros((n, masks.size), dtype=np.uint64)

    for v in range(n):
        x = np.where((masks & bit[v]) != _ZERO, masks & row_words[v], _ZERO)
        top = rows[v].bit_length()
        for lead in range(top - 1, -1, -1):
            has_lead = (x & bit[lead]) != _ZERO
            if not has_lead.any():
                continue
            pivot = basis[lead]
            empty = pivot == _ZERO
            fresh = has_lead & empty
            reduce = has_lead & ~empty
            x = np.where(reduce, x ^ pivot, x)
            basis[lead] = np.where(fresh, x, pivot)
            x = np.where(fresh, _ZERO, x)
            ranks += fresh.astype(np.uint8)
    return ranks
