"""Ferrers digraph recognition and staircase certification.

A 0/1 matrix is a Ferrers (bi)adjacency matrix when its rows are linearly
ordered by support inclusion; equivalently, when it contains no 2x2
permutation submatrix ([[1,0],[0,1]] or [[0,1],[1,0]]).  Both
characterizations are implemented: ``is_ferrers`` runs the fast nesting
check and ``has_perm2x2`` scans for an explicit witness, so each can
serve as the other's oracle.

A chain of bipartite blocks whose every block is Ferrers assembles into a
graded digraph of Ferrers dimension one; complete cobweb blocks always
pass, while deleting arcs may introduce a forbidden submatrix
(``chain_is_ferrers`` reports a witness per failing block).

``staircase_profile`` recognizes the zeta matrix of a cobweb poset by its
staircase of zeros above the diagonal and recovers the level sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .boolmat import BoolMatrix, as_bool_matrix, identity


@dataclass(frozen=True)
class PermSubmatrixWitness:
    """Rows and columns (1-based) of a 2x2 permutation submatrix.

    ``pattern`` is "10" for [[1,0],[0,1]] and "01" for [[0,1],[1,0]].
    """

    r1: int
    r2: int
    c1: int
    c2: int
    pattern: str

    def describe(self) -> str:
        return f"rows ({self.r1},{self.r2}) cols ({self.c1},{self.c2}) pattern {self.pattern}"


@dataclass(frozen=True)
class ChainFerrersResult:
    """Outcome of the blockwise Ferrers check over a chain of blocks."""

    ok: bool
    failures: tuple[tuple[int, PermSubmatrixWitness], ...]

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class StaircaseProfile:
    """Per-row 1-boundaries of a zeta grid plus the recovered level sizes.

    ``boundaries[i]`` is the 1-based column of the first 1 strictly right
    of the diagonal in row i+1 (None when the row is all zero there).  On
    failure ``violation`` holds the first offending (row, column).
    """

    boundaries: tuple[Optional[int], ...]
    level_sizes: Optional[tuple[int, ...]]
    violation: Optional[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return self.violation is None


def has_perm2x2(b: BoolMatrix) -> Optional[PermSubmatrixWitness]:
    """Find the lexicographically smallest 2x2 permutation submatrix.

    Returns None when no such submatrix exists.  Witness order is
    (r1, r2, c1, c2) with r1 < r2 and c1 < c2, all 1-based.
    """
    b = as_bool_matrix(b)
    rows, cols = b.shape
    for r1 in range(rows):
        for r2 in range(r1 + 1, rows):
            hi_lo = b[r1] & ~b[r2]  # columns reading (1, 0) down the pair
            lo_hi = ~b[r1] & b[r2]  # columns reading (0, 1)
            best: Optional[tuple[int, int, str]] = None
            for first, second, pattern in ((hi_lo, lo_hi, "10"), (lo_hi, hi_lo, "01")):
                firsts = np.nonzero(first)[0]
                if firsts.size == 0:
                    continue
                c1 = int(firsts[0])
                seconds = np.nonzero(second[c1 + 1 :])[0]
                if seconds.size == 0:
                    continue
                c2 = c1 + 1 + int(seconds[0])
                if best is None or (c1, c2) < best[:2]:
                    best = (c1, c2, pattern)
            if best is not None:
                c1, c2, pattern = best
                return PermSubmatrixWitness(r1 + 1, r2 + 1, c1 + 1, c2 + 1, pattern)
    return None


def is_ferrers(b: BoolMatrix) -> bool:
    """True when the rows are linearly ordered by support inclusion.

    Sorts rows by support size and verifies consecutive containment,
    which suffices because inclusion is transitive.  Agrees with
    ``has_perm2x2(b) is None`` on every matrix.
    """
    b = as_bool_matrix(b)
    if b.shape[0] <= 1 or b.shape[1] <= 1:
        return True
    counts = b.sum(axis=1)
    order = np.argsort(-counts, kind="stable")
    for t in range(len(order) - 1):
        if (b[order[t + 1]] & ~b[order[t]]).any():
            return False
    return True


def strict_order_is_ferrers(z: BoolMatrix) -> bool:
    """Ferrers test for the strict part of a reflexive order matrix."""
    z = as_bool_matrix(z)
    if z.shape[0] != z.shape[1]:
        raise ValueError(f"order matrix must be square, got {z.shape}")
    return is_ferrers(z & ~identity(z.shape[0]))


def chain_is_ferrers(blocks: Sequence[BoolMatrix]) -> ChainFerrersResult:
    """Blockwise Ferrers certification of a conformable chain of blocks.

    All blocks Ferrers certifies the assembled graded digraph as Ferrers
    dimension one; every failing block is reported with its witness.
    """
    blocks = [as_bool_matrix(b) for b in blocks]
    for k in range(len(blocks) - 1):
        if blocks[k].shape[1] != blocks[k + 1].shape[0]:
            raise ValueError(
                f"chain not conformable at block {k}: {blocks[k].shape} then "
                f"{blocks[k + 1].shape}"
            )
    failures = []
    for k, b in enumerate(blocks):
        witness = has_perm2x2(b)
        if witness is not None:
            failures.append((k, witness))
    return ChainFerrersResult(not failures, tuple(failures))


def staircase_profile(z: BoolMatrix) -> StaircaseProfile:
    """Recognize a cobweb zeta grid and recover its level sizes.

    The staircase discipline: above the diagonal, row i is 0 exactly on
    the columns of vertex i's own level and 1 on every column of every
    later level.  A trailing truncated level is fine (its rows simply
    have no 1s right of the diagonal), but a multi-vertex matrix whose
    first row has no 1s is not the zeta of any join of complete
    bipartite blocks, so it is rejected with witness (1, 2).
    """
    z = as_bool_matrix(z)
    n = z.shape[0]
    if n != z.shape[1]:
        raise ValueError(f"zeta matrix must be square, got {z.shape}")
    if not z.diagonal().all():
        raise ValueError("zeta matrix must be reflexive")
    if np.tril(z, -1).any():
        raise ValueError("zeta matrix must be upper triangular")

    boundaries: list[Optional[int]] = []
    for i in range(n):
        above = np.nonzero(z[i, i + 1 :])[0]
        boundaries.append(i + 2 + int(above[0]) if above.size else None)

    def fail(row: int, col: int) -> StaircaseProfile:
        return StaircaseProfile(tuple(boundaries), None, (row, col))

    if n == 0:
        return StaircaseProfile((), (), None)

    sizes: list[int] = []
    start = 0
    while start < n:
        boundary = boundaries[start]
        if boundary is None:
            if start == 0 and n > 1:
                return fail(1, 2)
            end = n  # trailing level: all remaining rows must be bare
        else:
            end = boundary - 1
        for i in range(start, end):
            row = z[i]
            inside = np.nonzero(row[i + 1 : end])[0]
            if inside.size:
                return fail(i + 1, i + 2 + int(inside[0]))
            missing = np.nonzero(~row[end:])[0]
            if missing.size:
                return fail(i + 1, end + 1 + int(missing[0]))
        sizes.append(end - start)
        start = end
    return StaircaseProfile(tuple(boundaries), tuple(sizes), None)
