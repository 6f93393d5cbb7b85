"""Cobweb posets and their Hasse digraphs (KoDAGs).

A cobweb poset over a sequence F is the graded poset whose Hasse diagram
is the natural join of complete bipartite digraphs (di-bicliques) between
consecutive levels of sizes F_0, F_1, ...  Its Hasse matrix A_F carries
all-ones blocks on the level super-diagonal, and its zeta matrix is the
saturated Boolean series I v A_F v A_F^2 v ..., whose rows show the
staircase pattern characteristic of cobwebs: above the diagonal, zeros
exactly within a vertex's own level and ones on every later level.

Cobweb posets have order dimension at most 2: the level-major labeling
and its within-level reversal intersect to the partial order, which
``realizer``/``verify_dim2`` construct and check.  ``fibonacci_tree``
builds the rabbit-genealogy tree, a subgraph of the Fibonacci cobweb
whose blocks are not Ferrers, used as the standard negative fixture.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from .boolmat import BoolMatrix, closure_series, int_matrix, int_power, ones_matrix
from .digraph import GradedDigraph, global_adjacency, transitive_closure
from .fseq import FSequence, level_sizes


@dataclass(frozen=True, eq=False)
class CobwebPoset:
    """A cobweb poset, held as its Hasse digraph of complete arc blocks."""

    hasse: GradedDigraph

    def __post_init__(self) -> None:
        for k, b in enumerate(self.hasse.blocks):
            if not b.all():
                raise ValueError(f"arc block {k} is not complete; not a cobweb")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CobwebPoset):
            return NotImplemented
        return self.hasse == other.hasse

    @property
    def n_vertices(self) -> int:
        return self.hasse.n_vertices

    @property
    def levels(self) -> tuple[int, ...]:
        return self.hasse.levels

    @cached_property
    def zeta(self) -> BoolMatrix:
        """Zeta matrix, filled lazily and at most once (fill is idempotent)."""
        z = closure_series(global_adjacency(self.hasse), reflexive=True)
        z.flags.writeable = False
        return z


@dataclass(frozen=True)
class Realizer:
    """Two linear orders on the vertices whose intersection is the poset."""

    l1: tuple[int, ...]
    l2: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "l1", tuple(int(v) for v in self.l1))
        object.__setattr__(self, "l2", tuple(int(v) for v in self.l2))
        n = len(self.l1)
        if sorted(self.l1) != list(range(1, n + 1)) or sorted(self.l2) != list(
            range(1, n + 1)
        ):
            raise ValueError("each order must permute the vertices 1..n")


def build_cobweb(f: FSequence | Iterable[int], n: Optional[int] = None) -> CobwebPoset:
    """Build the cobweb poset with levels sized by f.

    ``f`` is either a sequence object (then ``n`` picks how many levels)
    or an explicit list of level sizes.
    """
    if isinstance(f, FSequence):
        if n is None:
            raise ValueError("level count n is required with a sequence object")
        sizes = level_sizes(f, n)
    else:
        sizes = [int(s) for s in f]
        if n is not None and n != len(sizes):
            raise ValueError(f"n={n} disagrees with {len(sizes)} explicit sizes")
    if not sizes:
        raise ValueError("at least one level is required")
    if any(s < 1 for s in sizes):
        raise ValueError(f"level sizes must be >= 1, got {sizes}")
    blocks = tuple(
        ones_matrix(sizes[k], sizes[k + 1]) for k in range(len(sizes) - 1)
    )
    return CobwebPoset(GradedDigraph(tuple(sizes), blocks))


def hasse_matrix(p: CobwebPoset) -> BoolMatrix:
    """Global adjacency of the Hasse digraph: ones blocks, super-diagonal."""
    return global_adjacency(p.hasse)


def zeta_matrix(p: CobwebPoset) -> BoolMatrix:
    """Zeta matrix: entry (i, j) = 1 iff vertex i <= vertex j."""
    return p.zeta


def leq(p: CobwebPoset, x: int, y: int) -> bool:
    """Order query on global 1-based vertex indices."""
    n = p.n_vertices
    if not 1 <= x <= n:
        raise ValueError(f"vertex {x} out of range 1..{n}")
    if not 1 <= y <= n:
        raise ValueError(f"vertex {y} out of range 1..{n}")
    return bool(p.zeta[x - 1, y - 1])


def _level_major_orders(levels: tuple[int, ...]) -> Realizer:
    l1: list[int] = []
    l2: list[int] = []
    offset = 0
    for size in levels:
        block = list(range(offset + 1, offset + size + 1))
        l1.extend(block)
        l2.extend(reversed(block))
        offset += size
    return Realizer(tuple(l1), tuple(l2))


def realizer(p: CobwebPoset | GradedDigraph) -> Realizer:
    """The dimension-2 realizer of a cobweb poset.

    L1 is the level-major left-to-right order (the global numbering);
    L2 visits levels in the same order but right-to-left within each.
    """
    return _level_major_orders(p.levels)


def verify_dim2(
    p: CobwebPoset | GradedDigraph, r: Optional[Realizer] = None
) -> bool:
    """Check that the two linear orders intersect to the partial order.

    For all x != y the poset must have x <= y exactly when x precedes y
    in both orders.  True for every complete cobweb; fails e.g. for a
    corrupted L2 without the per-level reversal.
    """
    if isinstance(p, CobwebPoset):
        z = p.zeta
    else:
        z = transitive_closure(p).leq
    if r is None:
        r = realizer(p)
    n = z.shape[0]
    if len(r.l1) != n:
        raise ValueError(f"realizer covers {len(r.l1)} vertices, poset has {n}")
    pos1 = np.empty(n, dtype=int)
    pos2 = np.empty(n, dtype=int)
    for i, v in enumerate(r.l1):
        pos1[v - 1] = i
    for i, v in enumerate(r.l2):
        pos2[v - 1] = i
    before1 = pos1[:, None] < pos1[None, :]
    before2 = pos2[:, None] < pos2[None, :]
    off_diag = ~np.eye(n, dtype=bool)
    return bool(np.array_equal((before1 & before2) & off_diag, z & off_diag))


def count_paths(p: CobwebPoset | GradedDigraph, x: int, y: int) -> int:
    """Number of directed Hasse paths from x to y (1-based vertices).

    Length-0 paths are excluded: comparable vertices of levels i < j are
    joined by paths of the single length j - i, counted exactly via the
    integer matrix power.  Returns 0 for x = y and for y not above x.
    """
    d = p.hasse if isinstance(p, CobwebPoset) else p
    n = d.n_vertices
    if not 1 <= x <= n:
        raise ValueError(f"vertex {x} out of range 1..{n}")
    if not 1 <= y <= n:
        raise ValueError(f"vertex {y} out of range 1..{n}")
    k = d.level_of(y) - d.level_of(x)
    if x == y or k <= 0:
        return 0
    a = int_matrix(global_adjacency(d).astype(int))
    return int(int_power(a, k)[x - 1, y - 1])


def delete_arcs(
    p: CobwebPoset, removals: Iterable[tuple[int, int]]
) -> GradedDigraph:
    """Drop the given Hasse arcs, yielding a general graded digraph.

    Each removal is a global 1-based (source, target) pair and must be an
    existing arc between consecutive levels.
    """
    blocks = [b.copy() for b in p.hasse.blocks]
    offsets = p.hasse.level_offsets
    for u, v in removals:
        ku = p.hasse.level_of(u)
        kv = p.hasse.level_of(v)
        if kv != ku + 1:
            raise ValueError(f"({u}, {v}) is not an arc between consecutive levels")
        i = u - 1 - offsets[ku]
        j = v - 1 - offsets[kv]
        if not blocks[ku][i, j]:
            raise ValueError(f"arc ({u}, {v}) does not exist")
        blocks[ku][i, j] = False
    return GradedDigraph(p.hasse.levels, tuple(blocks))


def fibonacci_tree(n: int) -> GradedDigraph:
    """The rabbit-genealogy tree graded by generation.

    Level sizes follow 1, 1, 2, 3, 5, ...: each mature vertex begets one
    mature and one juvenile child (mature child placed on the left), each
    juvenile matures into a single child.  The result is a subgraph of
    the Fibonacci cobweb Hasse digraph and its blocks are the standard
    non-Ferrers fixture.
    """
    if n < 1:
        raise ValueError(f"level count must be >= 1, got {n}")
    generations: list[tuple[str, ...]] = [("J",)]
    for _ in range(n - 1):
        nxt: list[str] = []
        for status in generations[-1]:
            nxt.extend(("M", "J") if status == "M" else ("M",))
        generations.append(tuple(nxt))
    levels = tuple(len(g) for g in generations)
    blocks = []
    for k in range(n - 1):
        parents, children = generations[k], generations[k + 1]
        b = np.zeros((len(parents), len(children)), dtype=bool)
        col = 0
        for i, status in enumerate(parents):
            width = 2 if status == "M" else 1
            b[i, col : col + width] = True
            col += width
        blocks.append(b)
    return GradedDigraph(levels, tuple(blocks))
