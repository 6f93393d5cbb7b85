"""Graded digraphs, their posets, and closure/reduction operators.

A graded digraph partitions its vertices into levels Phi_0, ..., Phi_n and
only has arcs from one level to the next, so it is acyclic by construction.
Vertices carry a global 1-based index assigned level-major, left to right
within a level; that numbering makes printed adjacency and zeta grids
literal row/column indices.

The poset associated to a graded digraph is its reflexive-transitive
closure; a digraph is transitive-irreducible (a Hasse diagram) when the
transitive reduction leaves it unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .boolmat import BoolMatrix, as_bool_matrix, bool_product, closure_series, identity


def _freeze(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class GradedDigraph:
    """Leveled vertex sets plus one arc block per consecutive level pair.

    ``levels[k]`` is |Phi_k| and ``blocks[k]`` is the |Phi_k| x |Phi_{k+1}|
    Boolean block of arcs from level k to level k+1.
    """

    levels: tuple[int, ...]
    blocks: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        levels = tuple(int(s) for s in self.levels)
        blocks = tuple(_freeze(as_bool_matrix(b)) for b in self.blocks)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "blocks", blocks)
        if any(s < 1 for s in levels):
            raise ValueError(f"level sizes must be >= 1, got {levels}")
        if len(blocks) != max(len(levels) - 1, 0):
            raise ValueError(
                f"expected {max(len(levels) - 1, 0)} arc blocks for "
                f"{len(levels)} levels, got {len(blocks)}"
            )
        for k, b in enumerate(blocks):
            if b.shape != (levels[k], levels[k + 1]):
                raise ValueError(
                    f"arc block {k} has shape {b.shape}, expected "
                    f"{(levels[k], levels[k + 1])}"
                )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedDigraph):
            return NotImplemented
        return self.levels == other.levels and all(
            np.array_equal(a, b) for a, b in zip(self.blocks, other.blocks)
        )

    @property
    def n_vertices(self) -> int:
        return sum(self.levels)

    @property
    def level_offsets(self) -> tuple[int, ...]:
        """0-based starting offset of each level in the global numbering."""
        offsets = []
        total = 0
        for s in self.levels:
            offsets.append(total)
            total += s
        return tuple(offsets)

    def level_of(self, v: int) -> int:
        """Level index of global 1-based vertex v."""
        if not 1 <= v <= self.n_vertices:
            raise ValueError(f"vertex {v} out of range 1..{self.n_vertices}")
        i = v - 1
        for k, off in enumerate(self.level_offsets):
            if i < off + self.levels[k]:
                return k
        raise AssertionError("unreachable")

    def arcs(self) -> Iterator[tuple[int, int]]:
        """All arcs as global 1-based (source, target) pairs."""
        offsets = self.level_offsets
        for k, b in enumerate(self.blocks):
            for i, j in zip(*np.nonzero(b)):
                yield offsets[k] + int(i) + 1, offsets[k + 1] + int(j) + 1


@dataclass(frozen=True, eq=False)
class Poset:
    """A finite poset given by its zeta matrix (the Boolean matrix of <=).

    The matrix is validated to be reflexive, antisymmetric and transitive.
    """

    leq: np.ndarray

    def __post_init__(self) -> None:
        z = _freeze(as_bool_matrix(self.leq))
        object.__setattr__(self, "leq", z)
        n = z.shape[0]
        if n != z.shape[1]:
            raise ValueError(f"zeta matrix must be square, got {z.shape}")
        if not z.diagonal().all():
            raise ValueError("zeta matrix must be reflexive")
        if (z & z.T & ~identity(n)).any():
            raise ValueError("zeta matrix must be antisymmetric")
        if (bool_product(z, z) & ~z).any():
            raise ValueError("zeta matrix must be transitive")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return np.array_equal(self.leq, other.leq)

    @property
    def n(self) -> int:
        return self.leq.shape[0]


def global_adjacency(d: GradedDigraph) -> BoolMatrix:
    """Assemble the square adjacency matrix from the per-level arc blocks.

    Blocks land in the super-diagonal band, so the result is strictly
    upper triangular.
    """
    n = d.n_vertices
    out = np.zeros((n, n), dtype=bool)
    offsets = d.level_offsets
    for k, b in enumerate(d.blocks):
        r, c = offsets[k], offsets[k + 1]
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
    return out


def chain_biadjacency(d: GradedDigraph) -> BoolMatrix:
    """Reduced adjacency of the whole chain: diag of the arc blocks.

    Rows range over all non-final levels, columns over all non-initial
    ones, so block k sits on the block diagonal and the result equals the
    direct sum of the per-level biadjacency blocks.
    """
    out = np.zeros((sum(d.levels[:-1]), sum(d.levels[1:])), dtype=bool)
    r = c = 0
    for b in d.blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def _strict_closure_checked(a: BoolMatrix) -> BoolMatrix:
    """Strict transitive closure, rejecting cyclic inputs."""
    strict = closure_series(a, reflexive=False)
    if strict.diagonal().any():
        v = int(np.nonzero(strict.diagonal())[0][0]) + 1
        raise ValueError(f"input digraph is cyclic (vertex {v} reaches itself)")
    return strict

def transitive_closure(d: GradedDigraph | BoolMatrix) -> Poset:
    """The poset associated to an acyclic digraph.

    Accepts a graded digraph (acyclic by construction) or a raw square
    adjacency matrix, which is rejected if cyclic.  The result's ``leq``
    is the reflexive-transitive closure, i.e. the zeta matrix.
    """
    if isinstance(d, GradedDigraph):
        a = global_adjacency(d)
    else:
        a = as_bool_matrix(d)
    strict = _strict_closure_checked(a)
    return Poset(strict | identity(strict.shape[0]))


def transitive_reduction(a: BoolMatrix) -> BoolMatrix:
    """Minimal sub-digraph of a DAG with the same transitive closure.

    An arc (x, y) is redundant exactly when some directed path of length
    >= 2 joins x to y; those are the entries of C (c) C for C the strict
    closure.
    """
    a = as_bool_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got {a.shape}")
    strict = _strict_closure_checked(a)
    return a & ~bool_product(strict, strict)


def is_transitive_irreducible(a: BoolMatrix) -> bool:
    """True when the digraph equals its own transitive reduction."""
    a = as_bool_matrix(a)
    return np.array_equal(transitive_reduction(a), a)


def to_dot(d: GradedDigraph, rank_by_level: bool = True) -> str:
    """Render as a DOT digraph, one rank per level when requested."""
    lines = ["digraph {"]
    if rank_by_level and d.levels:
        lines.append("  rankdir=BT;")
    for v in range(1, d.n_vertices + 1):
        lines.append(f"  {v};")
    if rank_by_level:
        offsets = d.level_offsets
        for k, size in enumerate(d.levels):
            members = " ".join(f"{offsets[k] + i + 1};" for i in range(size))
            lines.append(f"  {{ rank=same; {members} }}")
    for u, v in d.arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_json(d: GradedDigraph) -> dict:
    """JSON-ready dict: {"levels": [...], "arcs": [[row bit-lists] ...]}."""
    return {
        "levels": list(d.levels),
        "arcs": [[[int(x) for x in row] for row in b] for b in d.blocks],
    }


def digraph_from_json(data: dict) -> GradedDigraph:
    try:
        levels = tuple(int(s) for s in data["levels"])
        arcs = data["arcs"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad digraph JSON: {exc}") from None
    return GradedDigraph(levels, tuple(as_bool_matrix(b) for b in arcs))
