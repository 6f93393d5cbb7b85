"""Shared oracles and generators for the test suite.

Oracles here are deliberately independent of the library code paths they
check: Warshall closure instead of the geometric series, DFS enumeration
instead of matrix powers, exhaustive Cartesian filtering instead of the
chained join, and a quartic submatrix scan instead of support nesting.
"""

from __future__ import annotations

import itertools
import random
from pathlib import Path

import numpy as np

from cobwebs.fseq import FSequence

GOLDEN_DIR = Path(__file__).parent / "golden"

# one representative per built-in sequence kind (explicit aside)
BUILTIN_SEQUENCES = (
    FSequence.naturals(),
    FSequence.fibonacci(),
    FSequence.gaussian(2),
    FSequence.constant(3),
)


def golden_text(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


def warshall_closure(a: np.ndarray, reflexive: bool = False) -> np.ndarray:
    """Reachability by Warshall's row-OR sweeps."""
    r = np.array(a, dtype=bool)
    n = r.shape[0]
    for k in range(n):
        for i in range(n):
            if r[i, k]:
                r[i] |= r[k]
    if reflexive:
        r |= np.eye(n, dtype=bool)
    return r


def dfs_count_paths(adj: np.ndarray, x: int, y: int) -> int:
    """Count directed paths of length >= 1 from x to y (1-based) by DFS."""
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    target = y - 1

    def walk(u: int) -> int:
        if u == target:
            return 1
        return sum(walk(v) for v in range(n) if adj[u, v])

    return sum(walk(v) for v in range(n) if adj[x - 1, v])


def naive_perm2x2(b: np.ndarray) -> bool:
    """Quartic scan: does any 2x2 permutation submatrix occur?"""
    b = np.asarray(b, dtype=bool)
    rows, cols = b.shape
    for r1 in range(rows):
        for r2 in range(r1 + 1, rows):
            for c1 in range(cols):
                for c2 in range(c1 + 1, cols):
                    quad = (b[r1, c1], b[r1, c2], b[r2, c1], b[r2, c2])
                    if quad in ((True, False, False, True), (False, True, True, False)):
                        return True
    return False


def brute_force_join(columns, links) -> set[tuple[str, ...]]:
    """All tuples of the full column product whose adjacent pairs are linked."""
    return {
        t
        for t in itertools.product(*[c.labels for c in columns])
        if all((t[k], t[k + 1]) in links[k].pairs for k in range(len(links)))
    }


def rand_bool_matrix(rng: random.Random, rows: int, cols: int, density: float = 0.5) -> np.ndarray:
    a = np.zeros((rows, cols), dtype=bool)
    for i in range(rows):
        for j in range(cols):
            a[i, j] = rng.random() < density
    return a


def rand_dag(rng: random.Random, n: int, density: float = 0.4) -> np.ndarray:
    """Random DAG adjacency: strictly upper triangular, then relabeled."""
    a = np.triu(rand_bool_matrix(rng, n, n, density), 1)
    perm = list(range(n))
    rng.shuffle(perm)
    p = np.eye(n, dtype=bool)[perm]
    return p.T @ a @ p


def rand_graded_sizes(rng: random.Random, max_levels: int = 5, max_size: int = 4) -> list[int]:
    return [rng.randint(1, max_size) for _ in range(rng.randint(1, max_levels))]
