"""Dense Boolean (0/1) matrix algebra.

Boolean matrices are 2-d numpy arrays of dtype ``bool``; the product is the
or-of-ands composition (A (c) B)_{ij} = OR_t (A_{it} AND B_{tj}), written
``bool_product`` here.  The reflexive-transitive closure of a digraph with
adjacency matrix A is the saturated geometric series I v A v A^2 v ...,
computed by ``closure_series``.

Counting matrices (``int_power``) use dtype ``object`` so entries are plain
Python integers: path counts grow like products of level sizes and must
never wrap.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

BoolMatrix = np.ndarray
IntMatrix = np.ndarray


def as_bool_matrix(rows: Sequence[Sequence[int]] | np.ndarray) -> BoolMatrix:
    """Coerce nested 0/1 rows (or an array) to a 2-d bool array."""
    a = np.asarray(rows, dtype=bool)
    if a.ndim == 1 and a.size == 0:
        a = a.reshape(0, 0)
    if a.ndim != 2:
        raise ValueError(f"matrix must be 2-d, got shape {a.shape}")
    return a


def ones_matrix(r: int, c: int) -> BoolMatrix:
    """The r x c all-ones block."""
    if r < 0 or c < 0:
        raise ValueError(f"dimensions must be nonnegative, got {r}x{c}")
    return np.ones((r, c), dtype=bool)


def zeros_matrix(r: int, c: int) -> BoolMatrix:
    if r < 0 or c < 0:
        raise ValueError(f"dimensions must be nonnegative, got {r}x{c}")
    return np.zeros((r, c), dtype=bool)


def identity(n: int) -> BoolMatrix:
    return np.eye(n, dtype=bool)


def bool_product(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Boolean matrix product: entry (i,j) is OR_t (a[i,t] AND b[t,j])."""
    a = as_bool_matrix(a)
    b = as_bool_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(
            f"inner dimensions differ: {a.shape[0]}x{a.shape[1]} vs "
            f"{b.shape[0]}x{b.shape[1]}"
        )
    return a @ b


def bool_or(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Elementwise OR of two same-shaped matrices."""
    a = as_bool_matrix(a)
    b = as_bool_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return a | b


def bool_power(a: BoolMatrix, k: int) -> BoolMatrix:
    """k-th Boolean power of a square matrix; a^0 is the identity."""
    a = as_bool_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    result = identity(a.shape[0])
    base = a
    while k:
        if k & 1:
            result = bool_product(result, base)
        k >>= 1
        if k:
            base = bool_product(base, base)
    return result


def closure_series(a: BoolMatrix, reflexive: bool = True) -> BoolMatrix:
    """Saturate the Boolean geometric series of a square matrix.

    Returns I v A v A^2 v ... (the reflexive-transitive closure) when
    ``reflexive``, else A v A^2 v ... (the strict transitive closure).
    The fixed point is detected by comparing successive accumulators, so
    the loop terminates within ``rows`` iterations for any input, cyclic
    or not.
    """
    a = as_bool_matrix(a)
    n = a.shape[0]
    if n != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    acc = (a | identity(n)) if reflexive else a.copy()
    while True:
        nxt = acc | bool_product(acc, a)
        if np.array_equal(nxt, acc):
            return acc
        acc = nxt


def direct_sum(blocks: Iterable[BoolMatrix]) -> BoolMatrix:
    """Block-diagonal matrix with the given blocks, zeros elsewhere."""
    blocks = [as_bool_matrix(b) for b in blocks]
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols), dtype=bool)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def int_matrix(rows: Sequence[Sequence[int]] | np.ndarray) -> IntMatrix:
    """Coerce to a 2-d counting matrix of exact Python integers."""
    a = np.asarray(rows)
    if a.ndim != 2:
        raise ValueError(f"matrix must be 2-d, got shape {a.shape}")
    out = np.empty(a.shape, dtype=object)
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            v = int(a[i, j])
            if v < 0:
                raise ValueError(f"entries must be nonnegative, got {v} at ({i}, {j})")
            out[i, j] = v
    return out


def int_power(a: IntMatrix | np.ndarray, k: int) -> IntMatrix:
    """Ordinary k-th matrix power with exact integer arithmetic; a^0 = I."""
    a = int_matrix(a)
    n = a.shape[0]
    if n != a.shape[1]:
        raise ValueError(f"matrix must be square, got shape {a.shape}")
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    result = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            result[i, j] = 1 if i == j else 0
    base = a
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def to_text(m: BoolMatrix) -> str:
    """Render a matrix as lines of space-separated 0/1 entries.

    One row per line, single spaces, no trailing spaces, every line
    newline-terminated.  The empty (0-row) matrix renders as the empty
    string.
    """
    m = as_bool_matrix(m)
    return "".join(" ".join("1" if x else "0" for x in row) + "\n" for row in m)


def from_text(text: str) -> BoolMatrix:
    """Parse the ``to_text`` grid format back into a bool matrix."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        return np.zeros((0, 0), dtype=bool)
    rows = []
    width = None
    for ln in lines:
        entries = ln.split()
        if any(e not in ("0", "1") for e in entries):
            raise ValueError(f"invalid matrix line: {ln!r}")
        if width is None:
            width = len(entries)
        elif len(entries) != width:
            raise ValueError("ragged matrix text: rows have unequal lengths")
        rows.append([e == "1" for e in entries])
    return np.array(rows, dtype=bool)
