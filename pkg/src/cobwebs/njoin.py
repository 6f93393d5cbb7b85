"""Natural join of relations, bipartite digraphs, and adjacency matrices.

The natural join here is chain-structured: two binary relations (or their
bipartite digraphs, or their adjacency matrices) glue along one shared
middle set, keeping a single copy of it.  On square adjacency matrices in
bipartite block form the join follows the dimension scheme

    [(k+m) x (k+m)]  join  [(m+s) x (m+s)]  =  [(k+m+s) x (k+m+s)]

while the reduced composition projects the middle set away,

    [(k+m) x (k+m)]  compose  [(m+s) x (m+s)]  =  [(k+s) x (k+s)],

its biadjacency block being the Boolean product of the operands' blocks.
Chains of binary relations joined this way encode n-ary relations; the
reverse direction projects an n-ary relation onto its adjacent-column
pairs, and a relation is faithfully encoded by that chain exactly when
re-joining the projections reproduces it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .boolmat import BoolMatrix, as_bool_matrix, bool_product
from .digraph import GradedDigraph, global_adjacency


@dataclass(frozen=True)
class FiniteSet:
    """An ordered finite set of distinct labels; order fixes matrix axes."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"labels must be distinct, got {labels}")

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: str) -> bool:
        return label in self.labels

    def index(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class BinaryRelation:
    """A relation between two labeled finite sets, i.e. a bipartite digraph."""

    dom: FiniteSet
    ran: FiniteSet
    pairs: frozenset[tuple[str, str]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in self.pairs))
        for a, b in self.pairs:
            if a not in self.dom:
                raise ValueError(f"pair component {a!r} not in domain {self.dom.labels}")
            if b not in self.ran:
                raise ValueError(f"pair component {b!r} not in range {self.ran.labels}")

    @classmethod
    def complete(cls, dom: FiniteSet, ran: FiniteSet) -> "BinaryRelation":
        """The di-biclique: every domain label related to every range label."""
        return cls(dom, ran, frozenset(itertools.product(dom.labels, ran.labels)))

    def biadjacency(self) -> BoolMatrix:
        """|dom| x |ran| Boolean matrix in label order."""
        b = np.zeros((len(self.dom), len(self.ran)), dtype=bool)
        for a, c in self.pairs:
            b[self.dom.index(a), self.ran.index(c)] = True
        return b


@dataclass(frozen=True)
class RelationChain:
    """Consecutively linked relations: dom of each link is ran of the last."""

    links: tuple[BinaryRelation, ...]

    def __post_init__(self) -> None:
        links = tuple(self.links)
        object.__setattr__(self, "links", links)
        if not links:
            raise ValueError("relation chain must be nonempty")
        for k in range(len(links) - 1):
            if links[k].ran != links[k + 1].dom:
                raise ValueError(
                    f"chain broken at link {k}: ran {list(links[k].ran.labels)} "
                    f"!= dom {list(links[k + 1].dom.labels)} of link {k + 1}"
                )


@dataclass(frozen=True)
class NaryRelation:
    """A set of tuples over an ordered list of column sets."""

    columns: tuple[FiniteSet, ...]
    tuples: frozenset[tuple[str, ...]]

    def __post_init__(self) -> None:
        columns = tuple(self.columns)
        tuples = frozenset(tuple(t) for t in self.tuples)
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "tuples", tuples)
        if not columns:
            raise ValueError("n-ary relation needs at least one column")
        for t in tuples:
            if len(t) != len(columns):
                raise ValueError(f"tuple {t} has arity {len(t)}, expected {len(columns)}")
            for v, col in zip(t, columns):
                if v not in col:
                    raise ValueError(f"tuple component {v!r} not in column {col.labels}")

    @property
    def arity(self) -> int:
        return len(self.columns)


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    """Square adjacency matrix of a bipartite digraph, with its (k, m) shape.

    Only the top-right k x m block may be nonzero; the shape is carried
    explicitly because the zero matrix alone does not determine it.
    """

    mat: np.ndarray
    k: int
    m: int

    def __post_init__(self) -> None:
        mat = as_bool_matrix(self.mat).copy()
        mat.flags.writeable = False
        object.__setattr__(self, "mat", mat)
        n = self.k + self.m
        if self.k < 0 or self.m < 0:
            raise ValueError(f"shape must be nonnegative, got ({self.k}, {self.m})")
        if mat.shape != (n, n):
            raise ValueError(f"matrix shape {mat.shape} != ({n}, {n}) for shape ({self.k}, {self.m})")
        body = mat.copy()
        body[: self.k, self.k :] = False
        if body.any():
            raise ValueError("entries outside the top-right domain x codomain block")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdjacencyMatrix):
            return NotImplemented
        return (self.k, self.m) == (other.k, other.m) and np.array_equal(self.mat, other.mat)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.k, self.m)


def embed_biadjacency(b: BoolMatrix, k: int | None = None, m: int | None = None) -> AdjacencyMatrix:
    """Place a k x m biadjacency block into its square adjacency matrix."""
    b = as_bool_matrix(b)
    if k is None:
        k = b.shape[0]
    if m is None:
        m = b.shape[1]
    if b.shape != (k, m):
        raise ValueError(f"biadjacency block is {b.shape}, expected ({k}, {m})")
    n = k + m
    mat = np.zeros((n, n), dtype=bool)
    mat[:k, k:] = b
    return AdjacencyMatrix(mat, k, m)


def biadjacency_of(a: AdjacencyMatrix) -> BoolMatrix:
    """The k x m top-right block; inverse of ``embed_biadjacency``."""
    return a.mat[: a.k, a.k :].copy()


def njoin_condition(a1: AdjacencyMatrix, a2: AdjacencyMatrix) -> bool:
    """True when the codomain size of a1 equals the domain size of a2."""
    return a1.m == a2.k


def njoin_adjacency(a1: AdjacencyMatrix, a2: AdjacencyMatrix) -> BoolMatrix:
    """Natural join of two adjacency matrices sharing their middle set.

    The (k+m+s)-square result keeps one copy of the middle index block:
    a1's biadjacency lands at rows 1..k / cols k+1..k+m and a2's at rows
    k+1..k+m / cols k+m+1..k+m+s.
    """
    if not njoin_condition(a1, a2):
        raise ValueError(
            f"natural join condition violated: shapes {a1.shape} and {a2.shape}"
        )
    k, m, s = a1.k, a1.m, a2.m
    out = np.zeros((k + m + s, k + m + s), dtype=bool)
    out[:k, k : k + m] = biadjacency_of(a1)
    out[k : k + m, k + m :] = biadjacency_of(a2)
    return out


def njoin_fold(mats: Sequence[AdjacencyMatrix]) -> BoolMatrix:
    """Left fold of the natural join over a chain of adjacency matrices."""
    if not mats:
        raise ValueError("cannot fold an empty chain")
    for t in range(len(mats) - 1):
        if not njoin_condition(mats[t], mats[t + 1]):
            raise ValueError(
                f"natural join condition violated at position {t}: shapes "
                f"{mats[t].shape} and {mats[t + 1].shape}"
            )
    levels = tuple(a.k for a in mats) + (mats[-1].m,)
    blocks = tuple(biadjacency_of(a) for a in mats)
    return global_adjacency(GradedDigraph(levels, blocks))


def reduced_composition(a1: AdjacencyMatrix, a2: AdjacencyMatrix) -> AdjacencyMatrix:
    """Compose along the middle set: biadjacency blocks Boolean-multiply."""
    if not njoin_condition(a1, a2):
        raise ValueError(
            f"natural join condition violated: shapes {a1.shape} and {a2.shape}"
        )
    return embed_biadjacency(bool_product(biadjacency_of(a1), biadjacency_of(a2)))


def njoin_digraphs(g1: BinaryRelation, g2: BinaryRelation) -> GradedDigraph:
    """Natural join of two bipartite digraphs into a three-level digraph.

    The middle sets must agree by labels and order (matrix columns are
    label-ordered).  The operation is ordered: g1 feeds g2.
    """
    if g1.ran != g2.dom:
        raise ValueError(
            f"middle sets differ: ran {list(g1.ran.labels)} vs dom {list(g2.dom.labels)}"
        )
    return GradedDigraph(
        (len(g1.dom), len(g1.ran), len(g2.ran)),
        (g1.biadjacency(), g2.biadjacency()),
    )


def njoin_graded(d1: GradedDigraph, d2: GradedDigraph) -> GradedDigraph:
    """Natural join of two graded digraphs along the shared boundary level."""
    if not d1.levels or not d2.levels:
        raise ValueError("cannot join an empty graded digraph")
    if d1.levels[-1] != d2.levels[0]:
        raise ValueError(
            f"boundary levels differ: {d1.levels[-1]} vs {d2.levels[0]}"
        )
    return GradedDigraph(d1.levels + d2.levels[1:], d1.blocks + d2.blocks)


def compose_relations(r: BinaryRelation, s: BinaryRelation) -> BinaryRelation:
    """Relation composition through the shared middle set."""
    if r.ran != s.dom:
        raise ValueError(
            f"middle sets differ: ran {list(r.ran.labels)} vs dom {list(s.dom.labels)}"
        )
    pairs = frozenset(
        (x, z) for (x, y) in r.pairs for (y2, z) in s.pairs if y == y2
    )
    return BinaryRelation(r.dom, s.ran, pairs)


def njoin_relations(chain: RelationChain | Iterable[BinaryRelation]) -> NaryRelation:
    """Natural join of a relation chain into one n-ary relation.

    Columns are the chained sets and every tuple threads one pair of each
    link; a single link yields its relation as a 2-ary relation.
    """
    if not isinstance(chain, RelationChain):
        chain = RelationChain(tuple(chain))
    links = chain.links
    columns = (links[0].dom,) + tuple(link.ran for link in links)
    tuples: set[tuple[str, ...]] = {pair for pair in links[0].pairs}
    for link in links[1:]:
        by_head: dict[str, list[str]] = {}
        for v, w in link.pairs:
            by_head.setdefault(v, []).append(w)
        tuples = {t + (w,) for t in tuples for w in by_head.get(t[-1], ())}
    return NaryRelation(columns, frozenset(tuples))


def project_chain(t: NaryRelation) -> RelationChain:
    """Adjacent-column pair projections of an n-ary relation."""
    if t.arity < 2:
        raise ValueError(f"arity must be >= 2 to project a chain, got {t.arity}")
    links = []
    for k in range(t.arity - 1):
        pairs = frozenset((tup[k], tup[k + 1]) for tup in t.tuples)
        links.append(BinaryRelation(t.columns[k], t.columns[k + 1], pairs))
    return RelationChain(tuple(links))


def is_join_decomposable(t: NaryRelation) -> bool:
    """True when re-joining the adjacent-pair projections reproduces t.

    The join of the projections always contains the source tuples; it is
    exact precisely for relations that their binary chain encodes
    faithfully.
    """
    return njoin_relations(project_chain(t)).tuples == t.tuples


# -- JSON wire formats -------------------------------------------------------

def relation_to_json(r: BinaryRelation) -> dict:
    return {
        "dom": list(r.dom.labels),
        "ran": list(r.ran.labels),
        "pairs": sorted([a, b] for (a, b) in r.pairs),
    }


def relation_from_json(data: dict) -> BinaryRelation:
    try:
        dom = FiniteSet(tuple(data["dom"]))
        ran = FiniteSet(tuple(data["ran"]))
        pairs = frozenset((str(a), str(b)) for a, b in data["pairs"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad relation JSON: {exc}") from None
    return BinaryRelation(dom, ran, pairs)


def nary_to_json(t: NaryRelation) -> dict:
    return {
        "columns": [list(c.labels) for c in t.columns],
        "tuples": sorted(list(tup) for tup in t.tuples),
    }


def nary_from_json(data: dict) -> NaryRelation:
    try:
        columns = tuple(FiniteSet(tuple(c)) for c in data["columns"])
        tuples = frozenset(tuple(str(v) for v in tup) for tup in data["tuples"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad n-ary relation JSON: {exc}") from None
    return NaryRelation(columns, tuples)
