import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cobwebs import boolmat, digraph
from cobwebs.cobweb import build_cobweb
from cobwebs.digraph import GradedDigraph, Poset

from conftest import golden_text, rand_bool_matrix, rand_dag, rand_graded_sizes, warshall_closure


def rand_graded(rng: random.Random) -> GradedDigraph:
    sizes = rand_graded_sizes(rng)
    blocks = tuple(
        rand_bool_matrix(rng, sizes[k], sizes[k + 1]) for k in range(len(sizes) - 1)
    )
    return GradedDigraph(tuple(sizes), blocks)


def test_graded_digraph_validation():
    with pytest.raises(ValueError):
        GradedDigraph((1, 0), (boolmat.ones_matrix(1, 0),))
    with pytest.raises(ValueError):
        GradedDigraph((1, 2), ())
    with pytest.raises(ValueError):
        GradedDigraph((1, 2), (boolmat.ones_matrix(2, 2),))


def test_global_adjacency_single_block():
    d = GradedDigraph((1, 2), (boolmat.ones_matrix(1, 2),))
    assert digraph.global_adjacency(d).astype(int).tolist() == [
        [0, 1, 1],
        [0, 0, 0],
        [0, 0, 0],
    ]


def test_global_adjacency_cobweb_prefix():
    d = build_cobweb([1, 2, 3]).hasse
    a = digraph.global_adjacency(d)
    expected = np.zeros((6, 6), dtype=bool)
    expected[0, 1:3] = True
    expected[1:3, 3:6] = True
    assert np.array_equal(a, expected)


def test_global_adjacency_identity_block():
    d = GradedDigraph((2, 2), (boolmat.identity(2),))
    a = digraph.global_adjacency(d)
    assert a.astype(int).tolist() == [
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
    ]


def test_global_adjacency_strictly_upper_triangular():
    rng = random.Random(5)
    for _ in range(100):
        a = digraph.global_adjacency(rand_graded(rng))
        assert not np.tril(a).any()


def test_vertex_levels_and_arcs():
    d = build_cobweb([1, 2, 3]).hasse
    assert d.level_of(1) == 0
    assert d.level_of(3) == 1
    assert d.level_of(6) == 2
    with pytest.raises(ValueError):
        d.level_of(7)
    arcs = list(d.arcs())
    assert arcs[:2] == [(1, 2), (1, 3)]
    assert len(arcs) == 2 + 6


def test_closure_of_chain_is_full_upper_triangle():
    chain = GradedDigraph((1, 1, 1), (boolmat.ones_matrix(1, 1),) * 2)
    p = digraph.transitive_closure(chain)
    assert np.array_equal(p.leq, np.triu(np.ones((3, 3), dtype=bool)))


def test_closure_of_naturals_cobweb_matches_golden():
    d = build_cobweb([1, 2, 3, 4, 5, 1]).hasse
    p = digraph.transitive_closure(d)
    assert boolmat.to_text(p.leq) == golden_text("zeta_n_16.txt")


@given(st.integers(0, 10), st.randoms(use_true_random=False))
def test_closure_equals_warshall_on_random_dags(n, rnd):
    a = rand_dag(rnd, n)
    p = digraph.transitive_closure(a)
    assert np.array_equal(p.leq, warshall_closure(a, reflexive=True))


def test_closure_rejects_cycles():
    cycle = np.array([[0, 1], [1, 0]], dtype=bool)
    with pytest.raises(ValueError, match="cyclic"):
        digraph.transitive_closure(cycle)


def test_closure_is_idempotent():
    rng = random.Random(99)
    for _ in range(50):
        p = digraph.transitive_closure(rand_dag(rng, rng.randint(0, 8)))
        again = digraph.transitive_closure(p.leq & ~boolmat.identity(p.n))
        assert p == again


def test_poset_invariants_enforced():
    with pytest.raises(ValueError, match="reflexive"):
        Poset(boolmat.zeros_matrix(2, 2))
    sym = np.array([[1, 1], [1, 1]], dtype=bool)
    with pytest.raises(ValueError, match="antisymmetric"):
        Poset(sym)
    intransitive = np.array(
        [[1, 1, 0], [0, 1, 1], [0, 0, 1]], dtype=bool
    )
    with pytest.raises(ValueError, match="transitive"):
        Poset(intransitive)


def test_transitive_reduction_textbook():
    a = np.array([[0, 1, 1], [0, 0, 1], [0, 0, 0]], dtype=bool)
    reduced = digraph.transitive_reduction(a)
    assert reduced.astype(int).tolist() == [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    assert not digraph.is_transitive_irreducible(a)
    assert digraph.is_transitive_irreducible(reduced)


def test_transitive_reduction_of_reduced_chain_is_noop():
    a = np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]], dtype=bool)
    assert np.array_equal(digraph.transitive_reduction(a), a)


def test_transitive_reduction_rejects_cycles():
    with pytest.raises(ValueError, match="cyclic"):
        digraph.transitive_reduction(np.array([[0, 1], [1, 0]], dtype=bool))
    with pytest.raises(ValueError):
        digraph.transitive_reduction(boolmat.ones_matrix(2, 3))


def test_reduce_close_reduce_is_reduce():
    rng = random.Random(2024)
    for _ in range(200):
        a = rand_dag(rng, rng.randint(0, 8))
        red = digraph.transitive_reduction(a)
        closed = digraph.transitive_closure(red).leq & ~boolmat.identity(red.shape[0])
        assert np.array_equal(digraph.transitive_reduction(closed), red)


def test_empty_digraph_is_irreducible():
    assert digraph.is_transitive_irreducible(boolmat.zeros_matrix(0, 0))
    assert digraph.is_transitive_irreducible(boolmat.zeros_matrix(3, 3))


def test_to_dot_small():
    d = GradedDigraph((1, 2), (boolmat.ones_matrix(1, 2),))
    dot = digraph.to_dot(d, rank_by_level=True)
    assert dot.startswith("digraph {")
    assert dot.endswith("}\n")
    assert dot.count("->") == 2
    assert dot.count("rank=same") == 2
    for vertex in ("1;", "2;", "3;"):
        assert vertex in dot


def test_to_dot_without_ranks():
    d = GradedDigraph((1, 2), (boolmat.ones_matrix(1, 2),))
    dot = digraph.to_dot(d, rank_by_level=False)
    assert "rank=same" not in dot
    assert dot.count("->") == 2


def test_to_dot_empty_graph():
    assert digraph.to_dot(GradedDigraph((), ())) == "digraph {\n}\n"


def test_json_roundtrip():
    rng = random.Random(31)
    for _ in range(25):
        d = rand_graded(rng)
        again = digraph.digraph_from_json(digraph.digraph_to_json(d))
        assert again == d
    with pytest.raises(ValueError):
        digraph.digraph_from_json({"levels": [1, 2]})
