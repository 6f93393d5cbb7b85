import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cobwebs import boolmat
from cobwebs.cobweb import build_cobweb, hasse_matrix
from cobwebs.fseq import level_sizes

from conftest import BUILTIN_SEQUENCES, rand_bool_matrix, warshall_closure


def bool_matrices(max_rows=8, max_cols=8, min_rows=0, min_cols=0):
    def build(dims):
        r, c = dims
        return st.lists(
            st.lists(st.booleans(), min_size=c, max_size=c), min_size=r, max_size=r
        ).map(lambda rows: np.array(rows, dtype=bool).reshape(r, c))

    return st.tuples(
        st.integers(min_rows, max_rows), st.integers(min_cols, max_cols)
    ).flatmap(build)


def square_bool_matrices(max_n=8):
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.booleans(), min_size=n, max_size=n), min_size=n, max_size=n
        ).map(lambda rows: np.array(rows, dtype=bool).reshape(n, n))
    )


def test_ones_matrix():
    assert boolmat.ones_matrix(1, 2).astype(int).tolist() == [[1, 1]]
    assert boolmat.ones_matrix(2, 3).astype(int).tolist() == [[1, 1, 1], [1, 1, 1]]
    empty = boolmat.ones_matrix(0, 3)
    assert empty.shape == (0, 3)
    with pytest.raises(ValueError):
        boolmat.ones_matrix(-1, 2)


def test_bool_product_examples():
    b = rand_bool_matrix(random.Random(7), 2, 5)
    assert np.array_equal(boolmat.bool_product(boolmat.identity(2), b), b)
    prod = boolmat.bool_product(
        np.array([[1, 1]], dtype=bool), np.array([[1], [0]], dtype=bool)
    )
    assert prod.astype(int).tolist() == [[1]]
    swap = np.array([[0, 1], [1, 0]], dtype=bool)
    assert np.array_equal(boolmat.bool_product(boolmat.identity(2), swap), swap)


def test_bool_product_dimension_mismatch():
    with pytest.raises(ValueError):
        boolmat.bool_product(boolmat.ones_matrix(2, 3), boolmat.ones_matrix(2, 3))


def test_bool_or():
    a = np.array([[1, 0]], dtype=bool)
    assert np.array_equal(boolmat.bool_or(a, boolmat.zeros_matrix(1, 2)), a)
    assert np.array_equal(boolmat.bool_or(a, a), a)
    assert boolmat.bool_or(a, np.array([[0, 1]], dtype=bool)).all()
    with pytest.raises(ValueError):
        boolmat.bool_or(a, boolmat.zeros_matrix(2, 2))


def test_bool_product_associative_bulk():
    rng = random.Random(0xC0B3EB)
    for _ in range(1000):
        k, m, s, t = (rng.randint(1, 8) for _ in range(4))
        a = rand_bool_matrix(rng, k, m)
        b = rand_bool_matrix(rng, m, s)
        c = rand_bool_matrix(rng, s, t)
        left = boolmat.bool_product(boolmat.bool_product(a, b), c)
        right = boolmat.bool_product(a, boolmat.bool_product(b, c))
        assert np.array_equal(left, right)


def test_closure_of_zeros_is_identity():
    z = boolmat.closure_series(boolmat.zeros_matrix(3, 3), reflexive=True)
    assert np.array_equal(z, boolmat.identity(3))
    strict = boolmat.closure_series(boolmat.zeros_matrix(3, 3), reflexive=False)
    assert not strict.any()


def test_closure_requires_square():
    with pytest.raises(ValueError):
        boolmat.closure_series(boolmat.ones_matrix(2, 3))


@given(square_bool_matrices(max_n=10), st.booleans())
def test_closure_series_equals_warshall(a, reflexive):
    assert np.array_equal(
        boolmat.closure_series(a, reflexive=reflexive),
        warshall_closure(a, reflexive=reflexive),
    )


def test_nilpotent_powers_vanish_within_rows():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 8)
        a = np.triu(rand_bool_matrix(rng, n, n), 1)
        assert not boolmat.bool_power(a, n).any()
        partial = boolmat.identity(n)
        for k in range(1, n + 1):
            partial = partial | boolmat.bool_power(a, k)
        assert np.array_equal(partial, boolmat.closure_series(a, reflexive=True))


def test_direct_sum():
    out = boolmat.direct_sum([np.array([[1]], dtype=bool), np.array([[1, 1]], dtype=bool)])
    assert out.astype(int).tolist() == [[1, 0, 0], [0, 1, 1]]
    assert boolmat.direct_sum([]).shape == (0, 0)
    two = boolmat.direct_sum([boolmat.ones_matrix(1, 2), boolmat.ones_matrix(2, 3)])
    expected = np.zeros((3, 5), dtype=bool)
    expected[0, 0:2] = True
    expected[1:3, 2:5] = True
    assert np.array_equal(two, expected)


def test_int_power_small_cases():
    a = boolmat.int_matrix([[0, 1], [0, 0]])
    assert boolmat.int_power(a, 0).tolist() == [[1, 0], [0, 1]]
    assert np.array_equal(boolmat.int_power(a, 1), a)
    with pytest.raises(ValueError):
        boolmat.int_power(boolmat.int_matrix([[1, 2, 3]]), 2)
    with pytest.raises(ValueError):
        boolmat.int_matrix([[-1]])


def test_int_power_counts_two_step_paths():
    p = build_cobweb([1, 2, 3])
    a = hasse_matrix(p).astype(int)
    sq = boolmat.int_power(a, 2)
    for target in range(3, 6):  # 0-based columns of the level-2 vertices
        assert sq[0, target] == 2


def test_int_power_is_exact_for_large_counts():
    n = 25
    cube = boolmat.int_power(boolmat.int_matrix(np.ones((n, n), dtype=int)), 3)
    assert cube[0, 0] == n * n
    assert isinstance(cube[0, 0], int)


def test_bool_power_is_sign_of_int_power():
    rng = random.Random(23)
    for _ in range(120):
        n = rng.randint(1, 8)
        k = rng.randint(0, 6)
        a = rand_bool_matrix(rng, n, n)
        shadow = boolmat.int_power(boolmat.int_matrix(a.astype(int)), k)
        assert np.array_equal(shadow != 0, boolmat.bool_power(a, k))


@pytest.mark.parametrize("seq", BUILTIN_SEQUENCES, ids=lambda s: s.kind)
def test_cobweb_power_supports_are_disjoint(seq):
    a = hasse_matrix(build_cobweb(level_sizes(seq, 6)))
    powers = [boolmat.bool_power(a, k) for k in range(1, 7)]
    for i in range(len(powers)):
        for j in range(i + 1, len(powers)):
            assert not (powers[i] & powers[j]).any()


def test_text_format_exact():
    m = np.array([[1, 0], [0, 1]], dtype=bool)
    assert boolmat.to_text(m) == "1 0\n0 1\n"
    assert boolmat.to_text(boolmat.zeros_matrix(0, 0)) == ""


@given(bool_matrices(min_rows=1, min_cols=1))
def test_text_roundtrip(m):
    assert np.array_equal(boolmat.from_text(boolmat.to_text(m)), m)


def test_from_text_rejects_garbage():
    with pytest.raises(ValueError):
        boolmat.from_text("1 2\n")
    with pytest.raises(ValueError):
        boolmat.from_text("1 0\n1\n")
