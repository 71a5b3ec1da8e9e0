from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st
import pytest

from superlie import linalg

F = Fraction

small_matrix = st.lists(
    st.lists(st.integers(-3, 3).map(Fraction), min_size=4, max_size=4),
    min_size=1, max_size=5,
).map(lambda rows: [tuple(r) for r in rows])


def test_rref_example():
    rows = [(F(2), F(4), F(0)), (F(1), F(2), F(1))]
    red = linalg.rref(rows)
    assert red == [(F(1), F(2), F(0)), (F(0), F(0), F(1))]
    assert linalg.pivots(red) == [0, 2]
    assert linalg.rank(rows) == 2


def test_rref_drops_zero_rows():
    assert linalg.rref([(F(0), F(0))]) == []
    assert linalg.rref([]) == []


@given(small_matrix)
def test_rref_idempotent(rows):
    red = linalg.rref(rows)
    assert linalg.rref(red) == red


@given(small_matrix, st.randoms(use_true_random=False))
def test_rref_canonical_under_row_operations(rows, rng):
    shuffled = list(rows)
    rng.shuffle(shuffled)
    scaled = [linalg.vec_scale(F(rng.choice([1, 2, 3, -1])), r) for r in shuffled]
    assert linalg.rref(scaled) == linalg.rref(rows)


@given(small_matrix)
def test_nullspace_annihilates(rows):
    ns = linalg.nullspace(rows, 4)
    for v in ns:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) == 0
    assert len(ns) == 4 - linalg.rank(rows)


def test_reduce_mod_and_in_span():
    basis = linalg.rref([(F(1), F(0), F(1)), (F(0), F(1), F(1))])
    assert linalg.in_span((F(2), F(3), F(5)), basis)
    assert not linalg.in_span((F(0), F(0), F(1)), basis)
    resid = linalg.reduce_mod((F(2), F(3), F(5)), basis)
    assert linalg.is_zero(resid)


def test_invert_roundtrip():
    A = [(F(1), F(2)), (F(3), F(5))]
    Ainv = linalg.invert(A)
    n = len(A)
    for i in range(n):
        e = linalg.unit_vec(n, i)
        assert linalg.mat_vec(A, linalg.mat_vec(Ainv, e)) == e
        assert linalg.mat_vec(Ainv, linalg.mat_vec(A, e)) == e


def test_invert_singular():
    with pytest.raises(ValueError):
        linalg.invert([(F(1), F(2)), (F(2), F(4))])


def test_vector_helpers():
    a = (F(1), F(2))
    b = (F(3), F(-1))
    assert linalg.vec_add(a, b) == (F(4), F(1))
    assert linalg.vec_sub(a, b) == (F(-2), F(3))
    assert linalg.vec_scale(F(1, 2), a) == (F(1, 2), F(1))
    assert linalg.is_zero(linalg.zero_vec(3))
    assert linalg.unit_vec(3, 1) == (F(0), F(1), F(0))
