from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chiral_resolve.linalg import (Quotient, SparseMatrix, complement_basis, kernel_basis,
                                   quotient_dim, rank)
from oracles import naive_rank

entries = st.integers(-3, 3).map(Fraction) | st.fractions(min_value=-2, max_value=2, max_denominator=4)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    # bias towards sparse matrices with dependent rows
    data = [[draw(entries) if draw(st.booleans()) else Fraction(0) for _ in range(c)] for _ in range(r)]
    if r >= 2 and draw(st.booleans()):
        data[-1] = [a + 2 * b for a, b in zip(data[0], data[1])]
    return SparseMatrix(r, c, {(i, j): v for i, row in enumerate(data) for j, v in enumerate(row) if v})


def dense(m):
    return [[m.entries.get((i, j), Fraction(0)) for j in range(m.cols)] for i in range(m.rows)]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_naive_elimination(m):
    assert rank(m) == naive_rank(dense(m))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.cols
    for v in ker:
        image = m.apply({j: x for j, x in enumerate(v) if x})
        assert not image


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_complement_spans_with_image(m):
    comp = complement_basis(m.rows, m)
    assert len(comp) == quotient_dim(m.rows, m)
    cols = list(m.column_dicts()) + [{i: Fraction(1)} for i in comp]
    full = SparseMatrix.from_columns(m.rows, cols)
    assert rank(full) == m.rows


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_quotient_coords_are_linear_and_kill_relations(m):
    q = Quotient(m.rows, m.column_dicts())
    assert q.dim == m.rows - rank(m)
    for col in m.column_dicts():
        assert q.coords(col) == {}
        assert q.is_zero(col)
    # representatives map to the standard basis of the quotient
    for k, r in enumerate(q.representatives):
        assert q.coords({r: Fraction(1)}) == {k: Fraction(1)}


def test_complement_is_greedy_smallest_index():
    # image spanned by e0 + e1 and e2: scanning upwards keeps e0, then e1 and e2 are dependent
    m = SparseMatrix.from_columns(4, [{0: Fraction(1), 1: Fraction(1)}, {2: Fraction(1)}])
    assert complement_basis(4, m) == [0, 3]


def test_products_and_shapes():
    a = SparseMatrix.from_dense([[1, 2], [3, 4]])
    b = SparseMatrix.from_dense([[0, 1], [1, 0]])
    assert (a @ b).to_dense() == [[2, 1], [4, 3]]
    assert (a - a).is_zero()
    assert (a + a).to_dense() == a.scale(2).to_dense()
    assert a.transpose().to_dense() == [[1, 3], [2, 4]]
    with pytest.raises(ValueError):
        quotient_dim(3, a)


def test_kernel_of_zero_matrix_is_everything():
    z = SparseMatrix.zeros(2, 3)
    assert len(kernel_basis(z)) == 3
    assert rank(z) == 0
