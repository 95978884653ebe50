from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chiral_resolve.poly import (ONE, T, WeightedPolynomial, d_graded_dim, expand_exp_X,
                                 mono_energy, monomials_of_energy, q_poly, tau_coefficients)
from oracles import count_partitions, exp_series_coefficients

F = Fraction
u = WeightedPolynomial.var


def test_frozen_low_T():
    # exp(u1 z + u2 z^3 / 3 + ...) by hand
    assert T(0) == ONE
    assert T(1) == u(1)
    assert T(2) == u(1) * u(1) * F(1, 2)
    assert T(3) == WeightedPolynomial({(1, 1, 1): F(1, 6), (2,): F(1, 3)})
    assert T(4) == WeightedPolynomial({(1, 1, 1, 1): F(1, 24), (1, 2): F(1, 3)})
    assert T(-1) == WeightedPolynomial()


def test_T_against_naive_exponential():
    naive = exp_series_coefficients(9)
    for n, expected in enumerate(naive):
        assert T(n).terms == expected, n


def test_T_is_homogeneous():
    for n, t in enumerate(expand_exp_X(12)):
        assert t.is_homogeneous(n)


@pytest.mark.parametrize("e", range(16))
def test_monomial_count_is_odd_partition_count(e):
    monos = monomials_of_energy(e)
    assert len(monos) == count_partitions(e, lambda p: p % 2 == 1) == d_graded_dim(e)
    assert all(mono_energy(m) == e for m in monos)
    assert len(set(monos)) == len(monos)


@pytest.mark.parametrize("e", range(16))
def test_odd_parts_equal_distinct_parts(e):
    # Euler: partitions into odd parts are equinumerous with partitions into distinct parts
    distinct = sum(1 for _ in _distinct(e, e))
    assert d_graded_dim(e) == distinct


def _distinct(n, top):
    if n == 0:
        yield ()
        return
    for p in range(min(n, top), 0, -1):
        for rest in _distinct(n - p, p - 1):
            yield (p,) + rest


def test_even_monomials():
    assert monomials_of_energy(4, "even") == ((1, 1), (2,))
    assert monomials_of_energy(3, "even") == ()
    with pytest.raises(ValueError):
        monomials_of_energy(2, "weird")


polys = st.dictionaries(
    st.lists(st.integers(1, 3), max_size=3).map(lambda l: tuple(sorted(l))),
    st.fractions(min_value=-3, max_value=3, max_denominator=3), max_size=4).map(WeightedPolynomial)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == WeightedPolynomial()


@given(polys, polys)
def test_derivative_is_a_derivation(a, b):
    for s in (1, 2, 3):
        assert (a * b).derivative(s) == a.derivative(s) * b + a * b.derivative(s)


def test_tau_and_q_polynomials():
    assert tau_coefficients(5) == [0, 1, -2, 1, -2, 1]
    # Q_{0,1} even: T_-2 T_0 - 2 T_-3 T_1 (T_1 = 0)
    assert q_poly("R", 0, 1) == T(2)
    assert q_poly("NS", 0, 1) == -2 * T(2) + T(1) * T(1)
    for l in range(1, 5):
        for n in range(4):
            assert q_poly("R", n, l).is_homogeneous(2 * l)
    with pytest.raises(ValueError):
        q_poly("R", 0, 0)


def test_text_rendering():
    p = WeightedPolynomial({(1, 1): F(1, 2), (2,): F(-1)})
    assert "u1^2" in p.to_text()
