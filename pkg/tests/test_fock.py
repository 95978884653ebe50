from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chiral_resolve.characters import euler_inv
from chiral_resolve.fock import (FermionState, Sector, apply_mode, as_sector, enumerate_basis,
                                 vacuum, vacuum_energy)
from oracles import maya_states, shifted_product

SECTORS = (Sector.R, Sector.NS)


def occupation_above(st, lo, hi):
    return frozenset(k for k in range(lo, hi + 1) if k % 2 == st.sector.parity and st.occupied(k))


@pytest.mark.parametrize("sector", SECTORS)
@pytest.mark.parametrize("offset", [-4, -2, 0, 2, 4])
def test_basis_matches_maya_enumeration(sector, offset):
    c = sector.parity + offset
    for e in range(vacuum_energy(c), vacuum_energy(c) + 11):
        oracle = maya_states(c, e, sector.parity)
        got = enumerate_basis(sector, c, e)
        assert len(got) == len(oracle)
        if oracle:
            lo = min(min(s) for s in oracle)
            hi = max(max(s) for s in oracle)
            assert {occupation_above(st, lo, hi) for st in got} == set(oracle)
        assert all(st.energy == e for st in got)


@pytest.mark.parametrize("m", range(3))
def test_even_basis_counts_are_the_label_character(m):
    ref = shifted_product(m * m, None, 2, 12)
    assert [len(enumerate_basis(Sector.R, 2 * m, e)) for e in range(13)] == ref
    assert ref == euler_inv(2, 12).shift(m * m).to_list()


def test_vacuum_relation_sign():
    for sector in SECTORS:
        for m in range(-3, 4):
            c = 2 * m + sector.parity
            assert apply_mode("c", c, vacuum(sector, c - 2)) == (1, vacuum(sector, c))
            assert apply_mode("a", c, vacuum(sector, c)) == (1, vacuum(sector, c - 2))


def test_vacuum_energies():
    assert [vacuum_energy(c) for c in range(-3, 6)] == [2, 1, 0, 0, 0, 1, 2, 4, 6]


def test_state_validation():
    with pytest.raises(ValueError):
        FermionState(Sector.R, 1)
    with pytest.raises(ValueError):
        FermionState(Sector.R, 0, (2,), ())
    with pytest.raises(ValueError):
        FermionState(Sector.R, 0, (0,), (0,))
    with pytest.raises(ValueError):
        apply_mode("c", 1, vacuum(Sector.R, 0))
    with pytest.raises(ValueError):
        as_sector("mixed")
    assert as_sector("even") is Sector.R and as_sector("NS") is Sector.NS


def _apply(kind, k, elem):
    out = {}
    for s, c in elem.items():
        r = apply_mode(kind, k, s)
        if r:
            out[r[1]] = out.get(r[1], 0) + c * r[0]
    return {s: c for s, c in out.items() if c}


def _anti(k1, i, k2, j, st):
    a = _apply(k1, i, _apply(k2, j, {st: 1}))
    b = _apply(k2, j, _apply(k1, i, {st: 1}))
    for s, c in b.items():
        a[s] = a.get(s, 0) + c
    return {s: c for s, c in a.items() if c}


@st.composite
def states(draw):
    sector = draw(st.sampled_from(SECTORS))
    c = sector.parity + 2 * draw(st.integers(-2, 2))
    e = draw(st.integers(vacuum_energy(c), vacuum_energy(c) + 8))
    basis = enumerate_basis(sector, c, e)
    if not basis:
        return vacuum(sector, c)
    return draw(st.sampled_from(basis))


@settings(max_examples=200, deadline=None)
@given(states(), st.integers(-5, 5), st.integers(-5, 5))
def test_canonical_anticommutation(st_, a, b):
    p = st_.sector.parity
    i, j = 2 * a + p, 2 * b + p
    assert _anti("a", i, "c", j, st_) == ({st_: 1} if i == j else {})
    assert _anti("a", i, "a", j, st_) == {}
    assert _anti("c", i, "c", j, st_) == {}


@settings(max_examples=200, deadline=None)
@given(states(), st.integers(-6, 6), st.sampled_from("ac"))
def test_modes_shift_energy(st_, a, kind):
    k = 2 * a + st_.sector.parity
    r = apply_mode(kind, k, st_)
    if r:
        shift = (k - 1) if kind == "c" else -(k - 1)
        assert r[1].energy == st_.energy + shift
        assert r[1].charge == st_.charge + (2 if kind == "c" else -2)


def test_text():
    s = FermionState(Sector.R, 0, (2,), (0,))
    assert s.to_text() == "psi*_2 psi_0 |0>"
    assert s.to_text(tilde=True) == "psi~*_2 psi~_0 |0>"
