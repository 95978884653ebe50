from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chiral_resolve.bosonfermion import (ChargedBosonElement, antisymmetric_integral_vanishes,
                                         h2l_apply, to_boson, vertex_mode_apply)
from chiral_resolve.checks import bf_check, oracle_check
from chiral_resolve.fock import FermionState, Sector, apply_mode, enumerate_basis, vacuum, vacuum_energy
from chiral_resolve.poly import ONE, WeightedPolynomial

v = WeightedPolynomial.var


def test_h_on_vacuum_and_low_states():
    assert h2l_apply(1, vacuum(Sector.R, 0)) == {}
    assert h2l_apply(2, FermionState(Sector.R, 0, (2,), (0,))) == {}
    # h_2 lowers the energy by 2, so from energy 4 only the energy-2 state can appear
    got = h2l_apply(1, FermionState(Sector.R, 0, (4,), (0,)))
    assert got == {FermionState(Sector.R, 0, (2,), (0,)): -1}
    with pytest.raises(ValueError):
        h2l_apply(0, vacuum(Sector.R, 0))


def test_vacua_map_to_exponentials():
    for sector in (Sector.R, Sector.NS):
        for c in range(-6 + sector.parity, 6, 2):
            b = to_boson(vacuum(sector, c))
            assert b.charge == c and b.polynomial == ONE


def test_first_excited_state():
    b = to_boson(FermionState(Sector.R, 0, (2,), (0,)))
    assert b.polynomial == -v(1)
    assert "v1" in b.to_text()


def test_vertex_modes_on_the_vacuum():
    vac = to_boson(vacuum(Sector.R, 0))
    assert vertex_mode_apply("c", 2, vac) == to_boson(vacuum(Sector.R, 2))
    for k in (2, 4, 6):
        assert not vertex_mode_apply("a", k, vac)
    with pytest.raises(ValueError):
        vertex_mode_apply("c", 1, vac)


@st.composite
def excited(draw):
    sector = draw(st.sampled_from([Sector.R, Sector.NS]))
    c = sector.parity + 2 * draw(st.integers(-2, 2))
    e = vacuum_energy(c) + 2 * draw(st.integers(0, 3))
    return draw(st.sampled_from(enumerate_basis(sector, c, e)))


@settings(max_examples=60, deadline=None)
@given(excited(), st.integers(-4, 4), st.sampled_from("ac"))
def test_square_commutes_on_random_states(state, a, kind):
    k = 2 * a + state.sector.parity
    r = apply_mode(kind, k, state)
    lhs = to_boson(r[1]).polynomial * r[0] if r else WeightedPolynomial()
    assert vertex_mode_apply(kind, k, to_boson(state)).polynomial == lhs


@pytest.mark.parametrize("sector", [Sector.R, Sector.NS])
def test_bf_check_small(sector):
    rep = bf_check(sector, max_energy=5)
    assert rep.passed, rep.summary()


@pytest.mark.parametrize("sector", [Sector.R, Sector.NS])
def test_integral_oracle_small(sector):
    rep = oracle_check(sector, max_energy=5)
    assert rep.passed, rep.summary()
    assert rep.parameters["scalar"] == "1"


def test_antisymmetric_integrals_vanish():
    for sector in (Sector.R, Sector.NS):
        for n in range(0, 8, 2):
            for r in (-2 + sector.parity, sector.parity, 2 + sector.parity):
                for c in (sector.parity, sector.parity + 2):
                    for e in range(vacuum_energy(c), vacuum_energy(c) + 7):
                        assert antisymmetric_integral_vanishes(sector, n, c, e, r)
    with pytest.raises(ValueError):
        antisymmetric_integral_vanishes(Sector.R, 1, 0, 0)
