"""Boson-fermion correspondence and the contour-integral form of (x-_0)^(2).

The bosonic Fock space of charge ``c`` is ``Q[v_1, v_2, ...] e^c`` where
``v_l`` is the even mode of energy ``2l`` (``v_l`` plays the role of
``b~_{-2l}``; its dual ``b~_{2l}`` acts as ``d/dv_l``).  A fermion state
``a|c>`` is sent to the vacuum coefficient of ``exp(H) a|c>``, with
``H = sum_l v_l h_2l`` and ``h_2l = sum_n psi_n psi*_{n-2l}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .fock import FermionState, Sector, add_into, apply_mode, as_sector, vacuum, vacuum_energy
from .graded import GradedOperator, piece
from .linalg import SparseMatrix
from .poly import ONE, ZERO, T, WeightedPolynomial, even_weight, monomials_of_energy, tau_coefficients


@dataclass(frozen=True)
class ChargedBosonElement:
    """``polynomial * e^charge`` with the polynomial in the even modes ``v_l``."""

    sector: Sector
    charge: int
    polynomial: WeightedPolynomial

    def __bool__(self) -> bool:
        return bool(self.polynomial)

    def energy_set(self) -> set[int]:
        base = vacuum_energy(self.charge)
        return {base + e for e in self.polynomial.energies(even_weight)}

    def to_text(self) -> str:
        return f"({self.polynomial.to_text('v', even_weight)}) e^{{{self.charge}}}"


def h2l_apply(l: int, elem) -> dict:
    """Apply ``h_2l = sum_n psi_n psi*_{n-2l}`` to a state or a linear combination."""
    if l < 1:
        raise ValueError("l must be >= 1")
    if isinstance(elem, FermionState):
        elem = {elem: Fraction(1)}
    out: dict = {}
    for st, c in elem.items():
        top = st.highest_occupied()
        j = st.lowest_empty()
        while j <= top:
            if not st.occupied(j):
                r1 = apply_mode("c", j, st)
                if r1 is not None:
                    s1, mid = r1
                    r2 = apply_mode("a", j + 2 * l, mid)
                    if r2 is not None:
                        s2, new = r2
                        add_into(out, new, c if s1 * s2 > 0 else -c)
            j += 2
    return out


@lru_cache(maxsize=None)
def to_boson(s: FermionState) -> ChargedBosonElement:
    """Image of a fermion basis state in the bosonic Fock space."""
    excess = s.energy - vacuum_energy(s.charge)
    vac = vacuum(s.sector, s.charge)
    terms: dict = {}
    for mono in monomials_of_energy(excess, "even"):
        cur: dict = {s: Fraction(1)}
        for l in mono:
            cur = h2l_apply(l, cur)
            if not cur:
                break
        c = cur.get(vac)
        if c:
            denom = 1
            for l in set(mono):
                denom *= factorial(mono.count(l))
            terms[mono] = Fraction(c) / denom
    return ChargedBosonElement(s.sector, s.charge, WeightedPolynomial(terms))


def to_boson_elem(elem: dict, sector, charge: int) -> ChargedBosonElement:
    acc = ZERO
    for st, c in elem.items():
        acc = acc + to_boson(st).polynomial * c
    return ChargedBosonElement(as_sector(sector), charge, acc)


def _mult_series(sign: int, top: int) -> list[WeightedPolynomial]:
    """Coefficients of ``exp(sign * sum_n v_n w^n)`` up to ``w^top``."""
    out = [ONE]
    for a in range(1, top + 1):
        acc = ZERO
        for n in range(1, a + 1):
            acc = acc + WeightedPolynomial.var(n, sign * n) * out[a - n]
        out.append(acc * Fraction(1, a))
    return out


def _deriv_series(sign: int, p: WeightedPolynomial, top: int) -> list[WeightedPolynomial]:
    """``D_b p`` for ``exp(sign * sum_n (d/dv_n) w^-n / n) = sum_b D_b w^-b``."""
    out = [p]
    for b in range(1, top + 1):
        acc = ZERO
        for n in range(1, b + 1):
            prev = out[b - n]
            if prev:
                acc = acc + prev.derivative(n) * sign
        out.append(acc * Fraction(1, b))
    return out


def vertex_mode_apply(kind: str, mode_index: int, e: ChargedBosonElement) -> ChargedBosonElement:
    """Mode of the bosonised field on ``P e^c``.

    ``psi(z) = exp(sum v_n z^2n) exp(-sum d_n z^-2n / n) e^-alpha z^-d`` with
    ``psi_k`` the coefficient of ``z^-k``; ``psi*(z)`` is the conjugate field
    with ``psi*_k`` the coefficient of ``z^k``.
    """
    if mode_index % 2 != e.sector.parity:
        raise ValueError(f"mode {mode_index} has wrong parity for sector {e.sector.value}")
    c = e.charge
    degs = e.polynomial.energies(even_weight)
    top_b = max(degs) // 2 if degs else 0
    if kind == "a":
        shift = (c - mode_index) // 2          # a = b + shift
        new_charge = c - 2
        msign, dsign = 1, -1
    elif kind == "c":
        shift = (mode_index - c - 2) // 2
        new_charge = c + 2
        msign, dsign = -1, 1
    else:
        raise ValueError(f"unknown kind {kind!r}")
    dser = _deriv_series(dsign, e.polynomial, top_b)
    need = max(0, top_b + shift)
    mser = _mult_series(msign, need)
    acc = ZERO
    for b, db in enumerate(dser):
        a = b + shift
        if a < 0 or not db:
            continue
        acc = acc + mser[a] * db
    return ChargedBosonElement(e.sector, new_charge, acc)


# ---------------------------------------------------------------------------
# double contour integral for the divided square

def _x2_integral_action(sector: Sector):
    tau_cache: dict[int, list[int]] = {}

    def tau(j: int) -> int:
        if j not in tau_cache:
            tau_cache[j] = tau_coefficients(j)
        return tau_cache[j][j]

    def act(st: FermionState):
        out: dict = {}
        # psi(z1) psi(z2) = sum psi_k1 psi_k2 z1^-k1 z2^-k2; residue forces
        # T_-a T_-b with a = k1 - 1 + j, b = k2 - 1 - j, j >= 1 from tau(z2/z1).
        for k2 in st.occupied_modes_above(0):
            r2 = apply_mode("a", k2, st)
            if r2 is None:
                continue
            s2, mid = r2
            for k1 in mid.occupied_modes_above(-k2):
                coeff = ZERO
                for j in range(max(1, 1 - k1), k2):
                    coeff = coeff + T(k1 - 1 + j) * T(k2 - 1 - j) * tau(j)
                if not coeff:
                    continue
                r1 = apply_mode("a", k1, mid)
                if r1 is None:
                    continue
                s1, new = r1
                add_into(out, new, coeff if s1 * s2 > 0 else -coeff)
        return out
    return act


@lru_cache(maxsize=None)
def x2_integral(sector) -> GradedOperator:
    sector = as_sector(sector)
    return GradedOperator("x2-integral", sector, -4, _x2_integral_action(sector))


def integral_oracle_x2(sector, charge: int, energy: int) -> SparseMatrix:
    """Matrix of the double-contour expression for ``(x-_0)^(2)`` (prefactor dropped)."""
    return x2_integral(sector).matrix(charge, energy)


def antisymmetric_integral_vanishes(sector, n: int, charge: int, energy: int, r: int | None = None) -> bool:
    """Check that ``(z1^n + z2^n) psi(z1) psi(z2)`` has zero residue on a bare piece.

    With ``psi(z) = sum psi_k z^-k`` the coefficient of ``z1^-r z2^-r`` is
    ``psi_(n+r) psi_r + psi_r psi_(n+r)``.  ``n`` must be even so that both
    modes lie in the sector; ``r`` defaults to the smallest non-negative
    mode of the sector.
    """
    sector = as_sector(sector)
    if n % 2:
        raise ValueError("n must be even")
    r = sector.parity if r is None else r
    src = piece(sector, charge, energy, with_d=False)
    for _, st in src.basis:
        out: dict = {}
        for k1, k2 in ((n + r, r), (r, n + r)):
            r2 = apply_mode("a", k2, st)
            if r2 is None:
                continue
            s2, mid = r2
            r1 = apply_mode("a", k1, mid)
            if r1 is None:
                continue
            s1, new = r1
            add_into(out, new, Fraction(s1 * s2))
        if out:
            return False
    return True
