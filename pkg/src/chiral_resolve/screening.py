"""Screening operators x-_0 and (x-_0)^(2), the tilde-fermion basis change and sl2.

Conventions
-----------
Global complex prefactors are dropped: every ``x2`` operator here is the
divided square with its ``-i/2`` removed, so in tilde coordinates it reads
``sum_n psi~_{alpha(n)} psi~_{beta(n)} = -omega``.  No rank, kernel or
quotient depends on a non-zero scalar.

Mode bookkeeping used throughout (``n >= 1``):

=======  ==============  =================
sector   alpha(n)        beta(n)
=======  ==============  =================
R        ``2 - 2n``      ``2n``
NS       ``1 - 2n``      ``2n + 1``
=======  ==============  =================

``omega = -sum psi~_alpha psi~_beta``, ``eta = sum psi~*_alpha psi~*_beta`` and
``xi = -sum psi~_alpha psi~*_alpha + sum psi~*_beta psi~_beta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .fock import FermionState, Sector, _state_from_occupation, add_into, apply_mode, as_sector
from .graded import GradedOperator
from .linalg import SparseMatrix
from .poly import ONE, ZERO, T, WeightedPolynomial, q_poly

X2_PREFACTOR = "-i/2"  # symbolic; dropped from every matrix


def alpha_mode(sector, n: int) -> int:
    return (2 - 2 * n) if as_sector(sector) is Sector.R else (1 - 2 * n)


def beta_mode(sector, n: int) -> int:
    return 2 * n if as_sector(sector) is Sector.R else 2 * n + 1


def _poly_apply(acc: dict, kind: str, k: int, st: FermionState, coeff: WeightedPolynomial) -> None:
    r = apply_mode(kind, k, st)
    if r is not None:
        sign, new = r
        add_into(acc, new, coeff if sign > 0 else -coeff)


# ---------------------------------------------------------------------------
# component forms on D (x) H

def _xminus0_action(sector: Sector):
    first = 2 if sector is Sector.R else 1   # lowest mode appearing

    def act(st: FermionState):
        out: dict = {}
        for k in st.occupied_modes_above(first - 2):
            coeff = T(k - 1)   # R: T_-(2n-1) psi_2n ; NS: T_-2n psi_2n+1
            _poly_apply(out, "a", k, st, coeff)
        return out
    return act


@lru_cache(maxsize=None)
def xminus0(sector) -> GradedOperator:
    """``x-_0`` in component form: charge -2."""
    sector = as_sector(sector)
    return GradedOperator("x-0", sector, -2, _xminus0_action(sector))


def _x2_component_action(sector: Sector):
    lead = Fraction(1) if sector is Sector.R else Fraction(-2)

    def act(st: FermionState):
        out: dict = {}
        for k in st.occupied_modes_above(0):   # psi_beta(n), beta >= 2 (R) or >= 3 (NS)
            n = k // 2
            if n < 1:
                continue
            r = apply_mode("a", k, st)
            if r is None:
                continue
            sign, mid = r
            i = alpha_mode(sector, n)
            for j in mid.occupied_modes_above(i - 2):
                l = (j - i) // 2
                coeff = WeightedPolynomial.const(lead) if l == 0 else q_poly(sector.label, n - 1, l)
                if sign < 0:
                    coeff = -coeff
                _poly_apply(out, "a", j, mid, coeff)
        return out
    return act


@lru_cache(maxsize=None)
def xminus0_sq(sector) -> GradedOperator:
    """``(x-_0)^(2)`` in component form without its prefactor: charge -4."""
    sector = as_sector(sector)
    return GradedOperator("(x-0)^(2)", sector, -4, _x2_component_action(sector))


def xminus0_matrix(sector, charge: int, energy: int) -> SparseMatrix:
    return xminus0(sector).matrix(charge, energy)


def xminus0_sq_matrix(sector, charge: int, energy: int) -> SparseMatrix:
    return xminus0_sq(sector).matrix(charge, energy)


# ---------------------------------------------------------------------------
# basis change psi~_i = sum_j B_ij psi_j, psi~*_i = sum_j C_ij psi*_j, C = (B^-1)^T

def b_entry(sector, i: int, j: int) -> WeightedPolynomial:
    sector = as_sector(sector)
    if (j - i) % 2:
        raise ValueError("mode indices of different parity")
    positive = i >= 2 if sector is Sector.R else i >= 1
    if positive:
        return ONE if i == j else ZERO
    if j < i:
        return ZERO
    l = (j - i) // 2
    if sector is Sector.R:
        n = -i // 2
        return ONE if l == 0 else q_poly("even", n, l)
    n = (-i - 1) // 2
    return WeightedPolynomial.const(-2) if l == 0 else q_poly("odd", n, l)


@lru_cache(maxsize=None)
def b_inverse_entry(sector, i: int, j: int) -> WeightedPolynomial:
    """``(B^-1)_ij`` by back substitution; upper triangular like ``B``."""
    sector = as_sector(sector)
    if j < i:
        return ZERO
    diag = b_entry(sector, i, i).terms[()]
    acc = ONE if i == j else ZERO
    for k in range(i + 2, j + 1, 2):
        bik = b_entry(sector, i, k)
        if bik:
            acc = acc - bik * b_inverse_entry(sector, k, j)
    return acc * (1 / diag)


def c_entry(sector, i: int, j: int) -> WeightedPolynomial:
    return b_inverse_entry(sector, j, i)


@dataclass(frozen=True)
class BasisChange:
    sector: Sector
    modes: tuple[int, ...]
    B: dict
    C: dict


def build_basis_change(sector, mode_cutoff: int, energy_cutoff: int) -> BasisChange:
    """Truncated ``B`` and ``C`` on modes ``|k| <= mode_cutoff``, entries of energy <= cutoff.

    Entry ``(i, j)`` has energy ``j - i`` and is kept when that energy is
    within ``energy_cutoff``.
    """
    if mode_cutoff < 1 or energy_cutoff < 1:
        raise ValueError("cutoffs must be >= 1")
    sector = as_sector(sector)
    p = sector.parity
    modes = tuple(k for k in range(-mode_cutoff, mode_cutoff + 1) if k % 2 == p)
    B, C = {}, {}
    for i in modes:
        for j in modes:
            if abs(j - i) > energy_cutoff:
                continue
            b = b_entry(sector, i, j) if j >= i else ZERO
            if b:
                B[(i, j)] = b
            c = c_entry(sector, i, j)
            if c:
                C[(i, j)] = c
    return BasisChange(sector, modes, B, C)


def tilde_mode_elem(kind: str, k: int, elem: dict, sector) -> dict:
    """Apply ``psi~_k`` or ``psi~*_k`` to an element of D (x) H."""
    sector = as_sector(sector)
    out: dict = {}
    for st, coeff in elem.items():
        if not isinstance(coeff, WeightedPolynomial):
            coeff = WeightedPolynomial.const(coeff)
        if kind == "a":
            for j in st.occupied_modes_above(k - 2):
                b = b_entry(sector, k, j)
                if b:
                    _poly_apply(out, "a", j, st, coeff * b)
        else:
            j = st.lowest_empty()
            while j <= k:
                if not st.occupied(j):
                    c = b_inverse_entry(sector, j, k)
                    if c:
                        _poly_apply(out, "c", j, st, coeff * c)
                j += 2
    return out


def reference_charge(sector) -> int:
    return 0 if as_sector(sector) is Sector.R else 1


def tilde_vacuum_scale(sector, charge: int) -> Fraction:
    """``|c>~ = scale * |c>`` when tilde vacua are built from the reference vacuum.

    Below the reference charge ``|c>~ = psi~_{c+2} |c+2>~`` picks up the
    diagonal entry of ``B``; above it the diagonal is 1.
    """
    sector = as_sector(sector)
    out = Fraction(1)
    for k in range(charge + 2, reference_charge(sector) + 1, 2):
        out *= b_entry(sector, k, k).terms[()]
    return out


@lru_cache(maxsize=None)
def tilde_embed(t: FermionState) -> dict:
    """Expand a tilde basis state (same labels as ``FermionState``) inside D (x) H."""
    elem = {FermionState(t.sector, t.charge): WeightedPolynomial.const(tilde_vacuum_scale(t.sector, t.charge))}
    word = [("c", k) for k in t.creators] + [("a", k) for k in t.annihilators]
    for kind, k in reversed(word):
        elem = tilde_mode_elem(kind, k, elem, t.sector)
    return elem


# ---------------------------------------------------------------------------
# operators on abstract tilde labels

def _label_action(sector: Sector, terms):
    """``terms``: list of (coefficient polynomial, word) with the word acting right to left."""
    def act(st: FermionState):
        out: dict = {}
        for coeff, word in terms(st):
            cur = {st: coeff}
            for kind, k in reversed(word):
                nxt: dict = {}
                for s, c in cur.items():
                    _poly_apply(nxt, kind, k, s, c)
                cur = nxt
                if not cur:
                    break
            for s, c in cur.items():
                add_into(out, s, c)
        return out
    return act


def _n_range(st: FermionState, sector: Sector, N: int | None):
    """``n`` values for which ``psi~_beta(n)`` can act on ``st`` (bounded by ``N``)."""
    top = st.highest_occupied()
    n = 1
    while beta_mode(sector, n) <= top and (N is None or n <= N):
        yield n
        n += 1


@lru_cache(maxsize=None)
def omega_op(sector, N: int | None = None) -> GradedOperator:
    """``omega = -sum psi~_alpha(n) psi~_beta(n)``; truncated to ``n <= N`` when given."""
    sector = as_sector(sector)
    minus = WeightedPolynomial.const(-1)

    def terms(st):
        for n in _n_range(st, sector, N):
            yield minus, [("a", alpha_mode(sector, n)), ("a", beta_mode(sector, n))]
    name = "omega" if N is None else f"omega_{N}"
    return GradedOperator(name, sector, -4, _label_action(sector, terms))


@lru_cache(maxsize=None)
def eta_op(sector, N: int) -> GradedOperator:
    sector = as_sector(sector)

    def terms(st):
        for n in range(1, N + 1):
            yield ONE, [("c", alpha_mode(sector, n)), ("c", beta_mode(sector, n))]
    return GradedOperator(f"eta_{N}", sector, 4, _label_action(sector, terms))


@lru_cache(maxsize=None)
def xi_op(sector, N: int) -> GradedOperator:
    sector = as_sector(sector)
    minus = WeightedPolynomial.const(-1)

    def terms(st):
        for n in range(1, N + 1):
            a, b = alpha_mode(sector, n), beta_mode(sector, n)
            yield minus, [("a", a), ("c", a)]
            yield ONE, [("c", b), ("a", b)]
    return GradedOperator(f"xi_{N}", sector, 0, _label_action(sector, terms))


@lru_cache(maxsize=None)
def xminus0_tilde(sector) -> GradedOperator:
    """``x-_0 = sum t psi~`` on D (x) tilde labels (R: T_-(2n-1) psi~_2n; NS: T_-2n psi~_2n+1)."""
    sector = as_sector(sector)
    first = 2 if sector is Sector.R else 1

    def terms(st):
        for k in st.occupied_modes_above(first - 2):
            yield T(k - 1), [("a", k)]
    return GradedOperator("x-0~", sector, -2, _label_action(sector, terms))


@lru_cache(maxsize=None)
def x2_tilde(sector) -> GradedOperator:
    """Divided square in tilde form without prefactor: ``sum psi~_alpha psi~_beta = -omega``."""
    sector = as_sector(sector)

    def terms(st):
        for n in _n_range(st, sector, None):
            yield ONE, [("a", alpha_mode(sector, n)), ("a", beta_mode(sector, n))]
    return GradedOperator("x2~", sector, -4, _label_action(sector, terms))


def omega_eta_xi_matrices(sector, N: int, charge: int, energy: int):
    """Matrices of ``omega_N``, ``eta_N``, ``xi_N`` on tilde-label pieces of a given charge.

    Sources are the label piece ``(charge, energy)``; targets are the pieces of
    charge ``charge - 4``, ``charge + 4`` and ``charge``.
    """
    return (omega_op(sector, N).matrix(charge, energy, with_d=False),
            eta_op(sector, N).matrix(charge, energy, with_d=False),
            xi_op(sector, N).matrix(charge, energy, with_d=False))


# ---------------------------------------------------------------------------
# window truncations for the sl2 triple

def window_states(sector, N: int) -> list[FermionState]:
    """Basis of the truncated space: modes outside the alpha/beta window as in ``|0>`` (R) or ``|1>`` (NS).

    Window modes are ``alpha(1..N)`` and ``beta(1..N)``; for NS the mode 1 stays filled.
    """
    sector = as_sector(sector)
    base = 0 if sector is Sector.R else 1
    alphas = [alpha_mode(sector, n) for n in range(1, N + 1)]
    betas = [beta_mode(sector, n) for n in range(1, N + 1)]
    out = []
    for ka in range(N + 1):
        for holes in combinations(sorted(alphas), ka):
            for kb in range(N + 1):
                for parts in combinations(sorted(betas), kb):
                    charge = base + 2 * (kb - ka)
                    L = min([base] + [h - 2 for h in holes])
                    s = {k for k in range(L + 2, base + 1, 2) if k not in holes} | set(parts)
                    out.append(_state_from_occupation(sector, charge, L, frozenset(s)))
    return sorted(set(out), key=lambda st: (st.charge, st.energy, st.sort_key()))
