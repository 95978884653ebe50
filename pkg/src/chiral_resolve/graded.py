"""Graded pieces of D (x) Fock spaces and energy-homogeneous operators on them.

A piece is fixed by (sector, charge, energy) and, optionally, a named
subspace filter.  Its basis is the list of pairs (u-monomial, state) whose
energies add up to the piece energy, ordered by monomial energy, monomial
and state.  Pieces built with ``with_d=False`` hold bare Fock states only
(the abstract tilde-label spaces).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .fock import FermionState, Sector, as_sector, enumerate_basis
from .linalg import SparseMatrix
from .poly import ONE, WeightedPolynomial, mono_energy, mono_mul, monomials_of_energy

Action = Callable[[FermionState], Mapping[FermionState, WeightedPolynomial]]


def mode1_occupied(st: FermionState) -> bool:
    """Odd-sector subspace on which the tilde mode 1 is still filled (no psi~_1 applied)."""
    return st.occupied(1)


def mode1_empty(st: FermionState) -> bool:
    return not st.occupied(1)


FILTERS: dict[str, Callable[[FermionState], bool]] = {
    "all": lambda st: True,
    "mode1": mode1_occupied,
    "nomode1": mode1_empty,
}


def holes_at_or_below_zero(st: FermionState) -> tuple[int, ...]:
    """Empty modes ``<= 0``; labels the Koszul summands of the even sector."""
    L, s = st.occupation()
    return tuple(k for k in range(L + 2, 1, 2) if k not in s)


def register_filter(name: str, pred: Callable[[FermionState], bool]) -> str:
    FILTERS.setdefault(name, pred)
    return name


def states(sector, charge: int, energy: int, filt: str = "all") -> tuple[FermionState, ...]:
    pred = FILTERS[filt]
    return tuple(s for s in enumerate_basis(sector, charge, energy) if pred(s))


class GradedPiece:
    def __init__(self, sector, charge: int, energy: int, with_d: bool = True, filt: str = "all"):
        self.sector = as_sector(sector)
        self.charge = charge
        self.energy = energy
        self.with_d = with_d
        self.filt = filt
        basis = []
        if with_d:
            for e in range(energy + 1):
                sts = states(self.sector, charge, energy - e, filt)
                if not sts:
                    continue
                for mono in monomials_of_energy(e):
                    for st in sts:
                        basis.append((mono, st))
        else:
            basis = [((), st) for st in states(self.sector, charge, energy, filt)]
        self.basis: list[tuple[tuple, FermionState]] = basis
        self.index = {b: i for i, b in enumerate(basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def vector(self, elem: Mapping[FermionState, WeightedPolynomial], mono: tuple = (),
               strict: bool = True) -> dict[int, Fraction]:
        """Coordinates of ``mono * elem`` in this piece."""
        out: dict[int, Fraction] = {}
        for st, poly in elem.items():
            terms = poly.terms if isinstance(poly, WeightedPolynomial) else {(): Fraction(poly)}
            for m, c in terms.items():
                key = (mono_mul(mono, m), st)
                i = self.index.get(key)
                if i is None:
                    if strict:
                        raise KeyError(f"{key} is not in piece {self!r}")
                    continue
                out[i] = out.get(i, 0) + c
        return {k: v for k, v in out.items() if v}

    def element(self, vec: Mapping[int, Fraction]) -> dict[FermionState, WeightedPolynomial]:
        out: dict[FermionState, dict] = {}
        for i, c in vec.items():
            mono, st = self.basis[i]
            out.setdefault(st, {})
            out[st][mono] = out[st].get(mono, 0) + c
        return {st: WeightedPolynomial(t) for st, t in out.items() if WeightedPolynomial(t)}

    def __repr__(self) -> str:
        return (f"GradedPiece({self.sector.value}, charge={self.charge}, energy={self.energy}, "
                f"with_d={self.with_d}, filt={self.filt!r}, dim={self.dim})")


@lru_cache(maxsize=None)
def piece(sector, charge: int, energy: int, with_d: bool = True, filt: str = "all") -> GradedPiece:
    return GradedPiece(as_sector(sector), charge, energy, with_d, filt)


class GradedOperator:
    """A D-linear, energy-preserving operator given by its action on bare states.

    Matrices are materialised per (source charge, energy) and cached.
    """

    def __init__(self, name: str, sector, charge_shift: int, action: Action):
        self.name = name
        self.sector = as_sector(sector)
        self.charge_shift = charge_shift
        self._action = action
        self._state_cache: dict[FermionState, dict] = {}
        self._matrix_cache: dict[tuple, SparseMatrix] = {}
        self._lock = threading.Lock()

    def act(self, st: FermionState) -> dict[FermionState, WeightedPolynomial]:
        hit = self._state_cache.get(st)
        if hit is None:
            hit = dict(self._action(st))
            with self._lock:
                self._state_cache[st] = hit
        return hit

    def apply(self, elem: Mapping[FermionState, WeightedPolynomial]) -> dict:
        out: dict[FermionState, WeightedPolynomial] = {}
        for st, c in elem.items():
            if not isinstance(c, WeightedPolynomial):
                c = WeightedPolynomial.const(c)
            for st2, p in self.act(st).items():
                v = out.get(st2)
                v = c * p if v is None else v + c * p
                if v:
                    out[st2] = v
                else:
                    out.pop(st2, None)
        return out

    def images(self, src: GradedPiece, dst: GradedPiece) -> list[dict[int, Fraction]]:
        cols = []
        for mono, st in src.basis:
            cols.append(dst.vector(self.act(st), mono))
        return cols

    def matrix(self, charge: int, energy: int, with_d: bool = True,
               src_filt: str = "all", dst_filt: str = "all") -> SparseMatrix:
        key = (charge, energy, with_d, src_filt, dst_filt)
        hit = self._matrix_cache.get(key)
        if hit is not None:
            return hit
        src = piece(self.sector, charge, energy, with_d, src_filt)
        dst = piece(self.sector, charge + self.charge_shift, energy, with_d, dst_filt)
        m = SparseMatrix.from_columns(dst.dim, self.images(src, dst))
        m = SparseMatrix(dst.dim, src.dim, m.entries)
        with self._lock:
            self._matrix_cache[key] = m
        return m

    def __repr__(self) -> str:
        return f"GradedOperator({self.name!r}, {self.sector.value}, shift={self.charge_shift})"


def multiplication_images(src: GradedPiece, dst: GradedPiece, poly: WeightedPolynomial):
    """Images of the basis of ``src`` under multiplication by ``poly``."""
    cols = []
    for mono, st in src.basis:
        cols.append(dst.vector({st: poly}, mono))
    return cols


def d_energy(mono: tuple) -> int:
    return mono_energy(mono)


__all__ = [
    "GradedPiece", "GradedOperator", "piece", "states", "FILTERS", "register_filter",
    "holes_at_or_below_zero", "multiplication_images", "ONE",
]
