"""Neveu-Schwarz and Ramond free-fermion Fock spaces.

A basis state is the normal-ordered word

    psi*_{c1} ... psi*_{cp} psi_{a1} ... psi_{ap} |charge>

with ``c1 < ... < cp`` above the charge and ``a1 < ... < ap`` at or below
it.  Signs are computed by passing through the semi-infinite wedge picture
in which ``|m>`` is the descending wedge of all modes ``<= m`` and
``psi*_k``, ``psi_k`` insert or remove ``e_k`` with sign ``(-1)^(number of
occupied modes above k)``.  This realises the vacuum relation
``psi*_m |m-2> = |m>`` with sign ``+1``.

Energies (minus the degree): ``psi*_k`` adds ``k - 1``, ``psi_k`` removes
``k - 1`` and ``|c>`` has energy ``floor(c^2 / 4)``, i.e. ``m^2`` for
``c = 2m`` and ``m^2 + m`` for ``c = 2m + 1``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping


class Sector(str, Enum):
    R = "R"    # even mode indices, weight lattice i = 0
    NS = "NS"  # odd mode indices, weight lattice i = 1

    @property
    def parity(self) -> int:
        return 0 if self is Sector.R else 1

    @property
    def label(self) -> str:
        return "even" if self is Sector.R else "odd"


def as_sector(s) -> Sector:
    """Accept ``Sector``, ``"R"``/``"NS"`` or ``"even"``/``"odd"``."""
    if isinstance(s, Sector):
        return s
    key = str(s).strip()
    aliases = {"R": Sector.R, "even": Sector.R, "NS": Sector.NS, "odd": Sector.NS}
    try:
        return aliases[key]
    except KeyError:
        raise ValueError(f"unknown sector {s!r}") from None


def vacuum_energy(charge: int) -> int:
    return (charge * charge) // 4


def mode_energy(kind: str, k: int) -> int:
    """Energy change caused by ``psi*_k`` (``kind='c'``) or ``psi_k`` (``kind='a'``)."""
    return (k - 1) if kind == "c" else -(k - 1)


@dataclass(frozen=True, order=True)
class FermionState:
    sector: Sector
    charge: int
    creators: tuple[int, ...] = ()
    annihilators: tuple[int, ...] = ()

    def __post_init__(self):
        p = self.sector.parity
        if self.charge % 2 != p:
            raise ValueError(f"charge {self.charge} has wrong parity for {self.sector.value}")
        if len(self.creators) != len(self.annihilators):
            raise ValueError("creators and annihilators must have equal length")
        for k in self.creators + self.annihilators:
            if k % 2 != p:
                raise ValueError(f"mode {k} has wrong parity for {self.sector.value}")
        if any(a >= b for a, b in zip(self.creators, self.creators[1:])):
            raise ValueError("creators must be strictly increasing")
        if any(a >= b for a, b in zip(self.annihilators, self.annihilators[1:])):
            raise ValueError("annihilators must be strictly increasing")
        if self.creators and self.creators[0] <= self.charge:
            raise ValueError("creator index must lie above the charge")
        if self.annihilators and self.annihilators[-1] > self.charge:
            raise ValueError("annihilator index must not exceed the charge")

    @property
    def energy(self) -> int:
        e = vacuum_energy(self.charge)
        e += sum(k - 1 for k in self.creators)
        e -= sum(k - 1 for k in self.annihilators)
        return e

    def sort_key(self):
        return (self.creators, self.annihilators)

    def occupied(self, k: int) -> bool:
        if k > self.charge:
            return k in self.creators
        return k not in self.annihilators

    def occupation(self) -> tuple[int, frozenset]:
        """``(L, S)``: every mode ``<= L`` is filled, ``S`` lists occupied modes above ``L``."""
        L = self.charge
        if self.annihilators:
            L = min(L, self.annihilators[0] - 2)
        holes = set(self.annihilators)
        s = {k for k in range(L + 2, self.charge + 1, 2) if k not in holes}
        s.update(self.creators)
        return L, frozenset(s)

    def lowest_empty(self) -> int:
        L, s = self.occupation()
        k = L + 2
        while k in s:
            k += 2
        return k

    def highest_occupied(self) -> int:
        L, s = self.occupation()
        return max(s) if s else L

    def occupied_modes_above(self, lo: int) -> list[int]:
        """Occupied modes ``> lo``, ascending."""
        L, s = self.occupation()
        start = lo + 1 if (lo + 1) % 2 == self.sector.parity else lo + 2
        out = list(range(start, L + 1, 2))
        out += sorted(k for k in s if k > lo)
        return out

    def to_text(self, tilde: bool = False) -> str:
        t = "~" if tilde else ""
        parts = [f"psi{t}*_{k}" for k in self.creators] + [f"psi{t}_{k}" for k in self.annihilators]
        parts.append(f"|{self.charge}>")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


def vacuum(sector, charge: int) -> FermionState:
    return FermionState(as_sector(sector), charge)


def _count_above(L: int, s: frozenset, k: int) -> int:
    n = sum(1 for x in s if x > k)
    if k < L:
        n += (L - k) // 2
    return n


def _state_from_occupation(sector: Sector, charge: int, L: int, s: frozenset) -> FermionState:
    if charge < L:
        s = s | frozenset(range(charge + 2, L + 1, 2))
        L = charge
    creators = tuple(sorted(k for k in s if k > charge))
    annihilators = tuple(k for k in range(L + 2, charge + 1, 2) if k not in s)
    return FermionState(sector, charge, creators, annihilators)


@lru_cache(maxsize=None)
def word_sign(state: FermionState) -> int:
    """Sign relating the normal-ordered word to the descending wedge."""
    sign = 1
    occ_sea_L = state.charge
    occ = set()
    # apply annihilators right to left (largest first) on |charge>
    for a in reversed(state.annihilators):
        n = _count_above(occ_sea_L, frozenset(occ), a)
        if n % 2:
            sign = -sign
        # remove a from the sea: expand the sea above a into explicit modes
        occ.update(range(a + 2, occ_sea_L + 1, 2))
        occ_sea_L = a - 2
    for c in reversed(state.creators):
        n = _count_above(occ_sea_L, frozenset(occ), c)
        if n % 2:
            sign = -sign
        occ.add(c)
    return sign


def apply_mode(kind: str, k: int, state: FermionState) -> tuple[int, FermionState] | None:
    """Apply ``psi*_k`` (``kind='c'``) or ``psi_k`` (``kind='a'``) to a basis state.

    Returns ``(sign, new_state)`` or ``None`` when the result vanishes.
    """
    if k % 2 != state.sector.parity:
        raise ValueError(f"mode {k} has wrong parity for sector {state.sector.value}")
    L, s = state.occupation()
    occ = k <= L or k in s
    if kind == "c":
        if occ:
            return None
        sign = -1 if _count_above(L, s, k) % 2 else 1
        new_charge = state.charge + 2
        s2 = s | {k}
        L2 = L
    elif kind == "a":
        if not occ:
            return None
        sign = -1 if _count_above(L, s, k) % 2 else 1
        if k <= L:
            s = s | frozenset(range(k + 2, L + 1, 2))
            L = k - 2
        s2 = s - {k}
        L2 = L
        new_charge = state.charge - 2
    else:
        raise ValueError(f"unknown mode kind {kind!r}")
    new = _state_from_occupation(state.sector, new_charge, L2, frozenset(s2))
    return sign * word_sign(state) * word_sign(new), new


def charge_shift_state(sector, m: int) -> FermionState:
    """The vacuum ``|m>`` as a basis state."""
    return vacuum(sector, m)


# ---------------------------------------------------------------------------
# basis enumeration

def _strict_parts(n: int, count: int, minimum: int) -> Iterator[tuple[int, ...]]:
    """Strictly increasing tuples of ``count`` integers ``>= minimum`` summing to ``n``."""
    if count == 0:
        if n == 0:
            yield ()
        return
    # smallest possible sum with first part x: x + (x+1) + ... + (x+count-1)
    x = minimum
    while count * x + count * (count - 1) // 2 <= n:
        for tail in _strict_parts(n - x, count - 1, x + 1):
            yield (x,) + tail
        x += 1


_BASIS_LOCK = threading.Lock()
_BASIS_CACHE: dict[tuple[Sector, int, int], tuple[FermionState, ...]] = {}


def enumerate_basis(sector, charge: int, energy: int) -> tuple[FermionState, ...]:
    """All basis states of the given charge and energy, ordered by (creators, annihilators)."""
    sector = as_sector(sector)
    key = (sector, charge, energy)
    with _BASIS_LOCK:
        hit = _BASIS_CACHE.get(key)
    if hit is not None:
        return hit
    excess = energy - vacuum_energy(charge)
    states: list[FermionState] = []
    if excess >= 0 and excess % 2 == 0:
        half = excess // 2
        p = 0
        while p * p <= half:
            for na in range(p * (p + 1) // 2, half + 1):
                nb = half - na
                for a in _strict_parts(na, p, 1):
                    for b in _strict_parts(nb, p, 0):
                        creators = tuple(charge + 2 * x for x in a)
                        annihilators = tuple(sorted(charge - 2 * y for y in b))
                        states.append(FermionState(sector, charge, creators, annihilators))
            p += 1
    states.sort(key=FermionState.sort_key)
    out = tuple(states)
    with _BASIS_LOCK:
        _BASIS_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# linear combinations of states; coefficients may be Fractions or polynomials

def add_into(acc: dict, state: FermionState, coeff) -> None:
    cur = acc.get(state)
    new = coeff if cur is None else cur + coeff
    if new:
        acc[state] = new
    else:
        acc.pop(state, None)


def apply_mode_elem(kind: str, k: int, elem: Mapping[FermionState, object]) -> dict:
    out: dict = {}
    for st, c in elem.items():
        r = apply_mode(kind, k, st)
        if r is not None:
            sign, new = r
            add_into(out, new, c if sign > 0 else -c)
    return out


def apply_word(word: Iterable[tuple[str, int]], elem: Mapping[FermionState, object]) -> dict:
    """Apply an operator word; the word is read left to right, acting rightmost first."""
    word = list(word)
    cur = dict(elem)
    for kind, k in reversed(word):
        cur = apply_mode_elem(kind, k, cur)
        if not cur:
            break
    return cur


def elem_add(a: Mapping, b: Mapping, scale=1) -> dict:
    out = dict(a)
    for st, c in b.items():
        add_into(out, st, c * scale if scale != 1 else c)
    return out


def elem_scale(a: Mapping, s) -> dict:
    out = {}
    for st, c in a.items():
        v = c * s
        if v:
            out[st] = v
    return out


def basis_elem(state: FermionState, coeff=Fraction(1)) -> dict:
    return {state: coeff}
