"""Graded quotients, Koszul complexes, the free resolution and de Rham cohomology.

Everything is computed one energy at a time.  The chiral space is

    A(charge) = D (x) H(charge) / ( x-_0 D (x) H(charge+2) + x2 D (x) H(charge+4) )

and the W spaces are the tilde-label quotients ``H~(c) / omega H~(c+4)``; in
the odd sector the ambient is the subspace on which mode 1 is filled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .characters import closed_form
from .fock import FermionState, Sector, as_sector
from .graded import GradedPiece, holes_at_or_below_zero, piece, register_filter
from .linalg import Quotient, SparseMatrix, rank
from .poly import WeightedPolynomial, d_graded_dim, mono_energy, mono_mul, monomials_of_energy
from .report import VerificationReport
from .screening import omega_op, tilde_embed, xminus0, xminus0_sq, xminus0_tilde


def base_charge(sector, m: int) -> int:
    return 2 * m + as_sector(sector).parity


def w_filter(sector) -> str:
    return "all" if as_sector(sector) is Sector.R else "mode1"


# ---------------------------------------------------------------------------
# A spaces

@lru_cache(maxsize=None)
def a_relations(sector, charge: int, energy: int) -> tuple[dict, ...]:
    """Images of ``x-_0`` and ``x2`` inside ``(D (x) H(charge))_energy``."""
    sector = as_sector(sector)
    amb = piece(sector, charge, energy)
    gens = []
    for op, shift in ((xminus0(sector), 2), (xminus0_sq(sector), 4)):
        src = piece(sector, charge + shift, energy)
        if src.dim and amb.dim:
            gens.extend(op.images(src, amb))
    return tuple(gens)


@lru_cache(maxsize=None)
def a_quotient(sector, charge: int, energy: int) -> tuple[GradedPiece, Quotient]:
    sector = as_sector(sector)
    amb = piece(sector, charge, energy)
    return amb, Quotient(amb.dim, a_relations(sector, charge, energy))


def a_space_dims(sector, m: int, max_energy: int) -> list[int]:
    c = base_charge(sector, m)
    return [a_quotient(sector, c, e)[1].dim for e in range(max_energy + 1)]


def _a_project(sector, charge: int, energy: int, elem: dict, mono: tuple = ()) -> dict:
    amb, q = a_quotient(sector, charge, energy)
    return q.coords(amb.vector(elem, mono))


@lru_cache(maxsize=None)
def _u_mult_on_a(sector, charge: int, energy: int, s: int) -> tuple[dict, ...]:
    """Images of the A representatives at ``energy`` under multiplication by ``u_s``."""
    amb, q = a_quotient(sector, charge, energy)
    tgt_e = energy + 2 * s - 1
    tamb, tq = a_quotient(sector, charge, tgt_e)
    out = []
    for r in q.representatives:
        mono, st = amb.basis[r]
        out.append(tq.coords({tamb.index[(mono_mul(mono, (s,)), st)]: Fraction(1)}))
    return tuple(out)


# ---------------------------------------------------------------------------
# W spaces on tilde labels

@lru_cache(maxsize=None)
def w_quotient(sector, charge: int, energy: int, filt: str | None = None) -> tuple[GradedPiece, Quotient]:
    sector = as_sector(sector)
    filt = w_filter(sector) if filt is None else filt
    amb = piece(sector, charge, energy, False, filt)
    gens = []
    src = piece(sector, charge + 4, energy, False, filt)
    if src.dim and amb.dim:
        gens = omega_op(sector).images(src, amb)
    return amb, Quotient(amb.dim, gens)


@dataclass
class GradedQuotient:
    sector: Sector
    charge: int
    filt: str
    max_energy: int
    pieces: dict = field(default_factory=dict)

    def dims(self) -> list[int]:
        return [self.pieces[e][1].dim for e in range(self.max_energy + 1)]

    def representatives(self, energy: int) -> list[FermionState]:
        amb, q = self.pieces[energy]
        return [amb.basis[i][1] for i in q.representatives]


def w_space(sector, charge: int, max_energy: int) -> GradedQuotient:
    sector = as_sector(sector)
    filt = w_filter(sector)
    gq = GradedQuotient(sector, charge, filt, max_energy)
    for e in range(max_energy + 1):
        gq.pieces[e] = w_quotient(sector, charge, e, filt)
    return gq


def w_dims(sector, charge: int, max_energy: int) -> list[int]:
    return w_space(sector, charge, max_energy).dims()


def omega_kernel_dims(sector, charge: int, max_energy: int) -> list[int]:
    """``dim ker omega`` on each label piece of the given charge."""
    out = []
    for e in range(max_energy + 1):
        m = omega_op(sector).matrix(charge, e, with_d=False)
        out.append(m.cols - rank(m))
    return out


class DTensorW:
    """``(D (x) W(charge))_energy`` with basis (u-monomial, representative label state)."""

    def __init__(self, sector, charge: int, energy: int, filt: str | None = None):
        self.sector = as_sector(sector)
        self.charge = charge
        self.energy = energy
        self.filt = w_filter(self.sector) if filt is None else filt
        basis = []
        for e in range(energy + 1):
            amb, q = w_quotient(self.sector, charge, energy - e, self.filt)
            if not q.dim:
                continue
            reps = [amb.basis[i][1] for i in q.representatives]
            for mono in monomials_of_energy(e):
                for st in reps:
                    basis.append((mono, st))
        self.basis = basis
        self.index = {b: i for i, b in enumerate(basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, elem: dict) -> dict[int, Fraction]:
        """Coordinates of an element of D (x) H~ after reduction modulo D (x) omega-image."""
        groups: dict[tuple, dict[FermionState, Fraction]] = {}
        for st, poly in elem.items():
            for mono, c in poly.terms.items():
                g = groups.setdefault(mono, {})
                g[st] = g.get(st, 0) + c
        out: dict[int, Fraction] = {}
        for mono, vec in groups.items():
            le = self.energy - mono_energy(mono)
            amb, q = w_quotient(self.sector, self.charge, le, self.filt)
            coords = q.coords(amb.vector({st: c for st, c in vec.items()}))
            reps = q.representatives
            for k, c in coords.items():
                i = self.index[(mono, amb.basis[reps[k]][1])]
                out[i] = out.get(i, 0) + c
        return {k: v for k, v in out.items() if v}


def _dw_dim(sector, charge: int, energy: int) -> int:
    return sum(d_graded_dim(e) * w_quotient(sector, charge, energy - e)[1].dim
               for e in range(energy + 1))


# ---------------------------------------------------------------------------
# resolution

def resolution_maps(m: int, terms: int, energy: int):
    sec = Sector.R
    dws = [DTensorW(sec, 2 * (m + k), energy) for k in range(terms + 1)]
    xt = xminus0_tilde(sec)
    ds = [None]
    for k in range(1, terms + 1):
        src, dst = dws[k], dws[k - 1]
        cols = [dst.reduce(xt.apply({st: WeightedPolynomial.monomial(mono)})) for mono, st in src.basis]
        ds.append(SparseMatrix(dst.dim, src.dim, SparseMatrix.from_columns(dst.dim, cols).entries))
    amb, q = a_quotient(sec, 2 * m, energy)
    cols = []
    for mono, st in dws[0].basis:
        cols.append(q.coords(amb.vector(tilde_embed(st), mono)))
    eps = SparseMatrix(q.dim, dws[0].dim, SparseMatrix.from_columns(q.dim, cols).entries)
    return dws, ds, eps, q.dim


def resolution_check(m: int, terms: int = 3, max_energy: int = 10) -> VerificationReport:
    """Exactness of ``... -> D (x) W(2m+2) -> D (x) W(2m) -> A(2m) -> 0`` per energy.

    ``terms`` counts the resolution terms W(2m) ... W(2m+2(terms-1)); one more
    term is built so that exactness is tested at each of them.
    """
    if terms < 2:
        raise ValueError("terms must be >= 2")
    rep = VerificationReport("resolution", {"m": m, "terms": terms, "cutoff": max_energy})
    for e in range(max_energy + 1):
        dws, ds, eps, dim_a = resolution_maps(m, terms, e)
        r_eps = rank(eps)
        ranks = [None] + [rank(d) for d in ds[1:]]
        # composites
        if dws[0].dim and dws[1].dim and dim_a:
            rep.add({"energy": e, "composite": "eps.d1"}, 0, len((eps @ ds[1]).entries))
        for k in range(2, terms + 1):
            if dws[k].dim and dws[k - 1].dim and dws[k - 2].dim:
                rep.add({"energy": e, "composite": f"d{k-1}.d{k}"}, 0, len((ds[k - 1] @ ds[k]).entries))
        rep.add({"energy": e, "check": "surjective"}, dim_a, r_eps)
        rep.add({"energy": e, "check": "augmentation-kernel"}, dws[0].dim - r_eps, ranks[1])
        for k in range(1, terms):
            defect = (dws[k].dim - ranks[k]) - ranks[k + 1]
            rep.add({"energy": e, "position": k}, 0, defect)
        euler = 0
        k = 0
        while (m + k) ** 2 <= e:
            euler += (-1) ** k * _dw_dim(Sector.R, 2 * (m + k), e)
            k += 1
        rep.add({"energy": e, "check": "euler"}, dim_a, euler)
    return rep


# ---------------------------------------------------------------------------
# Koszul subcomplexes with a fixed set of holes

def koszul_filter(s_indices: tuple[int, ...]) -> str:
    modes = tuple(sorted(2 * s for s in s_indices))
    if any(s > 0 for s in s_indices) or len(set(modes)) != len(modes):
        raise ValueError("s indices must be distinct and <= 0")
    return register_filter(f"holes{modes}", lambda st, modes=modes: holes_at_or_below_zero(st) == modes)


def koszul_sectors(max_k: int, max_energy: int) -> list[tuple[int, ...]]:
    """All hole sets ``s_1 < ... < s_k <= 0`` with ``k <= max_k`` whose hole energy fits."""
    out: list[tuple[int, ...]] = []

    def rec(cur: tuple[int, ...], nxt: int, used: int):
        out.append(cur)
        if len(cur) == max_k:
            return
        s = nxt
        while used + (1 - 2 * s) <= max_energy:
            rec(cur + (s,), s - 1, used + (1 - 2 * s))
            s -= 1
    rec((), 0, 0)
    return sorted(out, key=lambda t: (len(t), [-x for x in t]))


def _koszul_bottom_energy(s_indices: tuple[int, ...]) -> int:
    """Energy of ``psi~_2s1 ... psi~_2sk |0>``; each hole adds ``1 - 2s``."""
    return sum(1 - 2 * s for s in s_indices)


def koszul_homology(s_indices: tuple[int, ...], position: int, energy: int) -> int:
    filt = koszul_filter(s_indices)
    xt = xminus0_tilde(Sector.R)
    d_out = xt.matrix(2 * position, energy, True, filt, filt)
    d_in = xt.matrix(2 * position + 2, energy, True, filt, filt)
    return (d_out.cols - rank(d_out)) - rank(d_in)


def koszul_exactness_check(s_indices: list, max_m: int = 2, max_energy: int = 10,
                           positions: tuple[int, ...] | None = None) -> VerificationReport:
    """Homology of ``(D (x) H~(s), x-_0)`` at the requested positions.

    The fixed-s complex is a Koszul complex in the creators; its homology is
    ``C`` in creator number 0 (position ``-k``) at the bare hole energy and zero
    elsewhere.  Positions ``>= 1`` are the exactness statement; position 0
    with no holes carries the nonzero bottom homology.
    """
    positions = tuple(range(0, max_m + 1)) if positions is None else positions
    rep = VerificationReport("koszul", {"sectors": [list(s) for s in s_indices],
                                        "positions": list(positions), "cutoff": max_energy})
    for s in s_indices:
        s = tuple(s)
        bottom = _koszul_bottom_energy(s)
        for pos in positions:
            for e in range(max_energy + 1):
                expected = 1 if (pos == -len(s) and e == bottom) else 0
                rep.add({"s": list(s), "position": pos, "energy": e}, expected, koszul_homology(s, pos, e))
    return rep


# ---------------------------------------------------------------------------
# odd sector

def odd_freeness_check(m: int, max_energy: int = 10) -> VerificationReport:
    """``D (x) W(2m+1, 0) -> A(2m+1)`` is bijective in every energy."""
    sec = Sector.NS
    c = 2 * m + 1
    rep = VerificationReport("odd-free", {"m": m, "cutoff": max_energy})
    for e in range(max_energy + 1):
        dw = DTensorW(sec, c, e)
        amb, q = a_quotient(sec, c, e)
        cols = [q.coords(amb.vector(tilde_embed(st), mono)) for mono, st in dw.basis]
        mat = SparseMatrix.from_columns(q.dim, cols)
        r = rank(mat)
        rep.add({"energy": e, "check": "dims"}, q.dim, dw.dim)
        rep.add({"energy": e, "check": "rank"}, q.dim, r)
    return rep


# ---------------------------------------------------------------------------
# highest cohomology A / sum u_s A

def top_quotient_dim(sector, charge: int, energy: int) -> int:
    sector = as_sector(sector)
    amb = piece(sector, charge, energy)
    gens = list(a_relations(sector, charge, energy))
    s = 1
    while 2 * s - 1 <= energy:
        src = piece(sector, charge, energy - (2 * s - 1))
        for mono, st in src.basis:
            gens.append({amb.index[(mono_mul(mono, (s,)), st)]: Fraction(1)})
        s += 1
    return Quotient(amb.dim, gens).dim


def highest_cohomology_check(sector, m: int, max_energy: int = 10) -> VerificationReport:
    sector = as_sector(sector)
    c = base_charge(sector, m)
    rep = VerificationReport("highest-cohomology", {"sector": sector.label, "m": m, "cutoff": max_energy})
    wd = w_dims(sector, c, max_energy)
    for e in range(max_energy + 1):
        rep.add({"energy": e}, wd[e], top_quotient_dim(sector, c, e))
    return rep


# ---------------------------------------------------------------------------
# semi-infinite de Rham complex

def forms(p: int, energy: int) -> list[tuple[int, ...]]:
    """Removed-slot tuples ``0 > i_1 > ... > i_p`` (odd) with ``sum |i_j| = energy``."""
    out = []

    def rec(cur: tuple[int, ...], nxt: int, rem: int):
        if len(cur) == p:
            if rem == 0:
                out.append(cur)
            return
        k = nxt
        left = p - len(cur)
        # the smallest completion uses k, k+2, ...
        while left * k + left * (left - 1) <= rem:
            rec(cur + (-k,), k + 2, rem - k)
            k += 2
    rec((), 1, energy)
    return sorted(out, key=lambda f: [-x for x in f])


def form_energy(f: tuple[int, ...]) -> int:
    return sum(-i for i in f)


class Cochains:
    """``C^(inf/2 - p)`` at a fixed total energy: pairs (form, A representative)."""

    def __init__(self, sector, charge: int, p: int, energy: int):
        self.sector = as_sector(sector)
        self.charge = charge
        self.p = p
        self.energy = energy
        basis = []
        for fe in range(energy + 1):
            fs = forms(p, fe)
            if not fs:
                continue
            q = a_quotient(self.sector, charge, energy - fe)[1]
            for f in fs:
                for k in range(q.dim):
                    basis.append((f, k))
        self.basis = basis
        self.index = {b: i for i, b in enumerate(basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)


def derham_differential(src: Cochains, dst: Cochains) -> SparseMatrix:
    """``d = sum_s u_s (x) dt_-(2s-1)``: fill one removed slot, multiply by ``u_s``.

    Filling slot ``i_k = -(2s-1)`` carries the sign ``(-1)^(s-k)``.
    """
    cols = []
    for f, a in src.basis:
        a_energy = src.energy - form_energy(f)
        col: dict[int, Fraction] = {}
        for k, i in enumerate(f, start=1):
            s = (1 - i) // 2
            sign = -1 if (s - k) % 2 else 1
            g = f[:k - 1] + f[k:]
            img = _u_mult_on_a(src.sector, src.charge, a_energy, s)[a]
            for b, c in img.items():
                j = dst.index[(g, b)]
                col[j] = col.get(j, 0) + sign * c
        cols.append({k: v for k, v in col.items() if v})
    return SparseMatrix(dst.dim, src.dim, SparseMatrix.from_columns(dst.dim, cols).entries)


def derham_cohomology_dims(sector, m: int, p_max: int, max_energy: int) -> dict[tuple[int, int], int]:
    """``{(p, energy): dim H^(inf/2 - p)}``; ``d^2 = 0`` is asserted on every piece."""
    sector = as_sector(sector)
    c = base_charge(sector, m)
    out = {}
    for e in range(max_energy + 1):
        cs = [Cochains(sector, c, p, e) for p in range(p_max + 2)]
        ds = [None] + [derham_differential(cs[p], cs[p - 1]) for p in range(1, p_max + 2)]
        for p in range(2, p_max + 2):
            if ds[p].cols and ds[p - 1].rows:
                prod = ds[p - 1] @ ds[p]
                if not prod.is_zero():
                    raise AssertionError(f"d^2 != 0 at p={p}, energy={e}")
        ranks = [0] + [rank(d) for d in ds[1:]]
        for p in range(p_max + 1):
            out[(p, e)] = cs[p].dim - ranks[p] - ranks[p + 1]
    return out


def derham_check(sector, m: int, p_max: int = 2, max_energy: int = 10) -> VerificationReport:
    sector = as_sector(sector)
    rep = VerificationReport("derham", {"sector": sector.label, "m": m, "p_max": p_max, "cutoff": max_energy})
    dims = derham_cohomology_dims(sector, m, p_max, max_energy)
    for p in range(p_max + 1):
        if sector is Sector.R:
            wd = w_dims(sector, 2 * (m + p), max_energy)
        elif p == 0:
            wd = w_dims(sector, 2 * m + 1, max_energy)
        else:
            wd = [0] * (max_energy + 1)
        cf = closed_form("Hcoh", sector, m, p, max_energy)
        for e in range(max_energy + 1):
            rep.add({"p": p, "energy": e, "against": "W"}, wd[e], dims[(p, e)])
            rep.add({"p": p, "energy": e, "against": "closed-form"}, cf[e], dims[(p, e)])
    return rep

