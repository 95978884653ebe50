"""Operator-level checks: tilde CAR, sl2, screening identities, boson-fermion square."""

from __future__ import annotations

from fractions import Fraction

from .bosonfermion import integral_oracle_x2, to_boson, vertex_mode_apply
from .fock import Sector, add_into, apply_mode, as_sector, enumerate_basis, vacuum, vacuum_energy
from .graded import piece
from .homology import omega_kernel_dims
from .linalg import SparseMatrix, rank
from .poly import ONE, WeightedPolynomial, monomials_of_energy
from .report import VerificationReport
from .screening import (b_entry, b_inverse_entry, eta_op, omega_op, reference_charge, tilde_embed,
                        tilde_mode_elem, window_states, x2_tilde, xi_op, xminus0, xminus0_sq,
                        xminus0_tilde)


def _modes(sector, cutoff: int) -> list[int]:
    p = as_sector(sector).parity
    return [k for k in range(-cutoff, cutoff + 1) if k % 2 == p]


def _anti(kind1, i, kind2, j, elem, sector) -> dict:
    a = tilde_mode_elem(kind1, i, tilde_mode_elem(kind2, j, elem, sector), sector)
    b = tilde_mode_elem(kind2, j, tilde_mode_elem(kind1, i, elem, sector), sector)
    for k, v in b.items():
        add_into(a, k, v)
    return a


def car_check(sector, mode_cutoff: int = 10, max_energy: int = 4) -> VerificationReport:
    """Tilde anticommutators, vacuum rules, ``B B^-1 = 1`` and invertibility of the embedding."""
    sector = as_sector(sector)
    base = reference_charge(sector)
    modes = _modes(sector, mode_cutoff)
    rep = VerificationReport("car", {"sector": sector.label, "mode_cutoff": mode_cutoff, "cutoff": max_energy})
    for c in (base - 2, base, base + 2):
        for e in range(max_energy + 1):
            bad = {"a*": 0, "aa": 0, "**": 0}
            for st in enumerate_basis(sector, c, e):
                elem = {st: ONE}
                for i in modes:
                    for j in modes:
                        if _anti("a", i, "c", j, elem, sector) != (elem if i == j else {}):
                            bad["a*"] += 1
                        if j >= i:
                            if _anti("a", i, "a", j, elem, sector):
                                bad["aa"] += 1
                            if _anti("c", i, "c", j, elem, sector):
                                bad["**"] += 1
            for name, n in bad.items():
                rep.add({"charge": c, "energy": e, "identity": name}, 0, n)
    # vacuum rules: psi~_k |c> = 0 for k > c and psi~*_k |c> = 0 for k <= c
    for c in (base - 4, base - 2, base, base + 2, base + 4):
        vac = {vacuum(sector, c): ONE}
        n = sum(1 for k in modes if k > c and tilde_mode_elem("a", k, vac, sector))
        n += sum(1 for k in modes if k <= c and tilde_mode_elem("c", k, vac, sector))
        rep.add({"charge": c, "identity": "vacuum"}, 0, n)
    # B B^-1 = 1
    n = 0
    for i in modes:
        for j in modes:
            if j < i:
                continue
            acc = WeightedPolynomial()
            for k in range(i, j + 1, 2):
                acc = acc + b_entry(sector, i, k) * b_inverse_entry(sector, k, j)
            if acc != (ONE if i == j else WeightedPolynomial()):
                n += 1
    rep.add({"identity": "B.Binv"}, 0, n)
    # the tilde embedding is invertible on each graded piece
    for c in (base, base + 2):
        for e in range(max_energy + 1):
            src = piece(sector, c, e)
            cols = [src.vector(tilde_embed(st), mono) for mono, st in src.basis]
            r = rank(SparseMatrix.from_columns(src.dim, cols))
            rep.add({"charge": c, "energy": e, "identity": "embedding-rank"}, src.dim, r)
    return rep


# ---------------------------------------------------------------------------
# sl2 on the finite window

def window_matrices(sector, N: int):
    sts = window_states(sector, N)
    idx = {s: i for i, s in enumerate(sts)}
    out = []
    for op in (omega_op(sector, N), eta_op(sector, N), xi_op(sector, N)):
        cols = []
        for st in sts:
            cols.append({idx[s2]: p.terms[()] for s2, p in op.act(st).items()})
        out.append(SparseMatrix.from_columns(len(sts), cols))
    return sts, out


def sl2_check(sector, N: int) -> VerificationReport:
    sector = as_sector(sector)
    rep = VerificationReport("sl2", {"sector": sector.label, "N": N})
    sts, (om, et, xi) = window_matrices(sector, N)
    rep.add({"relation": "[eta,omega]=xi"}, 0, len(((et @ om) - (om @ et) - xi).entries))
    rep.add({"relation": "[xi,eta]=2eta"}, 0, len(((xi @ et) - (et @ xi) - et.scale(2)).entries))
    rep.add({"relation": "[xi,omega]=-2omega"}, 0, len(((xi @ om) - (om @ xi) + om.scale(2)).entries))
    base = reference_charge(sector)
    bad = 0
    for i, st in enumerate(sts):
        want = {i: Fraction((st.charge - base) // 2)} if st.charge != base else {}
        got = {r: v for (r, c), v in xi.entries.items() if c == i}
        if got != want:
            bad += 1
    rep.add({"relation": "xi=m"}, 0, bad)
    rep.add({"relation": "window-dim"}, 4 ** N, len(sts))
    return rep


def omega_injectivity_check(ms=(1, 2, 3), max_energy: int = 12) -> VerificationReport:
    rep = VerificationReport("omega-injective", {"m": list(ms), "cutoff": max_energy})
    for m in ms:
        for e, k in enumerate(omega_kernel_dims(Sector.R, 2 * m, max_energy)):
            rep.add({"m": m, "energy": e}, 0, k)
    return rep


# ---------------------------------------------------------------------------
# screening identities and the integral oracle

def _charges(sector) -> list[int]:
    base = reference_charge(sector)
    return [base - 4, base - 2, base, base + 2, base + 4, base + 6]


def screening_check(sector, max_energy: int = 8) -> VerificationReport:
    """``(x-_0)^2 = 0``, ``[x-_0, x2] = 0`` and the tilde forms of both operators."""
    sector = as_sector(sector)
    rep = VerificationReport("screening", {"sector": sector.label, "cutoff": max_energy})
    x, x2 = xminus0(sector), xminus0_sq(sector)
    for c in _charges(sector):
        for e in range(max_energy + 1):
            a = x.matrix(c, e)
            sq = x.matrix(c - 2, e) @ a
            rep.add({"charge": c, "energy": e, "identity": "x^2"}, 0, len(sq.entries))
            comm = x.matrix(c - 4, e) @ x2.matrix(c, e) - x2.matrix(c - 2, e) @ a
            rep.add({"charge": c, "energy": e, "identity": "[x,x2]"}, 0, len(comm.entries))
            bad = 0
            for t in enumerate_basis(sector, c, e):
                for op, opt in ((x, xminus0_tilde(sector)), (x2, x2_tilde(sector))):
                    rhs: dict = {}
                    for t2, p in opt.act(t).items():
                        for s, q in tilde_embed(t2).items():
                            add_into(rhs, s, p * q)
                    if op.apply(tilde_embed(t)) != rhs:
                        bad += 1
            rep.add({"charge": c, "energy": e, "identity": "tilde-form"}, 0, bad)
    return rep


def oracle_check(sector, max_energy: int = 8) -> VerificationReport:
    """The contour-integral matrix equals the component matrix up to one global scalar."""
    sector = as_sector(sector)
    rep = VerificationReport("x2-oracle", {"sector": sector.label, "cutoff": max_energy})
    ratios: set[Fraction] = set()
    pieces: list[tuple[int, int, SparseMatrix, SparseMatrix]] = []
    for c in _charges(sector):
        for e in range(max_energy + 1):
            comp = xminus0_sq(sector).matrix(c, e)
            orc = integral_oracle_x2(sector, c, e)
            pieces.append((c, e, comp, orc))
            for k, v in comp.entries.items():
                w = orc.entries.get(k)
                if w:
                    ratios.add(w / v)
    scalar = min(ratios) if ratios else Fraction(1)
    rep.parameters["scalar"] = str(scalar)
    rep.add({"check": "distinct-scalars"}, 1, len(ratios))
    for c, e, comp, orc in pieces:
        rep.add({"charge": c, "energy": e}, 0, len((orc - comp.scale(scalar)).entries))
    return rep


# ---------------------------------------------------------------------------
# boson-fermion correspondence

def bf_check(sector, max_energy: int = 8, mode_range: int | None = None) -> VerificationReport:
    """Commutation square and bijectivity of the boson-fermion map per graded piece."""
    sector = as_sector(sector)
    rep = VerificationReport("bf-correspondence", {"sector": sector.label, "cutoff": max_energy})
    mode_range = max_energy + 3 if mode_range is None else mode_range
    modes = _modes(sector, mode_range)
    base = reference_charge(sector)
    for c in (base - 4, base - 2, base, base + 2, base + 4):
        for e in range(max_energy + 1):
            sts = enumerate_basis(sector, c, e)
            bad = 0
            for st in sts:
                b = to_boson(st)
                for kind in ("a", "c"):
                    for k in modes:
                        r = apply_mode(kind, k, st)
                        lhs = to_boson(r[1]).polynomial * r[0] if r else WeightedPolynomial()
                        if lhs != vertex_mode_apply(kind, k, b).polynomial:
                            bad += 1
            rep.add({"charge": c, "energy": e, "check": "square"}, 0, bad)
            if sts:
                monos = monomials_of_energy(e - vacuum_energy(c), "even")
                index = {m: i for i, m in enumerate(monos)}
                cols = [{index[m]: v for m, v in to_boson(st).polynomial.terms.items()} for st in sts]
                r = rank(SparseMatrix.from_columns(len(monos), cols))
                rep.add({"charge": c, "energy": e, "check": "bijective"}, [len(monos), len(monos)], [len(sts), r])
    return rep
