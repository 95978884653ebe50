"""Finite-N fundamental representations of Sp(2N) and the filtration of W.

``V_N`` has basis ``alpha_1..alpha_N, beta_1..beta_N``.  In the even sector
``alpha_n = psi~*_{2-2n}`` and ``beta_n = psi~*_{2n}``; in the odd sector
``alpha_n = psi~*_{1-2n}`` and ``beta_n = psi~*_{2n+1}``.  Wedge monomials are
sorted tuples of generators with all alphas before all betas.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .fock import FermionState, Sector, apply_mode, as_sector, enumerate_basis, vacuum
from .homology import w_dims
from .linalg import Quotient, SparseMatrix, rank
from .report import VerificationReport
from .screening import alpha_mode, beta_mode, eta_op, omega_op

Gen = tuple  # ("a", i) or ("b", i)


def _gen_key(g: Gen):
    return (0 if g[0] == "a" else 1, g[1])


def generators(N: int) -> list[Gen]:
    return [("a", i) for i in range(1, N + 1)] + [("b", i) for i in range(1, N + 1)]


@lru_cache(maxsize=None)
def wedge_basis(N: int, k: int) -> tuple[tuple[Gen, ...], ...]:
    if k < 0 or k > 2 * N:
        return ()
    return tuple(combinations(generators(N), k))


def wedge_mul(a: tuple[Gen, ...], b: tuple[Gen, ...]) -> tuple[int, tuple[Gen, ...]] | None:
    """``a ^ b`` as ``(sign, sorted monomial)`` or ``None`` when a generator repeats."""
    if set(a) & set(b):
        return None
    seq = list(a) + list(b)
    keys = [_gen_key(g) for g in seq]
    inv = sum(1 for i in range(len(keys)) for j in range(i + 1, len(keys)) if keys[i] > keys[j])
    return (-1 if inv % 2 else 1), tuple(sorted(seq, key=_gen_key))


def eta_wedge_matrix(N: int, k: int) -> SparseMatrix:
    """Matrix of ``eta_N ^ -`` from ``wedge^(k-2) V_N`` to ``wedge^k V_N``."""
    if N < 0 or k < 0 or k > 2 * N:
        raise ValueError(f"k={k} out of range 0..{2 * N}")
    src = wedge_basis(N, k - 2)
    dst = wedge_basis(N, k)
    index = {b: i for i, b in enumerate(dst)}
    cols = []
    for v in src:
        col: dict[int, Fraction] = {}
        for i in range(1, N + 1):
            r = wedge_mul((("a", i), ("b", i)), v)
            if r is not None:
                j = index[r[1]]
                col[j] = col.get(j, 0) + r[0]
        cols.append({j: c for j, c in col.items() if c})
    return SparseMatrix(len(dst), len(src), SparseMatrix.from_columns(len(dst), cols).entries)


def fundamental_dim(N: int, k: int) -> int:
    if not (0 <= k <= N):
        raise ValueError("need 0 <= k <= N")
    return len(wedge_basis(N, k)) - (rank(eta_wedge_matrix(N, k)) if k >= 2 else 0)


def fundamental_dim_formula(N: int, k: int) -> int:
    return comb(2 * N, k) - (comb(2 * N, k - 2) if k >= 2 else 0)


class Fundamental:
    """``M(N)_k = wedge^k V_N / eta_N ^ wedge^(k-2) V_N`` with greedy representatives."""

    def __init__(self, N: int, k: int):
        self.N, self.k = N, k
        self.basis = wedge_basis(N, k)
        self.index = {b: i for i, b in enumerate(self.basis)}
        gens = eta_wedge_matrix(N, k).column_dicts() if k >= 2 else []
        self.quotient = Quotient(len(self.basis), gens)

    @property
    def dim(self) -> int:
        return self.quotient.dim


def stabilization_matrix(N: int, N_prime: int, m: int) -> SparseMatrix:
    """Induced map ``M(N)_{N-m} -> M(N')_{N'-m}``, ``v -> v ^ alpha_{N+1} ^ ... ^ alpha_{N'}``."""
    if not (0 <= m <= N <= N_prime):
        raise ValueError("need 0 <= m <= N <= N'")
    src = Fundamental(N, N - m)
    dst = Fundamental(N_prime, N_prime - m)
    tail = tuple(("a", i) for i in range(N + 1, N_prime + 1))
    cols = []
    for r in src.quotient.representatives:
        sign, mono = wedge_mul(src.basis[r], tail)
        cols.append(dst.quotient.coords({dst.index[mono]: Fraction(sign)}))
    return SparseMatrix(dst.dim, src.dim, SparseMatrix.from_columns(dst.dim, cols).entries)


def stabilization_injectivity(N: int, N_prime: int, m: int) -> VerificationReport:
    rep = VerificationReport("sp-stabilization", {"N": N, "N_prime": N_prime, "m": m})
    mat = stabilization_matrix(N, N_prime, m)
    rep.add({"check": "kernel"}, 0, mat.cols - rank(mat))
    rep.add({"check": "monotone"}, True, mat.cols <= mat.rows)
    # composition through every intermediate stage
    for mid in range(N + 1, N_prime):
        comp = stabilization_matrix(mid, N_prime, m) @ stabilization_matrix(N, mid, m)
        rep.add({"check": "compose", "via": mid}, True, comp.entries == mat.entries)
    return rep


# ---------------------------------------------------------------------------
# filtration of the tilde-label space

def _floor_charge(sector, N: int) -> int:
    """``|-2N>`` in the even sector, ``|-(2N+1)>`` in the odd one."""
    return -2 * N if as_sector(sector) is Sector.R else -(2 * N + 1)


def filtration_level(sector, N: int, k: int) -> list[tuple[tuple[Gen, ...], int, FermionState]]:
    """Images of the wedge basis of ``wedge^k V_N`` as tilde-label states.

    ``v = g_1 ^ ... ^ g_k`` maps to ``g_1 ... g_k |floor>`` with each generator a
    tilde creation mode; returned as ``(monomial, sign, state)``.
    """
    sector = as_sector(sector)
    floor = vacuum(sector, _floor_charge(sector, N))
    out = []
    for mono in wedge_basis(N, k):
        st, sign = floor, 1
        for g in reversed(mono):
            mode = alpha_mode(sector, g[1]) if g[0] == "a" else beta_mode(sector, g[1])
            r = apply_mode("c", mode, st)
            sign *= r[0]
            st = r[1]
        out.append((mono, sign, st))
    return out


def in_filtration(st: FermionState, N: int) -> bool:
    """Modes at or below the floor filled and modes above the window empty."""
    sector = st.sector
    floor = _floor_charge(sector, N)
    top = beta_mode(sector, N)
    L, s = st.occupation()
    if sector is Sector.NS and st.occupied(1):
        return False
    return L >= floor and all(k <= top for k in s)


def intertwining_check(sector, N: int, k: int) -> VerificationReport:
    """The label operator ``eta_N`` agrees with ``eta_N ^ -`` under the wedge identification."""
    sector = as_sector(sector)
    rep = VerificationReport("sp-intertwine", {"sector": sector.label, "N": N, "k": k})
    src = filtration_level(sector, N, k - 2)
    dst = {st: (mono, sign) for mono, sign, st in filtration_level(sector, N, k)}
    wm = eta_wedge_matrix(N, k)
    dst_index = {b: i for i, b in enumerate(wedge_basis(N, k))}
    op = eta_op(sector, N)
    mism = 0
    for col, (mono, sign, st) in enumerate(src):
        img: dict[int, Fraction] = {}
        for st2, p in op.act(st).items():
            mono2, sign2 = dst[st2]
            img[dst_index[mono2]] = img.get(dst_index[mono2], 0) + p.terms[()] * sign * sign2
        want = {r: v for (r, c), v in wm.entries.items() if c == col}
        if {r: v for r, v in img.items() if v} != want:
            mism += 1
    rep.add({"check": "columns"}, 0, mism)
    # omega_N = -sum alpha*_n beta*_n is the adjoint of eta_N: its matrix is the transpose
    om = omega_op(sector, N)
    src_states = {st: (mono, sign) for mono, sign, st in src}
    src_index = {b: i for i, b in enumerate(wedge_basis(N, k - 2))}
    mism = 0
    for mono, sign, st in filtration_level(sector, N, k):
        img: dict[int, Fraction] = {}
        for st2, p in om.act(st).items():
            mono2, sign2 = src_states[st2]
            img[src_index[mono2]] = img.get(src_index[mono2], 0) + p.terms[()] * sign * sign2
        row = dst_index[mono]
        want = {c: v for (r, c), v in wm.entries.items() if r == row}
        if {r: v for r, v in img.items() if v} != want:
            mism += 1
    rep.add({"check": "adjoint"}, 0, mism)
    return rep


def filtration_quotient_dims(sector, m: int, N: int, max_energy: int) -> dict[int, int]:
    """Per-energy ``dim H~(N) / eta_N H~(N)`` at the filtration level ``N``."""
    sector = as_sector(sector)
    k = N - m if sector is Sector.R else N - m - 1
    top = filtration_level(sector, N, k)
    low = filtration_level(sector, N, k - 2) if k >= 2 else []
    op = eta_op(sector, N)
    by_e: dict[int, list[FermionState]] = {}
    for _, _, st in top:
        by_e.setdefault(st.energy, []).append(st)
    out = {}
    for e, sts in by_e.items():
        if e > max_energy:
            continue
        idx = {st: i for i, st in enumerate(sorted(sts))}
        cols = []
        for _, _, st in low:
            if st.energy != e:
                continue
            cols.append({idx[s2]: p.terms[()] for s2, p in op.act(st).items()})
        out[e] = len(sts) - rank(SparseMatrix.from_columns(len(sts), cols))
    return out


def _window_complete(sector, charge: int, filt_N: int, energy: int) -> bool:
    """Every label state of this charge and energy lies in filtration level ``filt_N``."""
    sector = as_sector(sector)
    for st in enumerate_basis(sector, charge, energy):
        if sector is Sector.NS and st.occupied(1):
            continue
        if not in_filtration(st, filt_N):
            return False
    return True


def w_filtration_compare(sector, m: int, N: int, max_energy: int = 10) -> VerificationReport:
    """Dimension-level comparison of the filtration of ``W`` with ``M(N)``.

    Even: ``H~(-2m)(N) ~ wedge^(N-m) V_N`` and the graded quotients approach
    ``W(2m)``.  Odd: ``H~(-2m-1,0)(N) ~ wedge^(N-m-1) V_N``, realised inside
    charge ``-2m-3`` with mode 1 empty; its graded quotients approach
    ``W(2m+3, 0)``, so ``W(2m+1, 0)`` is the limit of ``M(N)_{N-m}``.
    """
    sector = as_sector(sector)
    k = N - m if sector is Sector.R else N - m - 1
    if k < 0:
        raise ValueError("need N >= m (even) or N >= m + 1 (odd)")
    charge = -2 * m if sector is Sector.R else -2 * m - 3
    wcharge = 2 * m if sector is Sector.R else 2 * m + 3
    rep = VerificationReport("sp-filtration", {"sector": sector.label, "m": m, "N": N,
                                               "w_charge": wcharge, "cutoff": max_energy})
    top = filtration_level(sector, N, k)
    low = filtration_level(sector, N, k - 2) if k >= 2 else []
    rep.add({"check": "filtration-dim"}, comb(2 * N, k), len({st for _, _, st in top}))
    rep.add({"check": "in-filtration"}, True, all(in_filtration(st, N) for _, _, st in top))
    # total quotient dimension
    idx = {st: i for i, (_, _, st) in enumerate(top)}
    op = eta_op(sector, N)
    cols = [{idx[s2]: p.terms[()] for s2, p in op.act(st).items()} for _, _, st in low]
    qdim = len(top) - rank(SparseMatrix.from_columns(len(top), cols))
    rep.add({"check": "quotient-dim"}, fundamental_dim(N, k), qdim)
    # energy-graded comparison with W
    wd = w_dims(sector, wcharge, max_energy)
    fq = filtration_quotient_dims(sector, m, N, max_energy)
    for e in range(max_energy + 1):
        got = fq.get(e, 0)
        rep.add({"energy": e, "check": "below-W"}, True, got <= wd[e])
        if _window_complete(sector, charge, N, e) and _window_complete(sector, charge - 4, N, e):
            rep.add({"energy": e, "check": "equals-W"}, wd[e], got)
    return rep
