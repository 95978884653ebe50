"""Independent reference computations used by the tests.

None of these share code with the package: they enumerate partitions and
Maya diagrams directly and expand products term by term.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial


def partitions(n: int, allowed, max_part: int | None = None):
    """Yield partitions of ``n`` (non-increasing tuples) with parts in ``allowed``."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        if allowed(p):
            for rest in partitions(n - p, allowed, p):
                yield (p,) + rest


def count_partitions(n: int, allowed) -> int:
    return sum(1 for _ in partitions(n, allowed)) if n >= 0 else 0


def shifted_product(shift: int, cut: int, step: int, order: int) -> list[int]:
    """Coefficients of ``p^shift (1 - p^cut) / prod_k (1 - p^(k step))``; ``cut=None`` drops the factor."""
    base = [count_partitions(n, lambda p: p % step == 0) for n in range(order + 1)]
    num = [0] * (order + 1)
    for n in range(order + 1):
        num[n] = base[n] - (base[n - cut] if cut is not None and n >= cut else 0)
    return [num[n - shift] if n >= shift else 0 for n in range(order + 1)]


def maya_states(charge: int, energy: int, parity: int):
    """Occupation sets (modes above ``charge - 2 * depth``) of all states of given charge and energy.

    The energy of a Maya diagram with occupied modes ``m1 > m2 > ...`` is
    ``floor(c^2/4) + 2 * sum_i (m_i - (c - 2(i-1))) / 2``.
    """
    vac = (charge * charge) // 4
    excess = energy - vac
    if excess < 0 or excess % 2:
        return []
    size = excess // 2
    out = []
    # a partition of ``size`` has at most ``size`` nonzero parts
    depth = size + 1
    lo = charge - 2 * depth
    window = [k for k in range(lo + 2, charge + 2 * size + 3) if k % 2 == parity]
    n_occ = sum(1 for k in window if k <= charge)
    for occ in combinations(window, n_occ):
        ms = sorted(occ, reverse=True)
        lam = [(m - (charge - 2 * i)) // 2 for i, m in enumerate(ms)]
        if any(a < b for a, b in zip(lam, lam[1:])) or lam[-1] < 0:
            continue
        if sum(lam) == size:
            out.append(frozenset(occ))
    return out


def exp_series_coefficients(order: int) -> list[dict[tuple, Fraction]]:
    """``exp(sum_s u_s z^(2s-1) / (2s-1))`` expanded as ``sum_n X^n / n!`` with dict polynomials."""
    def mul(a, b):
        out: dict = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(sorted(ma + mb))
                out[m] = out.get(m, 0) + ca * cb
        return {m: c for m, c in out.items() if c}

    # X as a list over powers of z
    X = [dict() for _ in range(order + 1)]
    for k in range(1, order + 1, 2):
        X[k] = {((k + 1) // 2,): Fraction(1, k)}
    total = [dict() for _ in range(order + 1)]
    total[0] = {(): Fraction(1)}
    power = [dict() for _ in range(order + 1)]
    power[0] = {(): Fraction(1)}
    for n in range(1, order + 1):
        new = [dict() for _ in range(order + 1)]
        for i, a in enumerate(power):
            for j, b in enumerate(X):
                if a and b and i + j <= order:
                    for m, c in mul(a, b).items():
                        new[i + j][m] = new[i + j].get(m, 0) + c
        power = new
        for d in range(order + 1):
            for m, c in power[d].items():
                total[d][m] = total[d].get(m, 0) + c / factorial(n)
    return [{m: c for m, c in t.items() if c} for t in total]


def naive_rank(rows: list[list[Fraction]]) -> int:
    """Plain Gaussian elimination over the rationals."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))
