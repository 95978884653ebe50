"""Graded polynomial rings with exact rational coefficients.

The ring of local integrals of motion is ``Q[u_1, u_2, ...]`` where ``u_s``
stands for the odd boson mode of energy ``2s - 1``.  Monomials are sorted
tuples of variable indices with repetition, so ``(1, 1, 2)`` is
``u1^2 u2``.  The same container, with a different weight function, holds
polynomials in the even boson modes used by the boson-fermion map.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from heapq import merge
from typing import Callable, Iterable, Iterator, Mapping

Monomial = tuple  # sorted tuple of positive ints


def odd_weight(s: int) -> int:
    """Energy of ``u_s``."""
    return 2 * s - 1


def even_weight(l: int) -> int:
    """Energy of the even boson mode with index ``l``."""
    return 2 * l


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return tuple(merge(a, b))


def mono_energy(m: Monomial, weight: Callable[[int], int] = odd_weight) -> int:
    return sum(weight(s) for s in m)


def mono_sort_key(m: Monomial, weight: Callable[[int], int] = odd_weight):
    """Graded lexicographic key: energy first, then exponent tuple."""
    return (mono_energy(m, weight), m)


class WeightedPolynomial:
    """Immutable polynomial ``{monomial: Fraction}`` with no zero terms."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(m)] = c
        self.terms: dict[Monomial, Fraction] = clean
        self._hash = None

    @classmethod
    def const(cls, c) -> "WeightedPolynomial":
        return cls({(): c})

    @classmethod
    def var(cls, s: int, coeff=1) -> "WeightedPolynomial":
        return cls({(s,): coeff})

    @classmethod
    def monomial(cls, m: Monomial, coeff=1) -> "WeightedPolynomial":
        return cls({tuple(m): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = WeightedPolynomial.const(other)
        if not isinstance(other, WeightedPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other) -> "WeightedPolynomial":
        if not isinstance(other, WeightedPolynomial):
            other = WeightedPolynomial.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return WeightedPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "WeightedPolynomial":
        return WeightedPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "WeightedPolynomial":
        if not isinstance(other, WeightedPolynomial):
            other = WeightedPolynomial.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "WeightedPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "WeightedPolynomial":
        if not isinstance(other, WeightedPolynomial):
            c = Fraction(other)
            return WeightedPolynomial({m: c * v for m, v in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return WeightedPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "WeightedPolynomial":
        out = WeightedPolynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def energies(self, weight: Callable[[int], int] = odd_weight) -> set[int]:
        return {mono_energy(m, weight) for m in self.terms}

    def is_homogeneous(self, energy: int | None = None,
                       weight: Callable[[int], int] = odd_weight) -> bool:
        es = self.energies(weight)
        if not es:
            return True
        if len(es) != 1:
            return False
        return energy is None or es == {energy}

    def contains_var(self, s: int) -> bool:
        return any(s in m for m in self.terms)

    def coeff(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def derivative(self, s: int) -> "WeightedPolynomial":
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            k = m.count(s)
            if k:
                i = m.index(s)
                nm = m[:i] + m[i + 1:]
                out[nm] = out.get(nm, 0) + c * k
        return WeightedPolynomial(out)

    def sorted_terms(self, weight: Callable[[int], int] = odd_weight):
        return sorted(self.terms.items(), key=lambda t: mono_sort_key(t[0], weight))

    def to_text(self, var: str = "u", weight: Callable[[int], int] = odd_weight) -> str:
        """Canonical text form, e.g. ``1/6 * u1^3 + 1/3 * u2``."""
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms(weight):
            if not m:
                parts.append(str(c))
                continue
            factors = []
            for s in sorted(set(m)):
                k = m.count(s)
                factors.append(f"{var}{s}" if k == 1 else f"{var}{s}^{k}")
            parts.append(f"{c} * {' '.join(factors)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"WeightedPolynomial({self.to_text()})"


ZERO = WeightedPolynomial()
ONE = WeightedPolynomial.const(1)


# ---------------------------------------------------------------------------
# graded bases

def _partitions(n: int, parts: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Multisets from ``parts`` (ascending) summing to ``n``, as ascending tuples."""
    def rec(rem: int, i: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for j in range(i, len(parts)):
            p = parts[j]
            if p > rem:
                break
            for tail in rec(rem - p, j):
                yield (p,) + tail
    yield from rec(n, 0)


@lru_cache(maxsize=None)
def monomials_of_energy(energy: int, weight_kind: str = "odd") -> tuple[Monomial, ...]:
    """All monomials of the given energy, in graded lexicographic order.

    ``weight_kind`` is ``"odd"`` (variables of energy 1, 3, 5, ...) or
    ``"even"`` (variables of energy 2, 4, 6, ...).
    """
    if energy < 0:
        return ()
    if weight_kind == "odd":
        parts = tuple(range(1, energy + 1, 2))
        to_var = lambda p: (p + 1) // 2
    elif weight_kind == "even":
        parts = tuple(range(2, energy + 1, 2))
        to_var = lambda p: p // 2
    else:
        raise ValueError(f"unknown weight kind {weight_kind!r}")
    monos = [tuple(to_var(p) for p in part) for part in _partitions(energy, parts)]
    return tuple(sorted(monos))


def d_graded_dim(energy: int) -> int:
    """Dimension of the energy-``energy`` piece of Q[u_1, u_2, ...].

    Computed from the product ``prod_s 1/(1 - p^(2s-1))``; the count is the
    number of partitions into odd parts.
    """
    if energy < 0:
        return 0
    coeffs = [1] + [0] * energy
    for part in range(1, energy + 1, 2):
        for n in range(part, energy + 1):
            coeffs[n] += coeffs[n - part]
    return coeffs[energy]


# ---------------------------------------------------------------------------
# exponential generating series

_T_CACHE: list[WeightedPolynomial] = [ONE]


def expand_exp_X(max_energy: int) -> list[WeightedPolynomial]:
    """Coefficients ``T_0, T_-1, ..., T_-max`` of ``exp(sum_s u_s z^(2s-1)/(2s-1))``.

    Uses ``n T_n = sum_{k odd <= n} u_{(k+1)/2} T_{n-k}``, which follows from
    differentiating the exponential.
    """
    if max_energy < 0:
        raise ValueError("max_energy must be >= 0")
    while len(_T_CACHE) <= max_energy:
        n = len(_T_CACHE)
        acc = ZERO
        for k in range(1, n + 1, 2):
            acc = acc + WeightedPolynomial.var((k + 1) // 2) * _T_CACHE[n - k]
        t = acc * Fraction(1, n)
        assert t.is_homogeneous(n)
        _T_CACHE.append(t)
    return list(_T_CACHE[: max_energy + 1])


def T(n: int) -> WeightedPolynomial:
    """``T_-n`` for ``n >= 0``; zero for negative ``n`` (positive subscripts)."""
    if n < 0:
        return ZERO
    if n >= len(_T_CACHE):
        expand_exp_X(n)
    return _T_CACHE[n]


def t_gen(s: int) -> WeightedPolynomial:
    """The generator ``t_s = T_-(2s-1)``."""
    return T(2 * s - 1)


def tau_coefficients(max_order: int) -> list[int]:
    """Coefficients of ``tau(z) = sum z^(2n-1) - 2 sum z^(2n)`` for orders 0..max."""
    return [0 if k == 0 else (1 if k % 2 else -2) for k in range(max_order + 1)]


@lru_cache(maxsize=None)
def q_poly(sector: str, n: int, l: int) -> WeightedPolynomial:
    """The polynomial ``Q_{n,l}(T)`` of the even (R) or odd (NS) sector.

    even: ``sum (T_-2n1 T_-2n2 - 2 T_-(2n1+1) T_-(2n2-1))``
    odd:  ``sum (-2 T_-2n1 T_-2n2 + T_-(2n1-1) T_-(2n2+1))``
    over ``n1 + n2 = l``, ``n1 >= 0``, ``0 <= n2 <= n``.  A T with positive
    subscript is zero.  The result has energy ``2 l``.
    """
    if l < 1:
        raise ValueError("l must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    acc = ZERO
    for n2 in range(0, min(n, l) + 1):
        n1 = l - n2
        if sector in ("even", "R"):
            acc = acc + T(2 * n1) * T(2 * n2) - 2 * T(2 * n1 + 1) * T(2 * n2 - 1)
        elif sector in ("odd", "NS"):
            acc = acc - 2 * T(2 * n1) * T(2 * n2) + T(2 * n1 - 1) * T(2 * n2 + 1)
        else:
            raise ValueError(f"unknown sector {sector!r}")
    assert acc.is_homogeneous(2 * l)
    return acc


def poly_sum(polys: Iterable[WeightedPolynomial]) -> WeightedPolynomial:
    out: dict[Monomial, Fraction] = {}
    for p in polys:
        for m, c in p.terms.items():
            out[m] = out.get(m, 0) + c
    return WeightedPolynomial(out)
