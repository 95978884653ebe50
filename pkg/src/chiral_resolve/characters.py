"""Truncated integer q-series and the closed-form characters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .fock import as_sector, Sector
from .report import VerificationReport


@dataclass(frozen=True)
class PowerSeriesZ:
    """``sum_{k <= order} c_k p^k`` with integer coefficients."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least the constant coefficient")

    @classmethod
    def zero(cls, order: int) -> "PowerSeriesZ":
        return cls((0,) * (order + 1))

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int = 1) -> "PowerSeriesZ":
        c = [0] * (order + 1)
        if 0 <= power <= order:
            c[power] = coeff
        return cls(tuple(c))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        if k < 0 or k > self.order:
            raise IndexError(f"power {k} outside truncation 0..{self.order}")
        return self.coefficients[k]

    def _check(self, other: "PowerSeriesZ") -> None:
        if other.order != self.order:
            raise ValueError("series truncated at different orders")

    def __add__(self, other: "PowerSeriesZ") -> "PowerSeriesZ":
        self._check(other)
        return PowerSeriesZ(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "PowerSeriesZ") -> "PowerSeriesZ":
        self._check(other)
        return PowerSeriesZ(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other) -> "PowerSeriesZ":
        if isinstance(other, int):
            return PowerSeriesZ(tuple(other * a for a in self.coefficients))
        self._check(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coefficients[j]
        return PowerSeriesZ(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "PowerSeriesZ":
        """Multiply by ``p^k`` (``k >= 0``), dropping what falls past the order."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        c = (0,) * k + self.coefficients
        return PowerSeriesZ(c[: self.order + 1])

    def one_minus_shift(self, k: int) -> "PowerSeriesZ":
        """``(1 - p^k) * self``."""
        return self - self.shift(k)

    def to_list(self) -> list[int]:
        return list(self.coefficients)

    def to_csv(self) -> str:
        return ",".join(str(c) for c in self.coefficients)


def euler_inv(step: int, order: int) -> PowerSeriesZ:
    """``1 / prod_{k >= 1} (1 - p^(k*step))`` up to ``p^order``."""
    if step < 1:
        raise ValueError("step must be positive")
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [1] + [0] * order
    for part in range(step, order + 1, step):
        for n in range(part, order + 1):
            c[n] += c[n - part]
    return PowerSeriesZ(tuple(c))


def d_character(order: int) -> PowerSeriesZ:
    """``1 / prod_s (1 - p^(2s-1))``, the character of the ring of integrals of motion."""
    c = [1] + [0] * order
    for part in range(1, order + 1, 2):
        for n in range(part, order + 1):
            c[n] += c[n - part]
    return PowerSeriesZ(tuple(c))


SPACES = ("A", "W", "Htilde", "Hcoh")


def closed_form(space: str, sector, m: int, p_index: int = 0, order: int = 10) -> PowerSeriesZ:
    """Closed-form character of ``space`` at ``m`` (and cohomological ``p_index``).

    Even sector (charge 2m):
      A: ``p^(m^2) (1 - p^(2m+1)) / (p;p)``
      W: ``p^(m^2) (1 - p^(4m+4)) / (p^2;p^2)``
      Htilde: ``p^(m^2) / (p^2;p^2)``
      Hcoh: ``p^((m+p)^2) (1 - p^(4(m+p+1))) / (p^2;p^2)``
    Odd sector (charge 2m+1, W means the subspace without psi~_1):
      A: ``p^(m(m+1)) (1 - p^(2m+2)) / (p;p)``
      W: ``p^(m(m+1)) (1 - p^(2m+2)) / (p^2;p^2)``
      Htilde: ``p^(m(m+1)) / (p^2;p^2)`` (the full label space)
      Hcoh: W at ``p = 0`` and zero for ``p >= 1``.
    """
    if space not in SPACES:
        raise ValueError(f"unknown space {space!r}; expected one of {', '.join(SPACES)}")
    sec = as_sector(sector)
    if p_index < 0:
        raise ValueError("p_index must be non-negative")
    if sec is Sector.R:
        if space == "A":
            return euler_inv(1, order).one_minus_shift(2 * m + 1).shift(m * m)
        if space == "Htilde":
            return euler_inv(2, order).shift(m * m)
        if space == "W":
            return euler_inv(2, order).one_minus_shift(4 * m + 4).shift(m * m)
        q = m + p_index
        return euler_inv(2, order).one_minus_shift(4 * (q + 1)).shift(q * q)
    base = m * (m + 1)
    if space == "A":
        return euler_inv(1, order).one_minus_shift(2 * m + 2).shift(base)
    if space == "Htilde":
        return euler_inv(2, order).shift(base)
    if space == "W" or p_index == 0:
        return euler_inv(2, order).one_minus_shift(2 * m + 2).shift(base)
    return PowerSeriesZ.zero(order)


def compare(series: PowerSeriesZ, dims: Mapping[int, int] | Sequence[int],
            check_name: str = "character", parameters: dict | None = None) -> VerificationReport:
    """Compare a series with a table ``energy -> dimension`` inside the series window."""
    if not isinstance(dims, Mapping):
        dims = dict(enumerate(dims))
    rep = VerificationReport(check_name, dict(parameters or {}))
    for e in sorted(dims):
        if 0 <= e <= series.order:
            rep.add({"energy": e}, series[e], dims[e])
    return rep
