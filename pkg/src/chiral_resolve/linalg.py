"""Exact sparse linear algebra over the rationals.

Every homological statement in this package reduces, energy by energy, to
ranks, kernels and quotients of small sparse matrices with rational
entries.  Elimination is fraction free: rows are scaled to primitive
integer vectors, combined by cross multiplication and divided by their
content after every step.  Pivots are always chosen by column index so the
bases returned are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

Vector = dict  # sparse vector: index -> Fraction


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _primitive(row: Mapping[int, Fraction]) -> dict[int, int]:
    """Scale a rational sparse row to a primitive integer row."""
    den = 1
    for v in row.values():
        den = _lcm(den, Fraction(v).denominator)
    out = {}
    g = 0
    for k, v in row.items():
        iv = int(Fraction(v) * den)
        if iv:
            out[k] = iv
            g = gcd(g, iv)
    if g > 1:
        out = {k: v // g for k, v in out.items()}
    return out


def _combine(a: dict[int, int], ca: int, b: dict[int, int], cb: int) -> dict[int, int]:
    """Return the primitive part of ``ca * a - cb * b``."""
    out = {k: ca * v for k, v in a.items()}
    for k, v in b.items():
        nv = out.get(k, 0) - cb * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    g = 0
    for v in out.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        out = {k: v // g for k, v in out.items()}
    return out


@dataclass(frozen=True)
class SparseMatrix:
    """Immutable sparse rational matrix; zero entries are never stored."""

    rows: int
    cols: int
    entries: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            v = Fraction(v)
            if v:
                clean[(r, c)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def from_dense(cls, data: Iterable[Iterable]) -> "SparseMatrix":
        data = [list(r) for r in data]
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        ent = {(i, j): v for i, r in enumerate(data) for j, v in enumerate(r) if v}
        return cls(nrows, ncols, ent)

    @classmethod
    def from_columns(cls, nrows: int, columns: Iterable[Mapping[int, Fraction]]) -> "SparseMatrix":
        ent = {}
        ncols = 0
        for j, col in enumerate(columns):
            ncols = j + 1
            for i, v in col.items():
                ent[(i, j)] = v
        return cls(nrows, ncols, ent)

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def column_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [dict() for _ in range(self.cols)]
        for (r, c), v in self.entries.items():
            out[c][r] = v
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def is_zero(self) -> bool:
        return not self.entries

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        right = other.row_dicts()
        ent: dict[tuple[int, int], Fraction] = {}
        for (r, k), v in self.entries.items():
            for c, w in right[k].items():
                ent[(r, c)] = ent.get((r, c), 0) + v * w
        return SparseMatrix(self.rows, other.cols, ent)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        ent = dict(self.entries)
        for k, v in other.entries.items():
            ent[k] = ent.get(k, 0) + v
        return SparseMatrix(self.rows, self.cols, ent)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, s) -> "SparseMatrix":
        s = Fraction(s)
        return SparseMatrix(self.rows, self.cols, {k: s * v for k, v in self.entries.items()})

    def hstack(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.rows != other.rows:
            raise ValueError("hstack needs equal row counts")
        ent = dict(self.entries)
        for (r, c), v in other.entries.items():
            ent[(r, c + self.cols)] = v
        return SparseMatrix(self.rows, self.cols + other.cols, ent)

    def apply(self, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Matrix times a sparse column vector."""
        out: dict[int, Fraction] = {}
        for (r, c), v in self.entries.items():
            x = vec.get(c)
            if x:
                out[r] = out.get(r, 0) + v * x
        return {k: v for k, v in out.items() if v}


class Echelon:
    """Incremental fraction-free echelon form of a set of sparse rows.

    With ``trailing=False`` the pivot of a row is its smallest column, which
    yields the pivot columns of the reduced row echelon form.  With
    ``trailing=True`` the pivot is the largest column; the non-pivot columns
    are then exactly the greedy, smallest-index complement of the row span.
    """

    def __init__(self, rows: Iterable[Mapping[int, Fraction]] = (), trailing: bool = False):
        self.trailing = trailing
        self.pivots: dict[int, dict[int, int]] = {}
        for r in rows:
            self.add(r)

    def _lead(self, row: dict[int, int]) -> int:
        return max(row) if self.trailing else min(row)

    def _reduce_int(self, row: dict[int, int]) -> dict[int, int]:
        while row:
            p = self._lead(row)
            prow = self.pivots.get(p)
            if prow is None:
                return row
            a, b = prow[p], row[p]
            g = gcd(a, b)
            row = _combine(row, a // g, prow, b // g)
        return row

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert a row; return True when it enlarged the span."""
        r = self._reduce_int(_primitive(row))
        if not r:
            return False
        self.pivots[self._lead(r)] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def pivot_columns(self) -> list[int]:
        return sorted(self.pivots)

    def contains(self, row: Mapping[int, Fraction]) -> bool:
        return not self._reduce_int(_primitive(row))

    def reduce(self, row: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Reduce a rational row modulo the span; the result avoids all pivots.

        Only valid for ``trailing=True``, where each elimination touches
        columns at or below the pivot, so processing pivots in descending
        order clears every pivot column.
        """
        if not self.trailing:
            raise ValueError("reduce() requires a trailing-pivot echelon")
        out = {k: Fraction(v) for k, v in row.items() if v}
        for p in sorted(self.pivots, reverse=True):
            x = out.get(p)
            if not x:
                continue
            prow = self.pivots[p]
            f = x / prow[p]
            for k, v in prow.items():
                nv = out.get(k, 0) - f * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return out

    def rref_rows(self) -> dict[int, dict[int, Fraction]]:
        """Reduced rows (pivot entry 1, pivot columns cleared elsewhere)."""
        if self.trailing:
            raise ValueError("rref_rows() requires a leading-pivot echelon")
        rows = {p: {k: Fraction(v, r[p]) for k, v in r.items()} for p, r in self.pivots.items()}
        order = sorted(rows, reverse=True)
        for i, p in enumerate(order):
            for q in order[i + 1:]:
                rq = rows[q]
                x = rq.get(p)
                if x:
                    for k, v in rows[p].items():
                        nv = rq.get(k, 0) - x * v
                        if nv:
                            rq[k] = nv
                        else:
                            rq.pop(k, None)
        return rows


def rank(m: SparseMatrix) -> int:
    """Rank of ``m`` over the rationals."""
    rows = m.row_dicts() if m.rows <= m.cols else m.column_dicts()
    return Echelon(r for r in rows if r).rank


def kernel_basis(m: SparseMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the null space, one vector per free column, in ascending order.

    Pivot columns are the lexicographically smallest ones (reduced row
    echelon form); the vector for free column ``f`` has a 1 in position ``f``
    and zeros in every other free position.
    """
    ech = Echelon(r for r in m.row_dicts() if r)
    rref = ech.rref_rows()
    free = [j for j in range(m.cols) if j not in rref]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for p, row in rref.items():
            x = row.get(f)
            if x:
                v[p] = -x
        basis.append(tuple(v))
    return basis


def quotient_dim(ambient_dim: int, generators: SparseMatrix) -> int:
    """Dimension of the ambient space modulo the column span of ``generators``."""
    if generators.rows != ambient_dim:
        raise ValueError(
            f"generators have {generators.rows} rows, ambient dimension is {ambient_dim}")
    return ambient_dim - rank(generators)


def complement_basis(ambient_dim: int, image: SparseMatrix) -> list[int]:
    """Indices of standard basis vectors spanning a complement of the column space.

    A standard vector is kept when it is independent of the image together
    with the vectors already kept, scanning indices in ascending order.
    """
    if image.rows != ambient_dim:
        raise ValueError(f"image has {image.rows} rows, ambient dimension is {ambient_dim}")
    ech = Echelon((c for c in image.column_dicts() if c), trailing=True)
    return [i for i in range(ambient_dim) if i not in ech.pivots]


class Quotient:
    """A finite-dimensional quotient ``V / span(generators)`` with representatives.

    Representatives are the greedy complement indices; :meth:`coords`
    expresses any ambient vector in the basis of representative classes.
    """

    def __init__(self, ambient_dim: int, generators: Iterable[Mapping[int, Fraction]] = ()):
        self.ambient_dim = ambient_dim
        self._ech = Echelon((g for g in generators if g), trailing=True)
        self.representatives = [i for i in range(ambient_dim) if i not in self._ech.pivots]
        self._pos = {r: k for k, r in enumerate(self.representatives)}

    @property
    def dim(self) -> int:
        return len(self.representatives)

    @property
    def relations_rank(self) -> int:
        return self._ech.rank

    def coords(self, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        red = self._ech.reduce(vec)
        return {self._pos[k]: v for k, v in red.items()}

    def is_zero(self, vec: Mapping[int, Fraction]) -> bool:
        return self._ech.contains(vec)


def matrix_from_images(nrows: int, images: Iterable[Mapping[int, Fraction]]) -> SparseMatrix:
    return SparseMatrix.from_columns(nrows, images)
