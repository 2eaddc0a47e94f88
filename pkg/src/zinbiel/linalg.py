"""Exact vectors and matrices over a coefficient field.

Everything is immutable and pure; elimination is plain Gauss-Jordan with exact
division, which is all the tiny dimensions here ever need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class Vector:
    field: object
    coords: tuple

    @staticmethod
    def make(field, coords) -> "Vector":
        return Vector(field, tuple(coords))

    @staticmethod
    def zero(field, n: int) -> "Vector":
        return Vector(field, (field.zero,) * n)

    @staticmethod
    def unit(field, n: int, i: int) -> "Vector":
        z = field.zero
        return Vector(field, tuple(field.one if j == i else z for j in range(n)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(c == z for c in self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch {self.dim} vs {other.dim}")
        return Vector(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch {self.dim} vs {other.dim}")
        return Vector(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vector":
        return Vector(self.field, tuple(-a for a in self.coords))

    def scale(self, s) -> "Vector":
        return Vector(self.field, tuple(s * a for a in self.coords))

    def pair(self, other: "Vector"):
        """Canonical dual pairing: sum of coordinatewise products."""
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch {self.dim} vs {other.dim}")
        acc = self.field.zero
        for a, b in zip(self.coords, other.coords):
            acc = acc + a * b
        return acc

    def concat(self, other: "Vector") -> "Vector":
        return Vector(self.field, self.coords + other.coords)

    def split(self, n: int) -> tuple["Vector", "Vector"]:
        return Vector(self.field, self.coords[:n]), Vector(self.field, self.coords[n:])

    def format(self, prefix: str = "e") -> str:
        z = self.field.zero
        parts = []
        for i, c in enumerate(self.coords):
            if c == z:
                continue
            coef = self.field.format(c)
            parts.append(f"{coef}*{prefix}{i + 1}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class LinearMap:
    """Matrix in basis coordinates; column j is the image of the j-th basis vector."""

    field: object
    entries: tuple  # rows, each a tuple of scalars

    @staticmethod
    def make(field, rows) -> "LinearMap":
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        return LinearMap(field, rows)

    @staticmethod
    def zeros(field, rows: int, cols: int) -> "LinearMap":
        z = field.zero
        return LinearMap(field, tuple((z,) * cols for _ in range(rows)))

    @staticmethod
    def identity(field, n: int) -> "LinearMap":
        z, o = field.zero, field.one
        return LinearMap(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @staticmethod
    def from_columns(field, cols: Sequence[Vector]) -> "LinearMap":
        rows = len(cols[0].coords)
        return LinearMap(field, tuple(tuple(c.coords[i] for c in cols) for i in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int) -> Vector:
        return Vector(self.field, tuple(r[j] for r in self.entries))

    def apply(self, v: Vector) -> Vector:
        if v.dim != self.cols:
            raise ValueError(f"dimension mismatch: map has {self.cols} columns, vector has {v.dim}")
        out = []
        for row in self.entries:
            acc = self.field.zero
            for a, b in zip(row, v.coords):
                acc = acc + a * b
            out.append(acc)
        return Vector(self.field, tuple(out))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if self.cols != other.rows:
            raise ValueError(f"composition mismatch: {self.cols} vs {other.rows}")
        z = self.field.zero
        ot = tuple(zip(*other.entries))  # columns of other
        rows = []
        for r in self.entries:
            rows.append(tuple(_dot(r, c, z) for c in ot))
        return LinearMap(self.field, tuple(rows))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._same_shape(other)
        return LinearMap(self.field, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        self._same_shape(other)
        return LinearMap(self.field, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "LinearMap":
        return LinearMap(self.field, tuple(tuple(-a for a in r) for r in self.entries))

    def scale(self, s) -> "LinearMap":
        return LinearMap(self.field, tuple(tuple(s * a for a in r) for r in self.entries))

    def transpose(self) -> "LinearMap":
        return LinearMap(self.field, tuple(zip(*self.entries)) if self.entries else ())

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(a == z for r in self.entries for a in r)

    def rank(self) -> int:
        reduced, pivots = rref([list(r) for r in self.entries], self.field)
        return len(pivots)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "LinearMap":
        if self.rows != self.cols:
            raise ValueError("only square maps invert")
        n = self.rows
        aug = [list(r) + list(LinearMap.identity(self.field, n).entries[i]) for i, r in enumerate(self.entries)]
        reduced, pivots = rref(aug, self.field)
        if len(pivots) != n or pivots != list(range(n)):
            raise ValueError("singular map")
        return LinearMap(self.field, tuple(tuple(reduced[i][n:]) for i in range(n)))

    def _same_shape(self, other: "LinearMap"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def _dot(a, b, zero):
    acc = zero
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


def rref(rows: list, field) -> tuple[list, list]:
    """Reduced row echelon form (in place on the given row lists); returns pivot columns."""
    if not rows:
        return rows, []
    z = field.zero
    n_rows, n_cols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != z), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != z:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def solve(mat: LinearMap, target: Vector) -> Optional[Vector]:
    """One solution of mat @ x = target, or None when inconsistent."""
    if target.dim != mat.rows:
        raise ValueError("dimension mismatch")
    z = mat.field.zero
    aug = [list(r) + [t] for r, t in zip(mat.entries, target.coords)]
    reduced, pivots = rref(aug, mat.field)
    n = mat.cols
    for i in range(len(pivots), mat.rows):
        if reduced[i][n] != z:
            return None
    sol = [z] * n
    for i, c in enumerate(pivots):
        sol[c] = reduced[i][n]
    return Vector(mat.field, tuple(sol))


def span_rank(vectors: Sequence[Vector], field) -> int:
    if not vectors:
        return 0
    rows = [list(v.coords) for v in vectors]
    _, pivots = rref(rows, field)
    return len(pivots)


def in_span(vectors: Sequence[Vector], v: Vector, field) -> bool:
    base = span_rank(vectors, field)
    return span_rank(list(vectors) + [v], field) == base
