"""Tensors of rank 2 and 3 over a fixed basis, and bilinear forms.

A rank-2 tensor r = sum r[i][j] e_i (x) e_j doubles as a pair of maps from the
dual space into the space: contracting a covector into the first slot gives
r_plus, into the second slot gives r_minus, so that

    <r_plus(xi), eta> = r(xi, eta) = <xi, r_minus(eta)>.

Slotwise operator application is sparse over the nonzero entries, which keeps
rank-3 work cheap even though storage is dense.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import LinearMap, Vector


def _two(field):
    return field.from_int(2)


@dataclass(frozen=True)
class Tensor2:
    field: object
    coeffs: tuple  # n x n nested tuples

    @staticmethod
    def make(field, grid) -> "Tensor2":
        return Tensor2(field, tuple(tuple(r) for r in grid))

    @staticmethod
    def zero(field, n: int) -> "Tensor2":
        z = field.zero
        return Tensor2(field, tuple((z,) * n for _ in range(n)))

    @staticmethod
    def from_entries(field, n: int, entries: dict) -> "Tensor2":
        grid = [[field.zero] * n for _ in range(n)]
        for (i, j), c in entries.items():
            grid[i][j] = grid[i][j] + c
        return Tensor2.make(field, grid)

    @staticmethod
    def outer(x: Vector, y: Vector) -> "Tensor2":
        return Tensor2(x.field, tuple(tuple(a * b for b in y.coords) for a in x.coords))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def get(self, i: int, j: int):
        return self.coeffs[i][j]

    def items(self):
        z = self.field.zero
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c != z:
                    yield (i, j, c)

    def is_zero(self) -> bool:
        return next(iter(self.items()), None) is None

    def support(self) -> int:
        return sum(1 for _ in self.items())

    def __add__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.field, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.field, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Tensor2":
        return Tensor2(self.field, tuple(tuple(-a for a in r) for r in self.coeffs))

    def scale(self, s) -> "Tensor2":
        return Tensor2(self.field, tuple(tuple(s * a for a in r) for r in self.coeffs))

    def swap(self) -> "Tensor2":
        """Exchange the two slots: e_i (x) e_j -> e_j (x) e_i."""
        return Tensor2(self.field, tuple(zip(*self.coeffs)))

    def skew_part(self) -> "Tensor2":
        return (self - self.swap()).scale(self.field.one / _two(self.field))

    def sym_part(self) -> "Tensor2":
        return (self + self.swap()).scale(self.field.one / _two(self.field))

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def is_skew(self) -> bool:
        return self == -self.swap()

    def apply(self, f, g) -> "Tensor2":
        """Apply f to slot 1 and g to slot 2 (None means the identity)."""
        n = self.n
        z = self.field.zero
        grid = [[z] * n for _ in range(n)]
        for i, j, c in self.items():
            col_f = ((i, self.field.one),) if f is None else _column_items(f, i, z)
            col_g = ((j, self.field.one),) if g is None else _column_items(g, j, z)
            for a, fa in col_f:
                s = c * fa
                for b, gb in col_g:
                    grid[a][b] = grid[a][b] + s * gb
        return Tensor2.make(self.field, grid)

    def contract_left(self, xi: Vector) -> Vector:
        """Pair the covector into slot 1: the r_plus map."""
        z = self.field.zero
        out = [z] * self.n
        for i, j, c in self.items():
            out[j] = out[j] + xi.coords[i] * c
        return Vector(self.field, tuple(out))

    def contract_right(self, eta: Vector) -> Vector:
        """Pair the covector into slot 2: the r_minus map."""
        z = self.field.zero
        out = [z] * self.n
        for i, j, c in self.items():
            out[i] = out[i] + c * eta.coords[j]
        return Vector(self.field, tuple(out))

    def r_plus(self) -> LinearMap:
        return LinearMap(self.field, tuple(zip(*self.coeffs)))

    def r_minus(self) -> LinearMap:
        return LinearMap(self.field, self.coeffs)

    def evaluate(self, xi: Vector, eta: Vector):
        return self.contract_left(xi).pair(eta)


def _column_items(m: LinearMap, j: int, zero):
    return tuple((i, row[j]) for i, row in enumerate(m.entries) if row[j] != zero)


@dataclass(frozen=True)
class Tensor3:
    field: object
    coeffs: tuple  # n x n x n nested tuples

    @staticmethod
    def zero(field, n: int) -> "Tensor3":
        z = field.zero
        plane = tuple((z,) * n for _ in range(n))
        return Tensor3(field, tuple(plane for _ in range(n)))

    @staticmethod
    def from_entries(field, n: int, entries) -> "Tensor3":
        grid = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), c in entries:
            grid[i][j][k] = grid[i][j][k] + c
        return Tensor3(field, tuple(tuple(tuple(r) for r in p) for p in grid))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def items(self):
        z = self.field.zero
        for i, plane in enumerate(self.coeffs):
            for j, row in enumerate(plane):
                for k, c in enumerate(row):
                    if c != z:
                        yield (i, j, k, c)

    def is_zero(self) -> bool:
        return next(iter(self.items()), None) is None

    def support(self) -> int:
        return sum(1 for _ in self.items())

    def __add__(self, other: "Tensor3") -> "Tensor3":
        return Tensor3(
            self.field,
            tuple(
                tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(p, q))
                for p, q in zip(self.coeffs, other.coeffs)
            ),
        )

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        return self + (-other)

    def __neg__(self) -> "Tensor3":
        return Tensor3(self.field, tuple(tuple(tuple(-a for a in r) for r in p) for p in self.coeffs))

    def apply(self, f, g, h) -> "Tensor3":
        """Apply maps to the three slots (None means the identity)."""
        n = self.n
        z = self.field.zero
        one = self.field.one
        grid = [[[z] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, c in self.items():
            col_f = ((i, one),) if f is None else _column_items(f, i, z)
            col_g = ((j, one),) if g is None else _column_items(g, j, z)
            col_h = ((k, one),) if h is None else _column_items(h, k, z)
            for a, fa in col_f:
                cf = c * fa
                for b, gb in col_g:
                    cfg = cf * gb
                    for d, hd in col_h:
                        grid[a][b][d] = grid[a][b][d] + cfg * hd
        return Tensor3(self.field, tuple(tuple(tuple(r) for r in p) for p in grid))

    def swap12(self) -> "Tensor3":
        n = self.n
        return Tensor3(
            self.field,
            tuple(tuple(tuple(self.coeffs[j][i][k] for k in range(n)) for j in range(n)) for i in range(n)),
        )

    def contract_outer(self, xi: Vector, eta: Vector) -> Vector:
        """Pair covectors into slots 1 and 3, leaving a vector in slot 2."""
        z = self.field.zero
        out = [z] * self.n
        for i, j, k, c in self.items():
            out[j] = out[j] + xi.coords[i] * c * eta.coords[k]
        return Vector(self.field, tuple(out))


@dataclass(frozen=True)
class BilinearForm:
    field: object
    matrix: tuple  # n x n nested tuples; entry [i][j] is the value on (e_i, e_j)

    @staticmethod
    def make(field, grid) -> "BilinearForm":
        return BilinearForm(field, tuple(tuple(r) for r in grid))

    @staticmethod
    def zero(field, n: int) -> "BilinearForm":
        z = field.zero
        return BilinearForm(field, tuple((z,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.matrix)

    def evaluate(self, x: Vector, y: Vector):
        acc = self.field.zero
        z = self.field.zero
        for i, xi in enumerate(x.coords):
            if xi == z:
                continue
            for j, yj in enumerate(y.coords):
                if yj == z:
                    continue
                acc = acc + xi * self.matrix[i][j] * yj
        return acc

    def is_skew(self) -> bool:
        n = self.n
        return all(self.matrix[i][j] == -self.matrix[j][i] for i in range(n) for j in range(i, n))

    def as_map(self) -> LinearMap:
        """x -> w(x, .) as a map into the dual space (the sharp map)."""
        return LinearMap(self.field, self.matrix).transpose()

    def is_nondegenerate(self) -> bool:
        return self.as_map().is_invertible()


def canonical_pairing_form(field, n: int) -> BilinearForm:
    """The standard skew form on a space plus its dual, in that basis order:

        w(x + xi, y + eta) = <xi, y> - <eta, x>.
    """
    z, one = field.zero, field.one
    grid = [[z] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        grid[i][n + i] = -one
        grid[n + i][i] = one
    return BilinearForm.make(field, grid)
