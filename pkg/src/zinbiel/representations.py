"""Representations of Zinbiel algebras and of their symmetrised algebras.

A representation is a pair of operator families (rho, mu) on a module V with

    rho(x)rho(y) = rho(x.y) + rho(y.x)
    rho(x)mu(y)  = mu(x.y)  = mu(y)rho(x) + mu(y)mu(x)

which holds exactly when the semidirect sum A (+) V is again Zinbiel. The dual
module carries ((rho+mu)^T, -mu^T); specialising to (L, R) gives the coregular
representation on the dual space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, UNCHECKED, ZINBIEL, algebra_from_vectors, check_zinbiel
from .linalg import LinearMap, Vector
from .reports import Clause, Report, Witness


@dataclass(frozen=True)
class Representation:
    base: Algebra
    space_dim: int
    rho: tuple  # one operator per basis element of the base
    mu: tuple

    def __post_init__(self):
        if len(self.rho) != self.base.dim or len(self.mu) != self.base.dim:
            raise ValueError("one operator per basis element required")
        for m in (*self.rho, *self.mu):
            if m.rows != self.space_dim or m.cols != self.space_dim:
                raise ValueError("operator shape mismatch")

    def rho_of(self, x: Vector) -> LinearMap:
        return _combine(self.rho, x, self.space_dim)

    def mu_of(self, x: Vector) -> LinearMap:
        return _combine(self.mu, x, self.space_dim)


def _combine(ops, x: Vector, m: int) -> LinearMap:
    acc = LinearMap.zeros(x.field, m, m)
    z = x.field.zero
    for i, c in enumerate(x.coords):
        if c != z:
            acc = acc + ops[i].scale(c)
    return acc


def check_representation(V: Representation) -> Report:
    A = V.base
    w1 = w2 = w3 = None
    for i in range(A.dim):
        for j in range(A.dim):
            prod_ij = A.basis_product(i, j)
            prod_ji = A.basis_product(j, i)
            if w1 is None:
                lhs = V.rho[i] @ V.rho[j]
                rhs = V.rho_of(prod_ij) + V.rho_of(prod_ji)
                if lhs != rhs:
                    w1 = Witness((i + 1, j + 1), _fmt(lhs), _fmt(rhs))
            mid = V.mu_of(prod_ij)
            if w2 is None:
                lhs = V.rho[i] @ V.mu[j]
                if lhs != mid:
                    w2 = Witness((i + 1, j + 1), _fmt(lhs), _fmt(mid))
            if w3 is None:
                rhs = V.mu[j] @ V.rho[i] + V.mu[j] @ V.mu[i]
                if mid != rhs:
                    w3 = Witness((i + 1, j + 1), _fmt(mid), _fmt(rhs))
    return Report(
        f"representation on dim {V.space_dim} over {A.name}",
        (
            Clause("rep-rho", w1 is None, w1),
            Clause("rep-mix", w2 is None, w2),
            Clause("rep-mu", w3 is None, w3),
        ),
    )


def _fmt(m: LinearMap) -> str:
    return "[" + "; ".join(" ".join(m.field.format(a) for a in row) for row in m.entries) + "]"


def dual_representation(V: Representation) -> Representation:
    """The module structure on the dual space: ((rho+mu)^T, -mu^T)."""
    rho = tuple((V.rho[i] + V.mu[i]).transpose() for i in range(V.base.dim))
    mu = tuple(-V.mu[i].transpose() for i in range(V.base.dim))
    return Representation(V.base, V.space_dim, rho, mu)


def regular_representation(A: Algebra) -> Representation:
    rho = tuple(A.left_mult(A.unit(i)) for i in range(A.dim))
    mu = tuple(A.right_mult(A.unit(i)) for i in range(A.dim))
    return Representation(A, A.dim, rho, mu)


def coregular_representation(A: Algebra) -> Representation:
    """Dual of the regular representation: ((L+R)^T, -R^T) per basis element."""
    return dual_representation(regular_representation(A))


def trivial_representation(A: Algebra, m: int) -> Representation:
    zero = LinearMap.zeros(A.field, m, m)
    return Representation(A, m, (zero,) * A.dim, (zero,) * A.dim)


def semidirect_product(A: Algebra, V: Representation, name: str | None = None) -> Algebra:
    """Product on A (+) V:  (x+u).(y+v) = x.y + rho(x)v + mu(y)u."""
    if V.base is not A and not V.base.structure_equal(A):
        raise ValueError("representation is over a different algebra")
    n, m = A.dim, V.space_dim
    field = A.field

    def prod(i, j):
        if i < n and j < n:
            return A.basis_product(i, j).concat(Vector.zero(field, m))
        if i < n <= j:
            return Vector.zero(field, n).concat(V.rho[i].column(j - n))
        if j < n <= i:
            return Vector.zero(field, n).concat(V.mu[j].column(i - n))
        return Vector.zero(field, n + m)

    return algebra_from_vectors(name or f"{A.name}|x|V", field, n + m, prod, UNCHECKED)


@dataclass(frozen=True)
class CommRepresentation:
    base: Algebra  # commutative associative
    space_dim: int
    zeta: tuple

    def zeta_of(self, x: Vector) -> LinearMap:
        return _combine(self.zeta, x, self.space_dim)


def check_comm_representation(V: CommRepresentation) -> Report:
    A = V.base
    witness = None
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = V.zeta_of(A.basis_product(i, j))
            rhs = V.zeta[i] @ V.zeta[j]
            if lhs != rhs:
                witness = Witness((i + 1, j + 1), _fmt(lhs), _fmt(rhs))
                break
        if witness:
            break
    return Report(
        f"module on dim {V.space_dim} over {A.name}",
        (Clause("comm-rep", witness is None, witness),),
    )


def perturb_representation(V: Representation, which: str, op_index: int, row: int, col: int) -> Representation:
    """Bump one operator entry by one; the standard mutation for fuzzing."""
    ops = list(V.rho if which == "rho" else V.mu)
    entries = [list(r) for r in ops[op_index].entries]
    entries[row][col] = entries[row][col] + V.base.field.one
    ops[op_index] = LinearMap.make(V.base.field, entries)
    if which == "rho":
        return Representation(V.base, V.space_dim, tuple(ops), V.mu)
    return Representation(V.base, V.space_dim, V.rho, tuple(ops))
