"""Structure-constant algebras and the elementary Zinbiel predicates.

An algebra is a sparse table c[i,j] -> list of (k, coefficient) meaning
e_i . e_j = sum_k c_ijk e_k over a fixed basis. A Zinbiel algebra satisfies

    x.(y.z) = (x.y + y.x).z

and its symmetrisation x*y = x.y + y.x is commutative and associative.
All identity checks run over every basis tuple, which certifies the identity
on the whole space by multilinearity.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import FieldError
from .linalg import LinearMap, Vector
from .reports import Clause, Report, Witness

ZINBIEL = "zinbiel"
COMM = "comm"
UNCHECKED = "unchecked"

FLAVORS = (ZINBIEL, COMM, UNCHECKED)


def _normalize(field, dim, products) -> dict:
    table = {}
    for (i, j), terms in products.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"basis index out of range in product ({i + 1},{j + 1})")
        acc = {}
        for k, c in terms:
            if not 0 <= k < dim:
                raise ValueError(f"basis index out of range in product target {k + 1}")
            acc[k] = acc.get(k, field.zero) + c
        cleaned = tuple(sorted((k, c) for k, c in acc.items() if c != field.zero))
        if cleaned:
            table[(i, j)] = cleaned
    return table


@dataclass(frozen=True, eq=False)
class Algebra:
    name: str
    field: object
    dim: int
    products: dict = dc_field(default_factory=dict)
    flavor: str = UNCHECKED

    def __post_init__(self):
        if self.dim <= 0:
            raise ValueError("dimension must be positive")
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        object.__setattr__(self, "products", _normalize(self.field, self.dim, self.products))

    # -- basic vectors ------------------------------------------------------

    def unit(self, i: int) -> Vector:
        return Vector.unit(self.field, self.dim, i)

    def zero_vector(self) -> Vector:
        return Vector.zero(self.field, self.dim)

    def basis(self):
        return [self.unit(i) for i in range(self.dim)]

    # -- products -----------------------------------------------------------

    def basis_product(self, i: int, j: int) -> Vector:
        coords = [self.field.zero] * self.dim
        for k, c in self.products.get((i, j), ()):
            coords[k] = coords[k] + c
        return Vector(self.field, tuple(coords))

    def product(self, x: Vector, y: Vector) -> Vector:
        if x.dim != self.dim or y.dim != self.dim:
            raise ValueError(f"dimension mismatch: algebra {self.name} has dim {self.dim}")
        z = self.field.zero
        coords = [z] * self.dim
        for (i, j), terms in self.products.items():
            s = x.coords[i] * y.coords[j]
            if s == z:
                continue
            for k, c in terms:
                coords[k] = coords[k] + s * c
        return Vector(self.field, tuple(coords))

    def star(self, x: Vector, y: Vector) -> Vector:
        return self.product(x, y) + self.product(y, x)

    # -- multiplication operators -------------------------------------------

    def left_mult(self, x: Vector) -> LinearMap:
        cols = [self.product(x, self.unit(j)) for j in range(self.dim)]
        return LinearMap.from_columns(self.field, cols)

    def right_mult(self, x: Vector) -> LinearMap:
        cols = [self.product(self.unit(j), x) for j in range(self.dim)]
        return LinearMap.from_columns(self.field, cols)

    def star_mult(self, x: Vector) -> LinearMap:
        return self.left_mult(x) + self.right_mult(x)

    def dual_left_mult(self, x: Vector) -> LinearMap:
        """Action on the dual space: m with <m(xi), y> = -<xi, x.y>."""
        return -self.left_mult(x).transpose()

    def dual_right_mult(self, x: Vector) -> LinearMap:
        """Action on the dual space: m with <m(xi), y> = -<xi, y.x>."""
        return -self.right_mult(x).transpose()

    # -- comparisons ---------------------------------------------------------

    def structure_equal(self, other: "Algebra") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.products == other.products
        )

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim}, {self.field}, {self.flavor})"


def mult_operators(A: Algebra, x: Vector) -> tuple[LinearMap, LinearMap]:
    """Left and right multiplication by x, as matrices."""
    return A.left_mult(x), A.right_mult(x)


def product(A: Algebra, x: Vector, y: Vector) -> Vector:
    return A.product(x, y)


# -- identity checks ---------------------------------------------------------


def check_zinbiel(A: Algebra) -> Report:
    """x.(y.z) = (x.y + y.x).z over all basis triples."""
    witness = None
    e = A.basis()
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                lhs = A.product(e[i], A.product(e[j], e[k]))
                rhs = A.product(A.star(e[i], e[j]), e[k])
                if lhs != rhs:
                    witness = Witness((i + 1, j + 1, k + 1), lhs.format(), rhs.format())
                    break
            if witness:
                break
        if witness:
            break
    return Report(A.name, (Clause("zinbiel", witness is None, witness),))


def check_left_commutativity(A: Algebra) -> Report:
    """x.(y.z) = y.(x.z) over all basis triples; a consequence of the Zinbiel identity."""
    witness = None
    e = A.basis()
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                lhs = A.product(e[i], A.product(e[j], e[k]))
                rhs = A.product(e[j], A.product(e[i], e[k]))
                if lhs != rhs:
                    witness = Witness((i + 1, j + 1, k + 1), lhs.format(), rhs.format())
                    break
            if witness:
                break
        if witness:
            break
    return Report(A.name, (Clause("left-commutativity", witness is None, witness),))


def check_commutative(A: Algebra) -> Report:
    witness = None
    e = A.basis()
    for i in range(A.dim):
        for j in range(i, A.dim):
            lhs = A.product(e[i], e[j])
            rhs = A.product(e[j], e[i])
            if lhs != rhs:
                witness = Witness((i + 1, j + 1), lhs.format(), rhs.format())
                break
        if witness:
            break
    return Report(A.name, (Clause("commutative", witness is None, witness),))


def check_associative(A: Algebra) -> Report:
    witness = None
    e = A.basis()
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                lhs = A.product(A.product(e[i], e[j]), e[k])
                rhs = A.product(e[i], A.product(e[j], e[k]))
                if lhs != rhs:
                    witness = Witness((i + 1, j + 1, k + 1), lhs.format(), rhs.format())
                    break
            if witness:
                break
        if witness:
            break
    return Report(A.name, (Clause("associative", witness is None, witness),))


def check_comm_assoc(A: Algebra) -> Report:
    return Report(A.name, check_commutative(A).clauses + check_associative(A).clauses)


def sub_adjacent(A: Algebra) -> Algebra:
    """Symmetrised algebra x*y = x.y + y.x; commutative associative when A is Zinbiel."""
    check_zinbiel(A).require(f"sub_adjacent({A.name})")
    prods = {}
    for i in range(A.dim):
        for j in range(A.dim):
            v = A.star(A.unit(i), A.unit(j))
            terms = [(k, c) for k, c in enumerate(v.coords) if c != A.field.zero]
            if terms:
                prods[(i, j)] = terms
    return Algebra(f"{A.name}^c", A.field, A.dim, prods, COMM)


def change_field(A: Algebra, new_field) -> Algebra:
    """Reinterpret the structure constants over another field.

    Rational constants move to F_p through num/den; a denominator divisible
    by p is rejected.
    """
    prods = {}
    for key, terms in A.products.items():
        out = []
        for k, c in terms:
            out.append((k, _convert_scalar(c, new_field)))
        prods[key] = out
    return Algebra(A.name, new_field, A.dim, prods, A.flavor)


def _convert_scalar(c, new_field):
    num = getattr(c, "numerator", None)
    if num is not None:
        den = c.denominator
        try:
            return new_field.from_int(num) / new_field.from_int(den)
        except ZeroDivisionError:
            raise FieldError(f"denominator {den} vanishes in {new_field.name}") from None
    return new_field.from_int(c.value)


def direct_sum(A: Algebra, B: Algebra, name: str | None = None) -> Algebra:
    """Componentwise product on the direct sum of the underlying spaces."""
    if A.field != B.field:
        raise ValueError("fields differ")
    prods = {}
    for (i, j), terms in A.products.items():
        prods[(i, j)] = list(terms)
    for (i, j), terms in B.products.items():
        prods[(A.dim + i, A.dim + j)] = [(A.dim + k, c) for k, c in terms]
    flavor = A.flavor if A.flavor == B.flavor else UNCHECKED
    return Algebra(name or f"{A.name}(+){B.name}", A.field, A.dim + B.dim, prods, flavor)


def algebra_from_vectors(name, field, dim, product_fn, flavor=UNCHECKED) -> Algebra:
    """Build the sparse table by evaluating product_fn on basis pairs."""
    prods = {}
    for i in range(dim):
        for j in range(dim):
            v = product_fn(i, j)
            terms = [(k, c) for k, c in enumerate(v.coords) if c != field.zero]
            if terms:
                prods[(i, j)] = terms
    return Algebra(name, field, dim, prods, flavor)
