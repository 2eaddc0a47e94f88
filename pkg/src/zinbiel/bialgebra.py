"""Zinbiel bialgebras, quadratic algebras, Manin triples, and their equivalence.

A bialgebra is a pair of Zinbiel products, one on the space and one on its
dual, whose cobracket views alpha (dual of the dual product) and beta (dual of
the primal product) each satisfy a derivation-style cocycle identity over the
symmetrised product. The same data appears as the coregular matched pair on
(A, A*) and as the Manin triple carried by the canonical skew pairing form on
A (+) A*; the three validity checks agree and the conversions are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (
    Algebra,
    UNCHECKED,
    ZINBIEL,
    algebra_from_vectors,
    check_zinbiel,
)
from .linalg import LinearMap, Vector, in_span, solve, span_rank
from .matched_pairs import (
    MatchedPairData,
    bowtie,
    check_matched_pair,
    coregular_matched_pair,
)
from .reports import Clause, Report, Witness, merge
from .tensors import BilinearForm, Tensor2, canonical_pairing_form


@dataclass(frozen=True)
class Bialgebra:
    """Primal product on the space, dual product on the dual space.

    The cobrackets are derived views of the two tables, never stored: the
    cobracket of the k-th basis vector collects the dual structure constants
    with target k.
    """

    primal: Algebra
    dual: Algebra

    def __post_init__(self):
        if self.primal.dim != self.dual.dim:
            raise ValueError("primal and dual must have equal dimension")
        if self.primal.field != self.dual.field:
            raise ValueError("primal and dual must share the field")

    @property
    def dim(self) -> int:
        return self.primal.dim

    @property
    def field(self):
        return self.primal.field

    def alpha(self, k: int) -> Tensor2:
        """Cobracket of e_k, read off the dual structure constants."""
        return _cobracket(self.dual, k)

    def beta(self, k: int) -> Tensor2:
        """Dual-side cobracket of the k-th dual basis vector."""
        return _cobracket(self.primal, k)

    def alpha_of(self, x: Vector) -> Tensor2:
        acc = Tensor2.zero(self.field, self.dim)
        z = self.field.zero
        for k, c in enumerate(x.coords):
            if c != z:
                acc = acc + self.alpha(k).scale(c)
        return acc

    def beta_of(self, xi: Vector) -> Tensor2:
        acc = Tensor2.zero(self.field, self.dim)
        z = self.field.zero
        for k, c in enumerate(xi.coords):
            if c != z:
                acc = acc + self.beta(k).scale(c)
        return acc

    def flip(self) -> "Bialgebra":
        """The dual bialgebra: swap the roles of the two products."""
        return Bialgebra(self.dual, self.primal)


def _cobracket(table: Algebra, k: int) -> Tensor2:
    entries = {}
    for (i, j), terms in table.products.items():
        for tk, c in terms:
            if tk == k:
                entries[(i, j)] = entries.get((i, j), table.field.zero) + c
    return Tensor2.from_entries(table.field, table.dim, entries)


def trivial_bialgebra(A: Algebra) -> Bialgebra:
    zero_dual = Algebra(f"{A.name}*", A.field, A.dim, {}, ZINBIEL)
    return Bialgebra(A, zero_dual)


def _cocycle_report(primary: Algebra, dual_table: Algebra, tag: str) -> Report:
    """The derivation identity for the cobracket read off `dual_table`:

        alpha(x*y) = (L_x (x) Id) alpha(y) + (Id (x) (L_y + R_y)) alpha(x)

    with products and multiplications taken in `primary`.
    """
    n = primary.dim
    alphas = [_cobracket(dual_table, k) for k in range(n)]

    def alpha_of(v: Vector) -> Tensor2:
        acc = Tensor2.zero(primary.field, n)
        z = primary.field.zero
        for k, c in enumerate(v.coords):
            if c != z:
                acc = acc + alphas[k].scale(c)
        return acc

    witness = None
    for i in range(n):
        x = primary.unit(i)
        lx = primary.left_mult(x)
        for j in range(n):
            y = primary.unit(j)
            lhs = alpha_of(primary.star(x, y))
            rhs = alphas[j].apply(lx, None) + alphas[i].apply(None, primary.star_mult(y))
            if lhs != rhs:
                witness = Witness((i + 1, j + 1), _fmt_t2(lhs), _fmt_t2(rhs))
                break
        if witness:
            break
    return Report(primary.name, (Clause(tag, witness is None, witness),))


def _fmt_t2(t: Tensor2) -> str:
    parts = [f"{t.field.format(c)}*({i + 1},{j + 1})" for i, j, c in t.items()]
    return " + ".join(parts) if parts else "0"


def check_alpha_cocycle(B: Bialgebra) -> Report:
    return _cocycle_report(B.primal, B.dual, "cocycle-alpha")


def check_beta_cocycle(B: Bialgebra) -> Report:
    return _cocycle_report(B.dual, B.primal, "cocycle-beta")


def check_bialgebra(B: Bialgebra) -> Report:
    clauses = []
    zp = check_zinbiel(B.primal)
    clauses.append(Clause("primal-zinbiel", zp.ok, _first_witness(zp)))
    zd = check_zinbiel(B.dual)
    clauses.append(Clause("dual-zinbiel", zd.ok, _first_witness(zd)))
    if zp.ok and zd.ok:
        clauses.extend(check_alpha_cocycle(B).clauses)
        clauses.extend(check_beta_cocycle(B).clauses)
    return Report(f"bialgebra ({B.primal.name}, {B.dual.name})", tuple(clauses))


def _first_witness(report: Report):
    for c in report.failures():
        return c.witness
    return None


# -- quadratic algebras and Manin triples -------------------------------------


@dataclass(frozen=True)
class QuadraticAlgebra:
    algebra: Algebra
    omega: BilinearForm

    def __post_init__(self):
        if self.omega.n != self.algebra.dim:
            raise ValueError("form dimension mismatch")


def check_quadratic(Q: QuadraticAlgebra) -> Report:
    A, w = Q.algebra, Q.omega
    clauses = [Clause("skew", w.is_skew(), None), Clause("nondegenerate", w.is_nondegenerate(), None)]

    e = A.basis()
    inv_witness = None
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                lhs = w.evaluate(A.product(e[i], e[j]), e[k])
                rhs = w.evaluate(e[j], A.star(e[i], e[k]))
                if lhs != rhs:
                    inv_witness = Witness(
                        (i + 1, j + 1, k + 1), A.field.format(lhs), A.field.format(rhs)
                    )
                    break
            if inv_witness:
                break
        if inv_witness:
            break
    clauses.append(Clause("invariance", inv_witness is None, inv_witness))

    # redundant consequence: w(x.y, z) = w(z.y, x)
    sym_witness = None
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                lhs = w.evaluate(A.product(e[i], e[j]), e[k])
                rhs = w.evaluate(A.product(e[k], e[j]), e[i])
                if lhs != rhs:
                    sym_witness = Witness(
                        (i + 1, j + 1, k + 1), A.field.format(lhs), A.field.format(rhs)
                    )
                    break
            if sym_witness:
                break
        if sym_witness:
            break
    clauses.append(Clause("exchange-symmetry", sym_witness is None, sym_witness))

    return Report(f"quadratic {A.name}", tuple(clauses))


@dataclass(frozen=True)
class ManinTripleData:
    ambient: QuadraticAlgebra
    part_one: tuple  # basis of the first isotropic subalgebra, as ambient vectors
    part_two: tuple


def check_manin_triple(M: ManinTripleData) -> Report:
    A = M.ambient.algebra
    w = M.ambient.omega
    field = A.field
    clauses = list(check_quadratic(M.ambient).clauses)

    total = list(M.part_one) + list(M.part_two)
    spanning = (
        len(total) == A.dim
        and span_rank(total, field) == A.dim
        and span_rank(list(M.part_one), field) == len(M.part_one)
        and span_rank(list(M.part_two), field) == len(M.part_two)
    )
    clauses.append(Clause("direct-sum", spanning, None))

    for tag, part in (("closure-1", M.part_one), ("closure-2", M.part_two)):
        witness = None
        for a, u in enumerate(part):
            for b, v in enumerate(part):
                prod = A.product(u, v)
                if not in_span(list(part), prod, field):
                    witness = Witness((a + 1, b + 1), prod.format(), "span")
                    break
            if witness:
                break
        clauses.append(Clause(tag, witness is None, witness))

    for tag, part in (("isotropy-1", M.part_one), ("isotropy-2", M.part_two)):
        witness = None
        for a, u in enumerate(part):
            for b, v in enumerate(part):
                val = w.evaluate(u, v)
                if val != field.zero:
                    witness = Witness((a + 1, b + 1), field.format(val), "0")
                    break
            if witness:
                break
        clauses.append(Clause(tag, witness is None, witness))

    return Report(f"Manin triple in {A.name}", tuple(clauses))


# -- conversions ---------------------------------------------------------------


def double_space_algebra(B: Bialgebra, name: str | None = None) -> Algebra:
    """The bowtie of the coregular matched pair on A (+) A*."""
    return bowtie(bialgebra_to_matched_pair(B), name or f"D({B.primal.name})")


def bialgebra_to_matched_pair(B: Bialgebra) -> MatchedPairData:
    return coregular_matched_pair(B.primal, B.dual)


def bialgebra_to_manin(B: Bialgebra) -> ManinTripleData:
    check_bialgebra(B).require("bialgebra_to_manin")
    amb = double_space_algebra(B)
    n = B.dim
    field = B.field
    omega = canonical_pairing_form(field, n)
    part_one = tuple(Vector.unit(field, 2 * n, i) for i in range(n))
    part_two = tuple(Vector.unit(field, 2 * n, n + i) for i in range(n))
    quad = QuadraticAlgebra(Algebra(amb.name, field, amb.dim, amb.products, ZINBIEL), omega)
    return ManinTripleData(quad, part_one, part_two)


def manin_to_bialgebra(M: ManinTripleData) -> Bialgebra:
    """Read both products off a Manin triple, pairing the second part dually.

    The second part's basis is renormalised so that the ambient form pairs it
    dually with the first part; for triples produced by `bialgebra_to_manin`
    this renormalisation is the identity and the roundtrip is exact.
    """
    check_manin_triple(M).require("manin_to_bialgebra")
    A = M.ambient.algebra
    w = M.ambient.omega
    field = A.field
    n = len(M.part_one)
    if len(M.part_two) != n:
        raise ValueError("parts must have equal dimension to pair dually")

    pairing = LinearMap.make(
        field, [[w.evaluate(g, f) for f in M.part_one] for g in M.part_two]
    )
    if not pairing.is_invertible():
        raise ValueError("parts do not pair nondegenerately")
    q = pairing.inverse()
    dual_basis = []
    for a in range(n):
        acc = Vector.zero(field, A.dim)
        for c in range(n):
            acc = acc + M.part_two[c].scale(q.entries[a][c])
        dual_basis.append(acc)

    primal = _subalgebra_constants("A", A, list(M.part_one))
    dual = _subalgebra_constants("A*", A, dual_basis)
    return Bialgebra(primal, dual)


def _subalgebra_constants(name: str, amb: Algebra, basis: list) -> Algebra:
    field = amb.field
    mat = LinearMap.from_columns(field, basis)

    def prod(i, j):
        p = amb.product(basis[i], basis[j])
        sol = solve(mat, p)
        if sol is None:
            raise ValueError("subspace not closed under the product")
        return sol

    return algebra_from_vectors(name, field, len(basis), prod, UNCHECKED)


# -- homomorphisms and transport ------------------------------------------------


def transport_bialgebra(B: Bialgebra, phi: LinearMap) -> Bialgebra:
    """Move both products through an invertible map of the underlying space."""
    if not phi.is_invertible():
        raise ValueError("transport requires an invertible map")
    inv = phi.inverse()
    phit = phi.transpose()
    invt = inv.transpose()
    field = B.field
    n = B.dim

    def prod_primal(i, j):
        return phi.apply(B.primal.product(inv.column(i), inv.column(j)))

    def prod_dual(i, j):
        return invt.apply(B.dual.product(phit.column(i), phit.column(j)))

    primal = algebra_from_vectors(f"{B.primal.name}~", field, n, prod_primal, B.primal.flavor)
    dual = algebra_from_vectors(f"{B.dual.name}~", field, n, prod_dual, B.dual.flavor)
    return Bialgebra(primal, dual)


def check_algebra_hom(A: Algebra, B: Algebra, phi: LinearMap, tag: str = "hom") -> Report:
    witness = None
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = phi.apply(A.basis_product(i, j))
            rhs = B.product(phi.column(i), phi.column(j))
            if lhs != rhs:
                witness = Witness((i + 1, j + 1), lhs.format(), rhs.format())
                break
        if witness:
            break
    return Report(f"{A.name} -> {B.name}", (Clause(tag, witness is None, witness),))


def check_bialgebra_hom(B1: Bialgebra, B2: Bialgebra, phi: LinearMap) -> Report:
    primal = check_algebra_hom(B1.primal, B2.primal, phi, "hom-primal")
    dual = check_algebra_hom(B2.dual, B1.dual, phi.transpose(), "hom-dual-pullback")
    return Report(f"bialgebra map {B1.primal.name} -> {B2.primal.name}", primal.clauses + dual.clauses)
