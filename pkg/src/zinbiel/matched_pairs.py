"""Matched pairs of Zinbiel (and commutative associative) algebras.

Two algebras acting on each other form a matched pair when both actions are
representations and six mixed compatibility identities hold; equivalently the
direct sum carries a Zinbiel product (the bowtie). Symmetrising a matched
pair gives a matched pair of commutative associative algebras whose bowtie is
the symmetrisation of the Zinbiel bowtie.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, COMM, UNCHECKED, algebra_from_vectors
from .linalg import LinearMap, Vector
from .reports import Clause, Report, Witness
from .representations import Representation, check_representation, _combine


@dataclass(frozen=True)
class MatchedPairData:
    A: Algebra
    B: Algebra
    rho: tuple  # A-basis indexed operators on B
    mu: tuple
    rhop: tuple  # B-basis indexed operators on A
    mup: tuple

    def rho_of(self, x: Vector) -> LinearMap:
        return _combine(self.rho, x, self.B.dim)

    def mu_of(self, x: Vector) -> LinearMap:
        return _combine(self.mu, x, self.B.dim)

    def rhop_of(self, u: Vector) -> LinearMap:
        return _combine(self.rhop, u, self.A.dim)

    def mup_of(self, u: Vector) -> LinearMap:
        return _combine(self.mup, u, self.A.dim)


def check_matched_pair(M: MatchedPairData) -> Report:
    A, B = M.A, M.B
    clauses = []
    rep_b = check_representation(Representation(A, B.dim, M.rho, M.mu))
    clauses.append(Clause("rep-on-B", rep_b.ok, _first_witness(rep_b)))
    rep_a = check_representation(Representation(B, A.dim, M.rhop, M.mup))
    clauses.append(Clause("rep-on-A", rep_a.ok, _first_witness(rep_a)))

    ea = A.basis()
    eb = B.basis()

    def mixed_1(x, i, u, a, v, b):
        lhs = B.product(u, M.mu[i].apply(v)) + M.mu_of(M.rhop[b].apply(x)).apply(u)
        rhs = M.mu[i].apply(B.product(u, v) + B.product(v, u))
        return lhs, rhs

    def mixed_2(x, i, u, a, v, b):
        lhs = M.rho[i].apply(B.product(u, v)) - B.product(M.rho[i].apply(u), v)
        rhs = (
            M.rho_of(M.mup[a].apply(x)).apply(v)
            + B.product(M.mu[i].apply(u), v)
            + M.rho_of(M.rhop[a].apply(x)).apply(v)
        )
        return lhs, rhs

    def mixed_3(x, i, u, a, v, b):
        lhs = (
            B.product(u, M.rho[i].apply(v))
            + M.mu_of(M.mup[b].apply(x)).apply(u)
            - B.product(M.mu[i].apply(u), v)
        )
        rhs = (
            B.product(M.rho[i].apply(u), v)
            + M.rho_of(M.mup[a].apply(x)).apply(v)
            + M.rho_of(M.rhop[a].apply(x)).apply(v)
        )
        return lhs, rhs

    def mixed_4(u, a, x, i, y, j):
        lhs = A.product(x, M.mup[a].apply(y)) + M.mup_of(M.rho[j].apply(u)).apply(x)
        rhs = M.mup[a].apply(A.product(x, y) + A.product(y, x))
        return lhs, rhs

    def mixed_5(u, a, x, i, y, j):
        lhs = M.rhop[a].apply(A.product(x, y)) - A.product(M.rhop[a].apply(x), y)
        rhs = (
            M.rhop_of(M.mu[i].apply(u)).apply(y)
            + A.product(M.mup[a].apply(x), y)
            + M.rhop_of(M.rho[i].apply(u)).apply(y)
        )
        return lhs, rhs

    def mixed_6(u, a, x, i, y, j):
        lhs = (
            A.product(x, M.rhop[a].apply(y))
            + M.mup_of(M.mu[j].apply(u)).apply(x)
            - A.product(M.mup[a].apply(x), y)
        )
        rhs = (
            A.product(M.rhop[a].apply(x), y)
            + M.rhop_of(M.mu[i].apply(u)).apply(y)
            + M.rhop_of(M.rho[i].apply(u)).apply(y)
        )
        return lhs, rhs

    for name, fn in (("mp-1", mixed_1), ("mp-2", mixed_2), ("mp-3", mixed_3)):
        witness = None
        for i, x in enumerate(ea):
            for a, u in enumerate(eb):
                for b, v in enumerate(eb):
                    lhs, rhs = fn(x, i, u, a, v, b)
                    if lhs != rhs:
                        witness = Witness((i + 1, a + 1, b + 1), lhs.format(), rhs.format(), "x,u,v")
                        break
                if witness:
                    break
            if witness:
                break
        clauses.append(Clause(name, witness is None, witness))

    for name, fn in (("mp-4", mixed_4), ("mp-5", mixed_5), ("mp-6", mixed_6)):
        witness = None
        for a, u in enumerate(eb):
            for i, x in enumerate(ea):
                for j, y in enumerate(ea):
                    lhs, rhs = fn(u, a, x, i, y, j)
                    if lhs != rhs:
                        witness = Witness((a + 1, i + 1, j + 1), lhs.format(), rhs.format(), "u,x,y")
                        break
                if witness:
                    break
            if witness:
                break
        clauses.append(Clause(name, witness is None, witness))

    return Report(f"matched pair ({A.name}, {B.name})", tuple(clauses))


def _first_witness(report: Report):
    for c in report.failures():
        return c.witness
    return None


def bowtie(M: MatchedPairData, name: str | None = None) -> Algebra:
    """Product on A (+) B combining both algebras and both actions."""
    A, B = M.A, M.B
    n, m = A.dim, B.dim
    field = A.field

    def prod(i, j):
        if i < n and j < n:
            return A.basis_product(i, j).concat(Vector.zero(field, m))
        if i < n <= j:
            # x . v = mu'(v)x + rho(x)v
            return M.mup[j - n].column(i).concat(M.rho[i].column(j - n))
        if j < n <= i:
            # u . y = rho'(u)y + mu(y)u
            return M.rhop[i - n].column(j).concat(M.mu[j].column(i - n))
        return Vector.zero(field, n).concat(B.basis_product(i - n, j - n))

    return algebra_from_vectors(name or f"{A.name}|><|{B.name}", field, n + m, prod, UNCHECKED)


@dataclass(frozen=True)
class CommMatchedPairData:
    A: Algebra
    B: Algebra
    zeta: tuple  # A-basis indexed operators on B
    zetap: tuple  # B-basis indexed operators on A

    def zeta_of(self, x: Vector) -> LinearMap:
        return _combine(self.zeta, x, self.B.dim)

    def zetap_of(self, u: Vector) -> LinearMap:
        return _combine(self.zetap, u, self.A.dim)


def check_comm_matched_pair(M: CommMatchedPairData) -> Report:
    A, B = M.A, M.B
    clauses = []

    w = None
    for i in range(A.dim):
        for j in range(A.dim):
            if M.zeta_of(A.basis_product(i, j)) != M.zeta[i] @ M.zeta[j]:
                w = Witness((i + 1, j + 1), "zeta(x*y)", "zeta(x)zeta(y)")
                break
        if w:
            break
    clauses.append(Clause("module-on-B", w is None, w))

    w = None
    for a in range(B.dim):
        for b in range(B.dim):
            if M.zetap_of(B.basis_product(a, b)) != M.zetap[a] @ M.zetap[b]:
                w = Witness((a + 1, b + 1), "zeta'(u*v)", "zeta'(u)zeta'(v)")
                break
        if w:
            break
    clauses.append(Clause("module-on-A", w is None, w))

    ea, eb = A.basis(), B.basis()

    w = None
    for i, x in enumerate(ea):
        for a, u in enumerate(eb):
            for b, v in enumerate(eb):
                lhs = M.zeta[i].apply(B.product(u, v))
                rhs = B.product(M.zeta[i].apply(u), v) + M.zeta_of(M.zetap[a].apply(x)).apply(v)
                if lhs != rhs:
                    w = Witness((i + 1, a + 1, b + 1), lhs.format(), rhs.format(), "x,u,v")
                    break
            if w:
                break
        if w:
            break
    clauses.append(Clause("mp-comm-1", w is None, w))

    w = None
    for a, u in enumerate(eb):
        for i, x in enumerate(ea):
            for j, y in enumerate(ea):
                lhs = M.zetap[a].apply(A.product(x, y))
                rhs = A.product(M.zetap[a].apply(x), y) + M.zetap_of(M.zeta[i].apply(u)).apply(y)
                if lhs != rhs:
                    w = Witness((a + 1, i + 1, j + 1), lhs.format(), rhs.format(), "u,x,y")
                    break
            if w:
                break
        if w:
            break
    clauses.append(Clause("mp-comm-2", w is None, w))

    return Report(f"matched pair ({A.name}, {B.name})", tuple(clauses))


def comm_bowtie(M: CommMatchedPairData, name: str | None = None) -> Algebra:
    A, B = M.A, M.B
    n, m = A.dim, B.dim
    field = A.field

    def prod(i, j):
        if i < n and j < n:
            return A.basis_product(i, j).concat(Vector.zero(field, m))
        if i < n <= j:
            return M.zetap[j - n].column(i).concat(M.zeta[i].column(j - n))
        if j < n <= i:
            return M.zetap[i - n].column(j).concat(M.zeta[j].column(i - n))
        return Vector.zero(field, n).concat(B.basis_product(i - n, j - n))

    return algebra_from_vectors(name or f"{A.name}|><|{B.name}", field, n + m, prod, UNCHECKED)


def sub_adjacent_matched_pair(M: MatchedPairData) -> CommMatchedPairData:
    """Symmetrise a Zinbiel matched pair: (A^c, B^c; rho+mu, rho'+mu')."""
    from .algebra import sub_adjacent

    check_matched_pair(M).require("sub_adjacent_matched_pair")
    zeta = tuple(M.rho[i] + M.mu[i] for i in range(M.A.dim))
    zetap = tuple(M.rhop[a] + M.mup[a] for a in range(M.B.dim))
    return CommMatchedPairData(sub_adjacent(M.A), sub_adjacent(M.B), zeta, zetap)


def coregular_matched_pair(A: Algebra, Astar: Algebra) -> MatchedPairData:
    """The standard pair on (A, A*): each side acts on the other coregularly."""
    if Astar.dim != A.dim or Astar.field != A.field:
        raise ValueError("dual-side algebra must live on the dual space")
    rho = tuple(A.star_mult(A.unit(i)).transpose() for i in range(A.dim))
    mu = tuple(-A.right_mult(A.unit(i)).transpose() for i in range(A.dim))
    rhop = tuple(Astar.star_mult(Astar.unit(a)).transpose() for a in range(A.dim))
    mup = tuple(-Astar.right_mult(Astar.unit(a)).transpose() for a in range(A.dim))
    return MatchedPairData(A, Astar, rho, mu, rhop, mup)


def coregular_comm_matched_pair(A: Algebra, Astar: Algebra) -> CommMatchedPairData:
    """The symmetrised standard pair: (A^c, A*^c; L^T, calL^T)."""
    from .algebra import sub_adjacent

    zeta = tuple(A.left_mult(A.unit(i)).transpose() for i in range(A.dim))
    zetap = tuple(Astar.left_mult(Astar.unit(a)).transpose() for a in range(A.dim))
    return CommMatchedPairData(sub_adjacent(A), sub_adjacent(Astar), zeta, zetap)
