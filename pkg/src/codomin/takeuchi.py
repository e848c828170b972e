"""Right coideal subalgebras, left module quotient coalgebras, and the maps between them.

For a Hopf algebra ``H``:

* ``r(A) = H / H A+`` with ``A+ = A & ker(eps)``;
* ``l(pi) = {h : pi(h_1) (x) h_2 = pi(1) (x) h}``.

Quotients are compared through their kernels: ``q >= q'`` when
``ker q <= ker q'``.  With that order ``r(A) >= q`` iff ``l(q) >= A``.
"""

from dataclasses import dataclass

from .errors import AxiomViolation, ShapeMismatch
from .exactla import Matrix, Subspace, apply_at, kernel, kron
from .structures import (HopfAlgebra, Morphism, QuotientPresentation, is_coideal, is_left_ideal,
                         products, quotient_by_coideal, validate_structure)


@dataclass(frozen=True)
class CoidealSubalgebra:
    ambient: HopfAlgebra
    subspace: Subspace

    @property
    def plus(self):
        """``A+ = A & ker(eps)``."""
        return self.subspace & kernel(self.ambient.counit)


@dataclass(frozen=True)
class ModuleQuotientCoalgebra:
    ambient: HopfAlgebra
    quotient: QuotientPresentation
    action: Matrix

    @property
    def kernel(self):
        return self.quotient.kernel

    @property
    def projection(self):
        return self.quotient.projection


def coideal_subalgebra_violations(H, A):
    if A.ambient_dim != H.dim:
        raise ShapeMismatch("subspace is not inside H")
    out = []
    if not A.contains(Subspace.from_columns(H.unit)):
        out.append("contains-unit")
    if not A.contains(products(H, A, A)):
        out.append("subalgebra")
    full = Subspace.full(H.field, H.dim)
    if not A.tensor(full).contains(A.image_under(H.delta)):
        out.append("right-coideal")
    return out


def validate_coideal_subalgebra(H, A):
    v = coideal_subalgebra_violations(H, A)
    if v:
        raise AxiomViolation(v, "coideal subalgebra")
    return CoidealSubalgebra(H, A)


def inclusion(A):
    """``A -> H`` as an algebra morphism, ``A`` carrying the restricted multiplication."""
    H, U = A.ambient, A.subspace
    B = U.columns()
    # a vector of U has coordinates equal to its entries at the pivots
    piv = list(U.pivots)
    mul = (H.mul @ kron(B, B)).take_rows(piv)
    alg = validate_structure(H.field, U.dim, mul=mul, unit=H.unit.take_rows(piv),
                             name=H.name and f"A<{H.name}")
    return Morphism("alg", alg, H.alg, B, "incl")


def module_quotient(H, K):
    """The left ``H``-module quotient coalgebra ``H/K`` (``K`` a coideal and left ideal)."""
    v = []
    if not is_coideal(H, K):
        v.append("coideal")
    if not is_left_ideal(H, K):
        v.append("left-ideal")
    if v:
        raise AxiomViolation(v, "module quotient")
    q = quotient_by_coideal(H.coalg, K)
    q = QuotientPresentation(H, K, q.projection, q.section, q.quotient)
    action = q.projection @ H.mul @ kron(Matrix.identity(H.field, H.dim), q.section)
    return ModuleQuotientCoalgebra(H, q, action)


def op_r(A):
    """``r(A) = H / H A+``."""
    H = A.ambient
    K = products(H, Subspace.full(H.field, H.dim), A.plus)
    return module_quotient(H, K)


def op_l(q):
    """``l(q)``: kernel of ``h -> (pi (x) I) Delta h - pi(1) (x) h``."""
    H = q.ambient
    n = H.dim
    proj = q.projection
    lhs = apply_at(proj, H.delta, (n, n), 0)
    rhs = kron(proj @ H.unit, Matrix.identity(H.field, n))
    return validate_coideal_subalgebra(H, kernel(lhs - rhs))


def closure(x):
    """``l(r(A))`` for a coideal subalgebra, ``r(l(q))`` for a module quotient."""
    if isinstance(x, CoidealSubalgebra):
        return op_l(op_r(x))
    if isinstance(x, ModuleQuotientCoalgebra):
        return op_r(op_l(x))
    raise TypeError(f"no closure for {type(x).__name__}")


def quotient_geq(q1, q2):
    """``q1 >= q2`` in the quotient order (``ker q1`` inside ``ker q2``)."""
    return q2.kernel.contains(q1.kernel)


def galois_sides(A, q):
    """Both sides of ``r(A) >= q  <=>  l(q) >= A``; they agree on valid input."""
    return quotient_geq(op_r(A), q), op_l(q).subspace.contains(A.subspace)
