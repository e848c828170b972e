"""Structure-constant presentations of coalgebras, algebras, bialgebras and Hopf algebras.

Conventions (all 0-based, flat tensor index ``i*n + j``):

* ``delta``   is ``n^2 x n``; column ``k`` holds the coordinates of Delta(e_k).
* ``counit``  is ``1 x n``.
* ``mul``     is ``n x n^2``; column ``i*n + j`` holds e_i * e_j.
* ``unit``    is ``n x 1``.
* ``antipode`` is ``n x n``.

Objects are built through :func:`validate_structure` (or the ``make_*``
helpers), which check every axiom as an exact matrix identity.
"""

import dataclasses
from dataclasses import dataclass

import numpy as np

from .errors import (AxiomViolation, FieldMismatch, NotACoideal, NotReflexive,
                     ShapeMismatch)
from .exactla import (Matrix, Subspace, apply_at, contract, flip, image, kron,
                      permute_legs)


@dataclass(frozen=True)
class Coalgebra:
    field: object
    dim: int
    delta: Matrix
    counit: Matrix
    name: str = dataclasses.field(default="", compare=False)

    kind = "coalgebra"

    @property
    def coalg(self):
        return self

    def tensor3(self):
        """Delta as an ``(n, n, n)`` array ``D[i, j, k]`` = coefficient of e_i (x) e_j in Delta(e_k)."""
        n = self.dim
        return self.delta.a.reshape(n, n, n)

    def __repr__(self):
        return f"Coalgebra({self.name or '?'}, dim={self.dim}, {self.field})"


@dataclass(frozen=True)
class AlgebraStr:
    field: object
    dim: int
    mul: Matrix
    unit: Matrix
    name: str = dataclasses.field(default="", compare=False)

    kind = "algebra"

    @property
    def alg(self):
        return self

    def tensor3(self):
        """Multiplication as ``M[u, i, j]`` = coefficient of e_u in e_i e_j."""
        n = self.dim
        return self.mul.a.reshape(n, n, n)

    def __repr__(self):
        return f"AlgebraStr({self.name or '?'}, dim={self.dim}, {self.field})"


@dataclass(frozen=True)
class Bialgebra:
    coalg: Coalgebra
    alg: AlgebraStr
    name: str = dataclasses.field(default="", compare=False)

    kind = "bialgebra"

    field = property(lambda self: self.coalg.field)
    dim = property(lambda self: self.coalg.dim)
    delta = property(lambda self: self.coalg.delta)
    counit = property(lambda self: self.coalg.counit)
    mul = property(lambda self: self.alg.mul)
    unit = property(lambda self: self.alg.unit)

    def __repr__(self):
        return f"Bialgebra({self.name or '?'}, dim={self.dim}, {self.field})"


@dataclass(frozen=True)
class HopfAlgebra:
    bialg: Bialgebra
    antipode: Matrix
    name: str = dataclasses.field(default="", compare=False)

    kind = "hopf"

    field = property(lambda self: self.bialg.field)
    dim = property(lambda self: self.bialg.dim)
    coalg = property(lambda self: self.bialg.coalg)
    alg = property(lambda self: self.bialg.alg)
    delta = property(lambda self: self.bialg.delta)
    counit = property(lambda self: self.bialg.counit)
    mul = property(lambda self: self.bialg.mul)
    unit = property(lambda self: self.bialg.unit)

    def __repr__(self):
        return f"HopfAlgebra({self.name or '?'}, dim={self.dim}, {self.field})"


def has_coalgebra(X):
    return isinstance(X, (Coalgebra, Bialgebra, HopfAlgebra))


def has_algebra(X):
    return isinstance(X, (AlgebraStr, Bialgebra, HopfAlgebra))


def renamed(X, name):
    return dataclasses.replace(X, name=name)


# --------------------------------------------------------------------------
# axiom checks


def _shape(M, shape, what):
    if M.shape != shape:
        raise ShapeMismatch(f"{what} has shape {M.shape}, expected {shape}")


def coalgebra_violations(delta, counit):
    F, n = delta.field, delta.cols
    _shape(delta, (n * n, n), "delta")
    _shape(counit, (1, n), "counit")
    out = []
    if apply_at(delta, delta, (n, n), 0) != apply_at(delta, delta, (n, n), 1):
        out.append("coassociativity")
    eye = Matrix.identity(F, n)
    if apply_at(counit, delta, (n, n), 0) != eye:
        out.append("counit-left")
    if apply_at(counit, delta, (n, n), 1) != eye:
        out.append("counit-right")
    return out


def algebra_violations(mul, unit):
    F, n = mul.field, mul.rows
    _shape(mul, (n, n * n), "mul")
    _shape(unit, (n, 1), "unit")
    out = []
    M = mul.a.reshape(n, n, n)
    # (ab)c and a(bc) as [u, a, b, c]
    left = contract(F, "ukc,kab->uabc", M, M)
    right = contract(F, "uak,kbc->uabc", M, M)
    if not np.all(left == right):
        out.append("associativity")
    eta = unit.a[:, 0]
    eye = F.eye(n)
    if not np.all(contract(F, "uij,i->uj", M, eta) == eye):
        out.append("unit-left")
    if not np.all(contract(F, "uij,j->ui", M, eta) == eye):
        out.append("unit-right")
    return out


def bialgebra_violations(coalg, alg):
    F = coalg.field
    out = []
    D = coalg.tensor3()
    M = alg.tensor3()
    # Delta(e_a e_b) as [x, y, a, b]
    lhs = contract(F, "xyu,uab->xyab", D, M)
    t1 = contract(F, "xik,ija->xkja", M, D)
    t2 = contract(F, "xkja,klb->xjalb", t1, D)
    rhs = contract(F, "yjl,xjalb->xyab", M, t2)
    if not np.all(lhs == rhs):
        out.append("delta-multiplicative")
    eps = coalg.counit.a[0]
    e_ab = contract(F, "u,uab->ab", eps, M)
    if not np.all(e_ab == F.normalize(np.multiply.outer(eps, eps))):
        out.append("counit-multiplicative")
    if coalg.delta @ alg.unit != kron(alg.unit, alg.unit):
        out.append("delta-unit")
    if (coalg.counit @ alg.unit).a[0, 0] != F.one:
        out.append("counit-unit")
    return out


def convolution(X, A, B):
    """The convolution product ``mul (A (x) B) Delta`` of two endomorphisms."""
    n = X.dim
    t = apply_at(B, apply_at(A, X.delta, (n, n), 0), (n, n), 1)
    return X.mul @ t


def hopf_violations(bialg, antipode):
    F, n = bialg.field, bialg.dim
    _shape(antipode, (n, n), "antipode")
    eye = Matrix.identity(F, n)
    target = bialg.unit @ bialg.counit
    out = []
    if convolution(bialg, antipode, eye) != target:
        out.append("antipode-left")
    if convolution(bialg, eye, antipode) != target:
        out.append("antipode-right")
    return out


def _same_field(*ms):
    fields = {m.field for m in ms if m is not None}
    if len(fields) > 1:
        raise FieldMismatch(f"mixed fields {sorted(map(str, fields))}")


def validate_structure(field, dim, delta=None, counit=None, mul=None, unit=None,
                       antipode=None, name=""):
    """Build the richest object the data describes, or raise :class:`AxiomViolation`.

    ``delta``/``counit`` give a coalgebra, ``mul``/``unit`` an algebra, both a
    bialgebra, and an ``antipode`` on top a Hopf algebra.
    """
    _same_field(delta, counit, mul, unit, antipode)
    if (delta is None) != (counit is None) or (mul is None) != (unit is None):
        raise ShapeMismatch("delta/counit and mul/unit must be given in pairs")
    if antipode is not None and (delta is None or mul is None):
        raise ShapeMismatch("an antipode needs both coalgebra and algebra data")
    if delta is None and mul is None:
        raise ShapeMismatch("no structure given")
    violations = []
    coalg = alg = None
    if delta is not None:
        if delta.cols != dim:
            raise ShapeMismatch(f"delta has {delta.cols} columns, expected {dim}")
        violations += coalgebra_violations(delta, counit)
        coalg = Coalgebra(field, dim, delta, counit, name)
    if mul is not None:
        if mul.rows != dim:
            raise ShapeMismatch(f"mul has {mul.rows} rows, expected {dim}")
        violations += algebra_violations(mul, unit)
        alg = AlgebraStr(field, dim, mul, unit, name)
    if violations:
        raise AxiomViolation(violations, name or "structure")
    if alg is None:
        return coalg
    if coalg is None:
        return alg
    violations = bialgebra_violations(coalg, alg)
    if violations:
        raise AxiomViolation(violations, name or "structure")
    bialg = Bialgebra(coalg, alg, name)
    if antipode is None:
        return bialg
    violations = hopf_violations(bialg, antipode)
    if violations:
        raise AxiomViolation(violations, name or "structure")
    return HopfAlgebra(bialg, antipode, name)


def structure_violations(X):
    """All axiom failures of an (already assembled) object; empty when valid."""
    out = []
    if has_coalgebra(X):
        out += coalgebra_violations(X.delta, X.counit)
    if has_algebra(X):
        out += algebra_violations(X.mul, X.unit)
    if isinstance(X, (Bialgebra, HopfAlgebra)) and not out:
        out += bialgebra_violations(X.coalg, X.alg)
    if isinstance(X, HopfAlgebra) and not out:
        out += hopf_violations(X.bialg, X.antipode)
    return out


def structure_from_terms(field, dim, delta=None, counit=None, mul=None, unit=None,
                         antipode=None, name=""):
    """Assemble matrices from sparse terms and validate.

    ``delta`` terms ``(k, i, j, c)`` mean Delta(e_k) += c e_i (x) e_j; ``mul``
    terms ``(k, i, j, c)`` mean e_i e_j += c e_k.  ``counit``/``unit`` are
    coefficient lists and ``antipode`` a full square matrix (rows).
    """
    n = dim
    d = c = m = u = s = None
    if delta is not None:
        a = field.zeros((n * n, n))
        for k, i, j, v in delta:
            a[i * n + j, k] = field.reduce(a[i * n + j, k] + field.coerce(v))
        d = Matrix(field, a)
        c = Matrix.from_rows(field, [list(counit)], shape=(1, n))
    if mul is not None:
        a = field.zeros((n, n * n))
        for k, i, j, v in mul:
            a[k, i * n + j] = field.reduce(a[k, i * n + j] + field.coerce(v))
        m = Matrix(field, a)
        u = Matrix.column(field, unit)
    if antipode is not None:
        s = Matrix.from_rows(field, antipode, shape=(n, n))
    return validate_structure(field, dim, d, c, m, u, s, name)


def is_cocommutative(C):
    n = C.dim
    return flip(C.delta, n, n) == C.delta


def is_commutative(A):
    n = A.dim
    return flip(A.mul.T, n, n).T == A.mul


# --------------------------------------------------------------------------
# morphisms

_KIND_ORDER = {"linear": 0, "coalg": 1, "alg": 1, "bialg": 2, "hopf": 3}


@dataclass(frozen=True)
class Morphism:
    kind: str
    src: object
    dst: object
    matrix: Matrix
    name: str = dataclasses.field(default="", compare=False)

    @property
    def field(self):
        return self.matrix.field

    def __repr__(self):
        return f"Morphism({self.name or '?'}: {self.kind}, {self.src.dim}->{self.dst.dim})"


def morphism_violations(kind, src, dst, f):
    F = f.field
    _shape(f, (dst.dim, src.dim), "morphism matrix")
    out = []
    if kind in ("coalg", "bialg", "hopf"):
        if not (has_coalgebra(src) and has_coalgebra(dst)):
            return ["not-coalgebras"]
        n = src.dim
        ff = apply_at(f, apply_at(f, src.delta, (n, n), 0), (dst.dim, n), 1)
        if ff != dst.delta @ f:
            out.append("coalg-comultiplicative")
        if dst.counit @ f != src.counit:
            out.append("coalg-counital")
    if kind in ("alg", "bialg", "hopf"):
        if not (has_algebra(src) and has_algebra(dst)):
            return out + ["not-algebras"]
        lhs = f @ src.mul
        fa = f.a
        rhs = contract(F, "uij,ia->uja", dst.alg.tensor3(), fa)
        rhs = contract(F, "uja,jb->uab", rhs, fa).reshape(dst.dim, src.dim * src.dim)
        if not np.all(lhs.a == rhs):
            out.append("alg-multiplicative")
        if f @ src.unit != dst.unit:
            out.append("alg-unital")
    if kind == "hopf":
        if not (isinstance(src, HopfAlgebra) and isinstance(dst, HopfAlgebra)):
            return out + ["not-hopf"]
        if f @ src.antipode != dst.antipode @ f:
            out.append("antipode-compatible")
    return out


def _candidate_kinds(src, dst):
    kinds = []
    if isinstance(src, HopfAlgebra) and isinstance(dst, HopfAlgebra):
        kinds.append("hopf")
    if isinstance(src, (Bialgebra, HopfAlgebra)) and isinstance(dst, (Bialgebra, HopfAlgebra)):
        kinds.append("bialg")
    if has_coalgebra(src) and has_coalgebra(dst):
        kinds.append("coalg")
    if has_algebra(src) and has_algebra(dst):
        kinds.append("alg")
    kinds.append("linear")
    return kinds


def make_morphism(src, dst, matrix, kind=None, name=""):
    """Validated morphism; with ``kind=None`` the richest valid kind is chosen."""
    if not isinstance(matrix, Matrix):
        matrix = Matrix.from_rows(src.field, matrix, shape=(dst.dim, src.dim))
    if src.field != dst.field or matrix.field != src.field:
        raise FieldMismatch("morphism between objects over different fields")
    if kind is not None:
        v = morphism_violations(kind, src, dst, matrix)
        if v:
            raise AxiomViolation(v, name or "morphism")
        return Morphism(kind, src, dst, matrix, name)
    _shape(matrix, (dst.dim, src.dim), "morphism matrix")
    for k in _candidate_kinds(src, dst):
        if not morphism_violations(k, src, dst, matrix):
            return Morphism(k, src, dst, matrix, name)
    raise AssertionError("linear maps always validate")


def weaker_kind(a, b):
    if a == b:
        return a
    if {a, b} <= {"bialg", "hopf"}:
        return "bialg"
    if "linear" in (a, b) or {a, b} == {"coalg", "alg"}:
        return "linear"
    if "coalg" in (a, b):
        return "coalg"
    return "alg"


def compose(g, f, name=""):
    """``g o f``."""
    if g.src.dim != f.dst.dim:
        raise ShapeMismatch("cannot compose: dimensions differ")
    return Morphism(weaker_kind(g.kind, f.kind), f.src, g.dst, g.matrix @ f.matrix, name)


def identity(X, name=""):
    kind = {"coalgebra": "coalg", "algebra": "alg", "bialgebra": "bialg", "hopf": "hopf"}[X.kind]
    return Morphism(kind, X, X, Matrix.identity(X.field, X.dim), name or f"id_{X.name}")


# --------------------------------------------------------------------------
# duality and tensor products


def dualize(X):
    """Linear dual of a finite-dimensional object, or the transpose of a morphism."""
    if isinstance(X, Morphism):
        kind = {"coalg": "alg", "alg": "coalg"}.get(X.kind, X.kind)
        return Morphism(kind, dualize(X.dst), dualize(X.src), X.matrix.T, X.name and X.name + "*")
    name = X.name and X.name + "*"
    if isinstance(X, Coalgebra):
        return AlgebraStr(X.field, X.dim, X.delta.T, X.counit.T, name)
    if isinstance(X, AlgebraStr):
        return Coalgebra(X.field, X.dim, X.mul.T, X.unit.T, name)
    if isinstance(X, Bialgebra):
        return Bialgebra(dualize(X.alg), dualize(X.coalg), name)
    if isinstance(X, HopfAlgebra):
        return HopfAlgebra(dualize(X.bialg), X.antipode.T, name)
    raise TypeError(f"cannot dualize {type(X).__name__}")


def _tensor_delta(X, Y):
    n, m = X.dim, Y.dim
    return permute_legs(kron(X.delta, Y.delta), (n, n, m, m), (0, 2, 1, 3))


def _tensor_mul(X, Y):
    n, m = X.dim, Y.dim
    cols = permute_legs(kron(X.mul, Y.mul).T, (n, n, m, m), (0, 2, 1, 3))
    return cols.T


def tensor_objects(X, Y, name=""):
    if X.field != Y.field:
        raise FieldMismatch(f"{X.field} vs {Y.field}")
    if type(X) is not type(Y):
        raise TypeError("tensor_objects needs two objects of the same kind")
    F = X.field
    name = name or (X.name and Y.name and f"{X.name}(x){Y.name}")
    dim = X.dim * Y.dim
    coalg = alg = None
    if has_coalgebra(X):
        coalg = Coalgebra(F, dim, _tensor_delta(X, Y), kron(X.counit, Y.counit), name)
    if has_algebra(X):
        alg = AlgebraStr(F, dim, _tensor_mul(X, Y), kron(X.unit, Y.unit), name)
    if isinstance(X, Coalgebra):
        return coalg
    if isinstance(X, AlgebraStr):
        return alg
    bialg = Bialgebra(coalg, alg, name)
    if isinstance(X, Bialgebra):
        return bialg
    return HopfAlgebra(bialg, kron(X.antipode, Y.antipode), name)


def trivial_object(field, kind="hopf"):
    """The one-dimensional object ``k`` of the requested kind."""
    one = Matrix.identity(field, 1)
    coalg = Coalgebra(field, 1, one, one, "k_c")
    alg = AlgebraStr(field, 1, one, one, "k_a")
    if kind == "coalgebra":
        return coalg
    if kind == "algebra":
        return alg
    if kind == "bialgebra":
        return Bialgebra(coalg, alg, "k_b")
    return HopfAlgebra(Bialgebra(coalg, alg, "k_b"), one, "k")


# --------------------------------------------------------------------------
# subspace tests


def products(A, U, W):
    """``span{u w : u in U, w in W}`` inside an algebra."""
    if U.dim == 0 or W.dim == 0:
        return Subspace.zero(A.field, A.dim)
    return image(A.mul @ kron(U.basis, W.basis).T)


def coideal_violations(C, K):
    out = []
    n = C.dim
    if K.dim and not (C.counit @ K.columns()).is_zero():
        out.append("counit(K) = 0")
    if K.dim:
        full = Subspace.full(C.field, n)
        target = K.tensor(full) + full.tensor(K)
        if not target.contains(K.image_under(C.delta)):
            out.append("Delta(K) in K(x)C + C(x)K")
    return out


def is_coideal(C, K):
    return not coideal_violations(C, K)


def is_subcoalgebra(C, E):
    return E.tensor(E).contains(E.image_under(C.delta))


def is_left_ideal(A, K):
    return K.contains(products(A, Subspace.full(A.field, A.dim), K))


def is_right_ideal(A, K):
    return K.contains(products(A, K, Subspace.full(A.field, A.dim)))


def is_subalgebra(A, B):
    return B.contains(Subspace.from_columns(A.unit)) and B.contains(products(A, B, B))


# --------------------------------------------------------------------------
# quotients


@dataclass(frozen=True)
class QuotientPresentation:
    total: object
    kernel: Subspace
    projection: Matrix
    section: Matrix
    quotient: object

    @property
    def morphism(self):
        kind = {"coalgebra": "coalg", "bialgebra": "bialg", "hopf": "hopf"}[self.quotient.kind]
        return Morphism(kind, self.total, self.quotient, self.projection)


def _quotient_coalgebra(C, proj, sec):
    n = C.dim
    dq = apply_at(proj, apply_at(proj, C.delta, (n, n), 0), (proj.rows, n), 1) @ sec
    return dq, C.counit @ sec


def quotient_by_coideal(C, K, keep_algebra=False, name=""):
    """Quotient coalgebra ``C/K`` with projection and section.

    With ``keep_algebra`` and a bialgebra/Hopf ``C`` the kernel must also be a
    two-sided ideal (and antipode-stable) and the quotient keeps that structure.
    """
    v = coideal_violations(C, K)
    if v:
        raise NotACoideal("; ".join(f"fails {x}" for x in v))
    proj, sec = K.quotient_basis()
    F = C.field
    dq, cq = _quotient_coalgebra(C, proj, sec)
    if K.dim and proj.rows:
        # a different section must give the same structure constants
        ones = Matrix.from_rows(F, [[1] * proj.rows])
        shift = K.basis.row(0).T @ ones
        dq2, cq2 = _quotient_coalgebra(C, proj, sec + shift)
        if dq2 != dq or cq2 != cq:
            raise NotACoideal("quotient structure depends on the section")
    q = proj.rows
    name = name or (C.name and f"{C.name}/K")
    quotient = validate_structure(F, q, dq, cq, name=name)
    if keep_algebra and has_algebra(C):
        quotient = _quotient_algebra_structure(C, K, proj, sec, quotient, name)
    out = QuotientPresentation(C, K, proj, sec, quotient)
    if morphism_violations("coalg", C, quotient, proj):
        raise NotACoideal("projection is not a coalgebra morphism")
    return out


def _quotient_algebra_structure(X, K, proj, sec, coalg_q, name):
    violations = []
    if not is_left_ideal(X, K):
        violations.append("left-ideal")
    if not is_right_ideal(X, K):
        violations.append("right-ideal")
    if isinstance(X, HopfAlgebra) and not K.contains(K.image_under(X.antipode)):
        violations.append("antipode-stable")
    if violations:
        raise AxiomViolation(violations, "kernel")
    mq = proj @ X.mul @ kron(sec, sec)
    uq = proj @ X.unit
    sq = proj @ X.antipode @ sec if isinstance(X, HopfAlgebra) else None
    return validate_structure(X.field, proj.rows, coalg_q.delta, coalg_q.counit, mq, uq, sq, name)


def reflexive_coequalizer(f1, f2, s):
    """Coequalizer of a reflexive pair ``f1, f2: X -> Y`` with common section ``s``.

    The vector-space coequalizer kernel ``im(f1 - f2)`` is a coideal and an
    ideal, so the quotient carries the induced bialgebra/Hopf structure.
    """
    Y = f1.dst
    eye = Matrix.identity(Y.field, Y.dim)
    if f1.matrix @ s.matrix != eye or f2.matrix @ s.matrix != eye:
        raise NotReflexive("s is not a common right inverse of f1 and f2")
    K = image(f1.matrix - f2.matrix)
    return quotient_by_coideal(Y, K, keep_algebra=True)
