"""Monomorphisms, epimorphisms, dominions and codominions.

For a coalgebra map ``f: C -> D`` everything here is driven by the cotensor
product ``C []_D C``.  ``Delta`` always lands injectively in it, so ``f`` is
monic exactly when the two have the same dimension, and the two contractions
``I (x) eps`` and ``eps (x) I`` on it differ by the codominion kernel ``K0``.
"""

from dataclasses import dataclass

from .comodules import (Bicomodule, coinvariants, corestrict, cotensor, hom_dim,
                        regular_comodule, tensor_comodule)
from .errors import EmptyFamily, NotASubspace, NotCocommutative, ShapeMismatch, UnsupportedCharacteristic
from .exactla import Matrix, Subspace, apply_at, contract, flip, image, kernel, kron
from .structures import (Bialgebra, Coalgebra, HopfAlgebra, Morphism, QuotientPresentation,
                         compose, has_algebra, is_cocommutative, is_coideal, is_left_ideal,
                         is_right_ideal, quotient_by_coideal, tensor_objects)


def self_cotensor(f):
    """``C []_D C`` for ``f: C -> D``, inside ``C (x) C``."""
    C = f.src
    V = corestrict(regular_comodule(C, "right"), f)
    W = corestrict(regular_comodule(C, "left"), f)
    return cotensor(V, W)


def is_monic(f):
    return self_cotensor(f).dim == f.src.dim


def is_epic(f):
    return f.matrix.rank() == f.dst.dim


def is_injective_map(f):
    return f.matrix.rank() == f.src.dim


def _contraction_difference(C, X):
    """Columns ``(I (x) eps) x - (eps (x) I) x`` for the columns ``x`` of ``X``."""
    n = C.dim
    return apply_at(C.counit, X, (n, n), 1) - apply_at(C.counit, X, (n, n), 0)


@dataclass(frozen=True)
class CodominionResult:
    kernel: Subspace
    quotient: QuotientPresentation
    is_codominion: bool
    cotensor_dim: int


def codominion_kernel(f):
    C = f.src
    cot = self_cotensor(f)
    if cot.dim == 0:
        return Subspace.zero(C.field, C.dim)
    return image(_contraction_difference(C, cot.columns()))


def codominion(f):
    """Smallest quotient of ``C`` through which ``f`` factors as a regular quotient."""
    C = f.src
    cot = self_cotensor(f)
    if cot.dim:
        K0 = image(_contraction_difference(C, cot.columns()))
    else:
        K0 = Subspace.zero(C.field, C.dim)
    if (K0.dim == 0) != (cot.dim == C.dim):
        raise AssertionError("monic test and codominion kernel disagree")
    kerf = kernel(f.matrix)
    if not kerf.contains(K0):
        raise AssertionError("f does not factor through its codominion")
    keep = isinstance(C, (Bialgebra, HopfAlgebra)) and f.kind in ("bialg", "hopf")
    q = quotient_by_coideal(C, K0, keep_algebra=keep)
    return CodominionResult(K0, q, K0 == kerf, cot.dim)


def hopf_descent_violations(f):
    """For a bialgebra/Hopf map: ways in which ``K0`` fails to be a Hopf ideal (empty if none)."""
    C = f.src
    K0 = codominion_kernel(f)
    out = []
    if not is_coideal(C, K0):
        out.append("coideal")
    if has_algebra(C):
        if not is_left_ideal(C, K0):
            out.append("left-ideal")
        if not is_right_ideal(C, K0):
            out.append("right-ideal")
    if isinstance(C, HopfAlgebra) and not K0.contains(K0.image_under(C.antipode)):
        out.append("antipode-stable")
    return out


def _projection_dominates(f, proj):
    C = f.src
    cot = self_cotensor(f)
    if cot.dim == 0:
        return True
    return (proj @ _contraction_difference(C, cot.columns())).is_zero()


def dominates(f, q):
    """Whether ``f`` dominates the quotient ``q`` (``q`` factors through the codominion of ``f``)."""
    if q.total.dim != f.src.dim:
        raise ShapeMismatch("quotient is not of the source of f")
    by_contractions = _projection_dominates(f, q.projection)
    by_kernels = q.kernel.contains(codominion_kernel(f))
    if by_contractions != by_kernels:
        raise AssertionError("domination tests disagree")
    return by_kernels


def _symmetric_part(X, g):
    """``{x : x_0 (x) g(x_1) = x_0 (x) g(x_-1)}`` inside a bicomodule ``X``."""
    n, m = X.over.dim, X.dim
    right = apply_at(g, X.rho, (m, n), 1)
    left = flip(apply_at(g, X.lam, (n, m), 0), g.rows, m)
    return kernel(right - left)


def bicomodule_domination_check(f, q, X):
    """``X_f`` is contained in ``X_pi`` for the bicomodule ``X`` over ``C``."""
    if not isinstance(X, Bicomodule):
        raise TypeError("X must be a Bicomodule")
    return _symmetric_part(X, q.projection).contains(_symmetric_part(X, f.matrix))


# --------------------------------------------------------------------------
# algebras


@dataclass(frozen=True)
class DominionResult:
    dominion: Subspace
    is_dominion: bool
    is_epic: bool
    tensor_dim: int


def balanced_relations(f):
    """``span{b f(a) (x) b' - b (x) f(a) b'}`` inside ``B (x) B``."""
    A, B = f.src, f.dst
    F, n = B.field, B.dim
    eye = Matrix.identity(F, n)
    gens = None
    for a in range(A.dim):
        fa = f.matrix.col(a)
        right = B.mul @ kron(eye, fa)  # b -> b f(a)
        left = B.mul @ kron(fa, eye)  # b' -> f(a) b'
        block = kron(right, eye) - kron(eye, left)
        gens = block if gens is None else gens.hstack(block)
    if gens is None:
        return Subspace.zero(F, n * n)
    return image(gens)


def dominion_alg(f):
    """Elements ``b`` with ``b (x) 1 = 1 (x) b`` in ``B (x)_A B``."""
    B = f.dst
    F, n = B.field, B.dim
    R = balanced_relations(f)
    eye = Matrix.identity(F, n)
    diff = kron(eye, B.unit) - kron(B.unit, eye)
    dom = R.preimage(diff)
    return DominionResult(dom, dom == image(f.matrix), dom.dim == n, n * n - R.dim)


# --------------------------------------------------------------------------
# subcoalgebras and limits


def largest_subcoalgebra(C, V):
    """Greatest ``E`` inside ``V`` with ``Delta(E) in E (x) E``."""
    if not isinstance(V, Subspace) or V.ambient_dim != C.dim or V.field != C.field:
        raise NotASubspace("V is not a subspace of C")
    E = V
    while True:
        nxt = E & E.tensor(E).preimage(C.delta)
        if nxt == E:
            return E
        E = nxt


def subcoalgebra(C, E, name=""):
    """The coalgebra on a subcoalgebra ``E`` (RREF basis) and its inclusion map."""
    F, n = C.field, C.dim
    B = E.columns()
    piv = E.pivots
    rows = [p * n + r for p in piv for r in piv]
    delta = (C.delta @ B).take_rows(rows)
    counit = C.counit @ B
    sub = Coalgebra(F, E.dim, delta, counit, name or (C.name and f"sub({C.name})"))
    inc = Morphism("coalg", sub, C, B, f"incl_{sub.name}")
    return sub, inc


def vector_equalizer(fs):
    fs = list(fs)
    if not fs:
        raise EmptyFamily("equalizer of an empty family")
    C = fs[0].src
    V = Subspace.full(C.field, C.dim)
    for g in fs[1:]:
        if g.src.dim != C.dim or g.dst.dim != fs[0].dst.dim:
            raise ShapeMismatch("family members have different source or target")
        V = V & kernel(g.matrix - fs[0].matrix)
    return V


def equalizer_coalg(fs):
    """Equalizer in coalgebras: the largest subcoalgebra of the vector-space equalizer."""
    fs = list(fs)
    V = vector_equalizer(fs)
    C = fs[0].src
    E = largest_subcoalgebra(C, V)
    return E, subcoalgebra(C, E)[1]


def trace_form(A):
    """Gram matrix ``trace(L_a L_b)`` of the regular representation of an algebra."""
    M = A.alg.tensor3()  # M[u, a, j]
    return Matrix(A.field, contract(A.field, "uaj,jbu->ab", M, M))


def is_cosemisimple(C):
    """Nondegenerate trace form on ``C*`` (needs characteristic 0 or ``p > dim C``)."""
    p = C.field.characteristic
    if 0 < p <= C.dim:
        raise UnsupportedCharacteristic(f"characteristic {p} <= dim {C.dim}")
    from .structures import dualize

    return kernel(trace_form(dualize(C.coalg))).dim == 0


@dataclass(frozen=True)
class ProductResult:
    product: Coalgebra
    p1: Morphism
    p2: Morphism
    pullback: Subspace


def cc_product_pullback(C, D, f=None, g=None):
    """Product ``C (x) D`` of cocommutative coalgebras, and the pullback over ``f, g`` if given."""
    for X in (C, D) + tuple(h.dst for h in (f, g) if h is not None):
        if not is_cocommutative(X):
            raise NotCocommutative(f"{X.name or 'coalgebra'} is not cocommutative")
    C, D = C.coalg, D.coalg
    P = tensor_objects(C, D)
    F = C.field
    p1 = Morphism("coalg", P, C, kron(Matrix.identity(F, C.dim), D.counit), "p1")
    p2 = Morphism("coalg", P, D, kron(C.counit, Matrix.identity(F, D.dim)), "p2")
    if f is None or g is None:
        return ProductResult(P, p1, p2, Subspace.full(F, P.dim))
    E, _ = equalizer_coalg([compose(f, p1), compose(g, p2)])
    return ProductResult(P, p1, p2, E)


# --------------------------------------------------------------------------
# Hopf monic criteria


def coinvariant_test(f):
    """``H`` has one-dimensional coinvariants along ``f: H -> H'``."""
    return coinvariants(regular_comodule(f.src, "right"), along=f).dim == 1


def probe_comodules(H, tensor_square=True):
    reg = regular_comodule(H, "right")
    if not tensor_square:
        return [reg]
    return [reg, tensor_comodule(reg, reg)]


def end_space_test(f, probes=None):
    """``End`` of every probe comodule is unchanged by corestriction along ``f``."""
    H = f.src
    probes = probe_comodules(H) if probes is None else probes
    for V in probes:
        Vc = corestrict(V, f)
        # colinear over H implies colinear over H', so dimensions decide equality
        if hom_dim(V, V) != hom_dim(Vc, Vc):
            return False
    return True


def monic_criteria(f, probes=None):
    """All monic tests on a Hopf map; on valid input the four answers coincide."""
    return {
        "cotensor": is_monic(f),
        "codominion-kernel": codominion_kernel(f).dim == 0,
        "coinvariants": coinvariant_test(f),
        "end-spaces": end_space_test(f, probes),
    }
