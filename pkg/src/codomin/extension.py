"""Scalar extension along a simple field extension ``k <= k[t]/(m)`` and descent back.

Extension embeds every structure constant; descent splits each constant on
the power basis ``1, t, ..., t^(d-1)`` and keeps the constant term, refusing
when any higher coordinate is nonzero.
"""

from dataclasses import dataclass

import numpy as np

from .comodules import Bicomodule, Comodule, validate_comodule
from .errors import DescentFailure, FieldMismatch, Unsupported
from .exactla import Matrix, Subspace
from .scalars import SimpleExtension, simple_extension
from .structures import (AlgebraStr, Bialgebra, Coalgebra, HopfAlgebra, Morphism,
                         QuotientPresentation)


@dataclass(frozen=True)
class ExtensionContext:
    base: object
    ext: SimpleExtension

    @property
    def degree(self):
        return self.ext.degree

    def basis(self):
        """The power basis ``1, t, ..., t^(d-1)`` of the extension over the base."""
        d = self.ext.degree
        return [self.ext.coerce([0] * k + [1]) for k in range(d)]


def extension_context(base, minpoly=None, ext=None):
    if ext is None:
        if isinstance(base, SimpleExtension):
            raise Unsupported("towers of extensions are not supported")
        ext = simple_extension(base, minpoly)
    if not isinstance(ext, SimpleExtension) or ext.base != base:
        raise FieldMismatch(f"{ext} is not a simple extension of {base}")
    return ExtensionContext(base, ext)


def extend_matrix(M, ctx):
    if M.field != ctx.base:
        raise FieldMismatch(f"matrix over {M.field}, extension of {ctx.base}")
    E = ctx.ext
    a = E.zeros(M.shape)
    for idx, x in np.ndenumerate(M.a):
        a[idx] = E.embed(x)
    return Matrix(E, a)


def descend_matrix(M, ctx, what="matrix"):
    """Constant-term coordinates of ``M``; ``DescentFailure`` if any entry leaves the base."""
    if M.field != ctx.ext:
        raise FieldMismatch(f"matrix over {M.field}, expected {ctx.ext}")
    B = ctx.base
    a = B.zeros(M.shape)
    for idx, x in np.ndenumerate(M.a):
        comps = ctx.ext.components(x)
        for k in range(1, len(comps)):
            if comps[k] != 0:
                raise DescentFailure(f"{what} entry {idx} has nonzero t^{k} coordinate "
                                     f"{B.format(comps[k])}")
        a[idx] = comps[0]
    return Matrix(B, a)


def extend_object(X, ctx):
    """Scalar extension of an object, morphism, comodule, subspace or quotient."""
    em = lambda M: extend_matrix(M, ctx)  # noqa: E731
    if isinstance(X, Matrix):
        return em(X)
    if isinstance(X, Coalgebra):
        return Coalgebra(ctx.ext, X.dim, em(X.delta), em(X.counit), X.name)
    if isinstance(X, AlgebraStr):
        return AlgebraStr(ctx.ext, X.dim, em(X.mul), em(X.unit), X.name)
    if isinstance(X, Bialgebra):
        return Bialgebra(extend_object(X.coalg, ctx), extend_object(X.alg, ctx), X.name)
    if isinstance(X, HopfAlgebra):
        return HopfAlgebra(extend_object(X.bialg, ctx), em(X.antipode), X.name)
    if isinstance(X, Morphism):
        return Morphism(X.kind, extend_object(X.src, ctx), extend_object(X.dst, ctx),
                        em(X.matrix), X.name)
    if isinstance(X, Comodule):
        return Comodule(extend_object(X.over, ctx), X.side, X.dim, em(X.rho), X.name)
    if isinstance(X, Bicomodule):
        return Bicomodule(extend_object(X.over, ctx), X.dim, em(X.lam), em(X.rho), X.name)
    if isinstance(X, Subspace):
        if X.field != ctx.base:
            raise FieldMismatch(f"subspace over {X.field}")
        # an RREF basis stays RREF after embedding
        return Subspace(ctx.ext, X.ambient_dim, em(X.basis), X.pivots)
    if isinstance(X, QuotientPresentation):
        return QuotientPresentation(extend_object(X.total, ctx), extend_object(X.kernel, ctx),
                                    em(X.projection), em(X.section),
                                    extend_object(X.quotient, ctx))
    raise TypeError(f"cannot extend {type(X).__name__}")


def descend_object(X, ctx):
    """Inverse of :func:`extend_object` for objects defined over the base field."""
    dm = lambda M, w="": descend_matrix(M, ctx, w or "matrix")  # noqa: E731
    if isinstance(X, Coalgebra):
        return Coalgebra(ctx.base, X.dim, dm(X.delta, "delta"), dm(X.counit, "counit"), X.name)
    if isinstance(X, AlgebraStr):
        return AlgebraStr(ctx.base, X.dim, dm(X.mul, "mul"), dm(X.unit, "unit"), X.name)
    if isinstance(X, Bialgebra):
        return Bialgebra(descend_object(X.coalg, ctx), descend_object(X.alg, ctx), X.name)
    if isinstance(X, HopfAlgebra):
        return HopfAlgebra(descend_object(X.bialg, ctx), dm(X.antipode, "antipode"), X.name)
    raise TypeError(f"cannot descend {type(X).__name__}")


def descend_comodule(V, ctx, over=None):
    """A base-field comodule whose extension is ``V``.

    ``over`` is the base coalgebra (descended from ``V.over`` when omitted).
    The result is validated over the base field.
    """
    if over is None:
        over = descend_object(V.over, ctx)
    elif extend_object(over, ctx).delta != V.over.delta:
        raise FieldMismatch("V is not over the extension of the given coalgebra")
    rho = descend_matrix(V.rho, ctx, "coaction")
    return validate_comodule(over, V.side, V.dim, rho, V.name)
