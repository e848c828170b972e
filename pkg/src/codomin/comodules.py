"""Comodules, bicomodules and the linear systems built from them.

A right comodule ``V`` (dim ``m``) over ``C`` (dim ``n``) has ``rho`` of shape
``m*n x m`` with flat index ``v*n + c``; a left comodule stores ``C (x) V`` with
index ``c*m + v``.  Colinear maps ``phi: V -> W`` are unknowns flattened
row-major (``phi[i, j]`` at ``i*dim V + j``).
"""

import dataclasses
from dataclasses import dataclass

import numpy as np

from .errors import (AxiomViolation, FieldMismatch, NotABialgebra, NotSurjective,
                     ShapeMismatch)
from .exactla import (Matrix, apply_at, contract, kernel, kron, solve_linear,
                      sparse_kernel, sparse_nullity)
from .structures import HopfAlgebra, Morphism, has_algebra


@dataclass(frozen=True)
class Comodule:
    over: object
    side: str
    dim: int
    rho: Matrix
    name: str = dataclasses.field(default="", compare=False)

    @property
    def field(self):
        return self.rho.field

    def tensor3(self):
        """Coaction as ``R[a, c, j]`` (right) or ``R[c, a, j]`` (left)."""
        m, n = self.dim, self.over.dim
        shape = (m, n, m) if self.side == "right" else (n, m, m)
        return self.rho.a.reshape(shape)

    def __repr__(self):
        return f"Comodule({self.name or '?'}, {self.side}, dim={self.dim} over {self.over.name or '?'})"


@dataclass(frozen=True)
class Bicomodule:
    over: object
    dim: int
    lam: Matrix
    rho: Matrix
    name: str = dataclasses.field(default="", compare=False)

    @property
    def left(self):
        return Comodule(self.over, "left", self.dim, self.lam, self.name)

    @property
    def right(self):
        return Comodule(self.over, "right", self.dim, self.rho, self.name)


def _legs(side, m, n):
    return (m, n) if side == "right" else (n, m)


def comodule_violations(C, side, m, rho):
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', not {side!r}")
    n = C.dim
    if rho.shape != (m * n, m):
        raise ShapeMismatch(f"coaction has shape {rho.shape}, expected {(m * n, m)}")
    if rho.field != C.field:
        raise FieldMismatch(f"{rho.field} vs {C.field}")
    dims = _legs(side, m, n)
    vleg, cleg = (0, 1) if side == "right" else (1, 0)
    out = []
    if apply_at(rho, rho, dims, vleg) != apply_at(C.delta, rho, dims, cleg):
        out.append("coassociativity")
    if apply_at(C.counit, rho, dims, cleg) != Matrix.identity(C.field, m):
        out.append("counit")
    return out


def validate_comodule(C, side, dim, rho, name=""):
    v = comodule_violations(C, side, dim, rho)
    if v:
        raise AxiomViolation(v, name or f"{side} comodule")
    return Comodule(C, side, dim, rho, name)


def validate_bicomodule(C, dim, lam, rho, name=""):
    v = comodule_violations(C, "left", dim, lam) + comodule_violations(C, "right", dim, rho)
    if not v:
        n = C.dim
        # (I (x) rho) lam = (lam (x) I) rho, both in C (x) V (x) C
        if apply_at(rho, lam, (n, dim), 1) != apply_at(lam, rho, (dim, n), 0):
            v.append("bicomodule-compatibility")
    if v:
        raise AxiomViolation(v, name or "bicomodule")
    return Bicomodule(C, dim, lam, rho, name)


def comodule_from_terms(C, side, dim, terms, name=""):
    """``terms`` are ``(v, w, c, scalar)``: rho(e_v) += scalar e_w (x) e_c (right) or e_c (x) e_w (left)."""
    F, n = C.field, C.dim
    a = F.zeros((dim * n, dim))
    for v, w, c, s in terms:
        r = w * n + c if side == "right" else c * dim + w
        a[r, v] = F.reduce(a[r, v] + F.coerce(s))
    return validate_comodule(C, side, dim, Matrix(F, a), name)


def regular_comodule(C, side="right", name=""):
    return Comodule(C, side, C.dim, C.delta, name or (C.name and f"{C.name}_reg"))


def regular_bicomodule(C, name=""):
    return Bicomodule(C, C.dim, C.delta, C.delta, name or C.name)


def trivial_comodule(H, dim=1, side="right", grouplike=None, name=""):
    """``v -> v (x) g`` for a grouplike ``g`` (the unit of a bialgebra by default)."""
    F = H.field
    if grouplike is None:
        if not has_algebra(H):
            raise NotABialgebra("a trivial coaction needs a unit or an explicit grouplike")
        g = H.unit
    else:
        g = grouplike if isinstance(grouplike, Matrix) else Matrix.column(F, grouplike)
    eye = Matrix.identity(F, dim)
    rho = kron(eye, g) if side == "right" else kron(g, eye)
    return validate_comodule(H, side, dim, rho, name)


def corestrict(V, f):
    """Push the coaction of ``V`` forward along a coalgebra morphism ``f``."""
    if f.src.dim != V.over.dim:
        raise ShapeMismatch("comodule is not over the source of f")
    cleg = 1 if V.side == "right" else 0
    rho = apply_at(f.matrix, V.rho, _legs(V.side, V.dim, V.over.dim), cleg)
    return Comodule(f.dst, V.side, V.dim, rho, V.name)


def corestrict_bicomodule(X, f):
    n, m = X.over.dim, X.dim
    lam = apply_at(f.matrix, X.lam, (n, m), 0)
    rho = apply_at(f.matrix, X.rho, (m, n), 1)
    return Bicomodule(f.dst, m, lam, rho, X.name)


def cotensor(V, W):
    """``V []_D W`` as a subspace of ``V (x) W`` (``V`` right, ``W`` left, same ``D``)."""
    if V.side != "right" or W.side != "left":
        raise ShapeMismatch("cotensor needs a right and a left comodule")
    if V.over.dim != W.over.dim:
        raise ShapeMismatch("comodules over different coalgebras")
    F = V.field
    m, w = V.dim, W.dim
    eye = Matrix.identity(F, m * w)
    lhs = apply_at(V.rho, eye, (m, w), 0)
    rhs = apply_at(W.rho, eye, (m, w), 1)
    return kernel(lhs - rhs)


def coinvariants(V, along=None):
    """``{v : rho(v) = v (x) 1}`` (mirrored for left comodules), optionally after corestriction."""
    if along is not None:
        V = corestrict(V, along)
    H = V.over
    if not has_algebra(H):
        raise NotABialgebra(f"{H.name or 'coalgebra'} has no unit")
    eye = Matrix.identity(V.field, V.dim)
    triv = kron(eye, H.unit) if V.side == "right" else kron(H.unit, eye)
    return kernel(V.rho - triv)


# --------------------------------------------------------------------------
# colinear maps


def _check_pair(V, W):
    if V.side != W.side:
        raise ShapeMismatch("comodules on different sides")
    if V.over.dim != W.over.dim or V.field != W.field:
        raise ShapeMismatch("comodules over different coalgebras")


def _slices(X):
    """Nonzero coaction entries grouped as ``{(c, j): [(a, value), ...]}``.

    Key ``(c, j)``: coalgebra index and source basis vector; ``a`` runs over
    the comodule leg.
    """
    out = {}
    T = X.tensor3()
    if X.side == "left":
        T = T.transpose(1, 0, 2)
    for a, c, j in zip(*np.nonzero(T != 0)):
        out.setdefault((int(c), int(j)), []).append((int(a), T[a, c, j]))
    return out


def colinear_rows(V, W):
    """Equations ``(phi (x) I) rho_V = rho_W phi`` in the flat unknowns of ``phi``.

    Both sides are read in the ``(w, c, j)`` coordinates of ``W (x) C``
    (mirrored for left comodules); each yields a dict row.
    """
    _check_pair(V, W)
    F = V.field
    v, w, n = V.dim, W.dim, V.over.dim
    rv, rw = _slices(V), _slices(W)
    # rho_W phi at (i, c, j) is sum_b P[i, c, b] phi[b, j]
    by_ic = {}
    for (c, b), terms in rw.items():
        for i, x in terms:
            by_ic.setdefault((i, c), []).append((b, x))
    for i in range(w):
        for c in range(n):
            right = by_ic.get((i, c), ())
            for j in range(v):
                row = {}
                for a, x in rv.get((c, j), ()):
                    row[i * v + a] = x
                for b, x in right:
                    k = b * v + j
                    y = F.reduce(row.get(k, 0) - x)
                    if y != 0:
                        row[k] = y
                    else:
                        row.pop(k, None)
                if row:
                    yield row


def colinear_system(V, W):
    """Dense coefficient matrix whose kernel is the space of colinear ``phi: V -> W``."""
    _check_pair(V, W)
    F = V.field
    cols = V.dim * W.dim
    rows = list(colinear_rows(V, W))
    a = F.zeros((len(rows), cols))
    for r, row in enumerate(rows):
        for k, x in row.items():
            a[r, k] = x
    return Matrix(F, a)


def hom_colinear(V, W):
    """Colinear maps ``V -> W`` inside the ``dim W * dim V`` flat matrix space."""
    _check_pair(V, W)
    return sparse_kernel(V.field, colinear_rows(V, W), V.dim * W.dim)


def hom_dim(V, W):
    _check_pair(V, W)
    return sparse_nullity(V.field, colinear_rows(V, W), V.dim * W.dim)


def hom_to_matrix(field, vec, rows, cols):
    """Turn a flat row of a Hom subspace back into a ``rows x cols`` Matrix."""
    a = vec.a if isinstance(vec, Matrix) else np.asarray(vec)
    return Matrix(field, np.array(a, dtype=field.dtype).reshape(rows, cols))


def is_colinear(V, W, phi):
    cleg = 1 if V.side == "right" else 0
    vleg = 1 - cleg
    lhs = apply_at(phi, V.rho, _legs(V.side, V.dim, V.over.dim), vleg)
    return lhs == W.rho @ phi


def cofree_comodule(V):
    """``V (x) C`` with coaction ``I (x) Delta`` (``C (x) V`` with ``Delta (x) I`` for left)."""
    C, m, n = V.over, V.dim, V.over.dim
    if V.side == "right":
        rho = apply_at(C.delta, Matrix.identity(C.field, m * n), (m, n), 1)
        # V (x) C (x) C reads as (V (x) C) (x) C already
    else:
        rho = apply_at(C.delta, Matrix.identity(C.field, n * m), (n, m), 0)
    return Comodule(C, V.side, m * n, rho, V.name and f"{V.name}(x)C")


def _right_inverse_system(field, A, rows):
    """Equations ``X @ A = I`` for unknown ``X`` (``rows x A.rows``), flat row-major."""
    return kron(Matrix.identity(field, rows), A.T)


def _left_inverse_system(field, B, cols):
    """Equations ``B @ X = I`` for unknown ``X`` (``B.cols x cols``)."""
    return kron(B, Matrix.identity(field, cols))


def _flat_identity(field, n):
    return Matrix(field, field.eye(n).reshape(n * n, 1))


def is_injective_comodule(V):
    """``(True, sigma)`` when ``rho: V -> V (x) C`` splits colinearly, else ``(False, None)``.

    ``sigma: V (x) C -> V`` is colinear for the cofree coaction and ``sigma rho = I``.
    """
    F, m = V.field, V.dim
    if m == 0:
        return True, Matrix.zeros(F, 0, 0)
    cof = cofree_comodule(V)
    system = colinear_system(cof, V)
    inv = _right_inverse_system(F, V.rho, m)
    zero = Matrix.zeros(F, system.rows, 1)
    sol = solve_linear(system.vstack(inv), zero.vstack(_flat_identity(F, m)))
    if sol is None:
        return False, None
    return True, hom_to_matrix(F, sol[0].T, m, cof.dim)


def find_comodule_splitting(f, side="right"):
    """A ``D``-colinear right inverse ``s`` of a surjective coalgebra map ``f: C -> D``.

    ``C`` is a ``D``-comodule through ``(I (x) f) Delta`` (or ``(f (x) I) Delta``)
    and ``D`` is regular.  Returns a linear :class:`Morphism` or ``None``.
    """
    C, D = f.src, f.dst
    F = f.field
    if f.matrix.rank() != D.dim:
        raise NotSurjective(f"rank {f.matrix.rank()} < dim {D.dim}")
    Cd = corestrict(regular_comodule(C, side), f)
    Dr = regular_comodule(D, side)
    system = colinear_system(Dr, Cd)
    inv = _left_inverse_system(F, f.matrix, D.dim)
    zero = Matrix.zeros(F, system.rows, 1)
    sol = solve_linear(system.vstack(inv), zero.vstack(_flat_identity(F, D.dim)))
    if sol is None:
        return None
    s = hom_to_matrix(F, sol[0].T, C.dim, D.dim)
    return Morphism("linear", D, C, s, f"split({f.name})" if f.name else "")


# --------------------------------------------------------------------------
# Hopf constructions


def dual_comodule(V):
    """``V*`` over a Hopf algebra: ``phi_0 phi_1 = phi(v_0) S(v_1)`` (right case)."""
    H = V.over
    if not isinstance(H, HopfAlgebra):
        raise NotABialgebra("dual comodules need an antipode")
    if V.side != "right":
        raise ShapeMismatch("dual_comodule handles right comodules")
    F, m, n = V.field, V.dim, H.dim
    R = V.tensor3()  # R[b, c', a]
    S = H.antipode.a
    # coefficient of e_a* (x) e_c in rho(e_b*) is sum_c' S[c, c'] R[b, c', a]
    T = contract(F, "cd,bda->acb", S, R)
    return validate_comodule(H, "right", m, Matrix(F, T.reshape(m * n, m)),
                             V.name and f"{V.name}*")


def tensor_comodule(V, W):
    """``V (x) W`` with ``v (x) w -> v_0 (x) w_0 (x) v_1 w_1`` (right comodules over a bialgebra)."""
    H = V.over
    if not has_algebra(H):
        raise NotABialgebra("tensor products of comodules need a multiplication")
    if V.side != "right" or W.side != "right":
        raise ShapeMismatch("tensor_comodule handles right comodules")
    F, a, b, n = V.field, V.dim, W.dim, H.dim
    R1, R2 = V.tensor3(), W.tensor3()  # [x, c, i], [y, d, j]
    T = contract(F, "xci,ydj->xyijcd", R1, R2)
    M = H.alg.tensor3()  # [u, c, d]
    T = contract(F, "xyijcd,ucd->xyuij", T, M)
    rho = Matrix(F, T.reshape(a * b * n, a * b))
    return validate_comodule(H, "right", a * b, rho,
                             V.name and W.name and f"{V.name}(x){W.name}")


def opposite_side(V):
    """Read a left comodule over ``C`` as a right comodule over the co-opposite coalgebra."""
    from .structures import Coalgebra
    from .exactla import flip

    C, m, n = V.over, V.dim, V.over.dim
    Ccop = Coalgebra(C.field, n, flip(C.delta, n, n), C.counit, C.name and C.name + "cop")
    side = "right" if V.side == "left" else "left"
    rho = flip(V.rho, *_legs(V.side, m, n))
    return Comodule(Ccop, side, m, rho, V.name)
