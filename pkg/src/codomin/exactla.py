"""Dense exact linear algebra over a :class:`~codomin.scalars.Field`.

Matrices act on column coordinate vectors.  Tensor coordinates are flattened
row-major: ``e_i (x) e_j`` in ``k^a (x) k^b`` has flat index ``i*b + j``, which
is exactly numpy's C-order reshape, so legs can be split with ``reshape``.

Subspaces are kept as the row space of a matrix in reduced row-echelon form,
which makes equality of subspaces a plain comparison of basis matrices.
"""

import numpy as np

from .errors import DimensionMismatch, FieldMismatch


class Matrix:
    """Immutable dense matrix of raw field values."""

    __slots__ = ("field", "a")

    def __init__(self, field, a):
        a = np.asarray(a, dtype=field.dtype)
        if a.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d array, got shape {a.shape}")
        a.setflags(write=False)
        self.field = field
        self.a = a

    @classmethod
    def from_rows(cls, field, rows, shape=None):
        rows = list(rows)
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        if not rows:
            return cls(field, field.zeros(shape))
        return cls(field, field.asarray(rows, shape=shape))

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, field.zeros((rows, cols)))

    @classmethod
    def identity(cls, field, n):
        return cls(field, field.eye(n))

    @classmethod
    def column(cls, field, values):
        values = list(values)
        return cls.from_rows(field, [[v] for v in values], shape=(len(values), 1))

    @property
    def shape(self):
        return self.a.shape

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    @property
    def T(self):
        return Matrix(self.field, self.a.T.copy())

    def _same_field(self, other):
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __matmul__(self, other):
        self._same_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix(self.field, self.field.normalize(self.a @ other.a))

    def __add__(self, other):
        self._same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.field, self.field.normalize(self.a + other.a))

    def __sub__(self, other):
        self._same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(self.field, self.field.normalize(self.a - other.a))

    def __neg__(self):
        return Matrix(self.field, self.field.normalize(-self.a))

    def scale(self, c):
        return Matrix(self.field, self.field.normalize(self.a * self.field.coerce(c)))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool(np.all(self.a == other.a))

    def __hash__(self):
        return hash((self.field.spec, self.shape, tuple(str(x) for x in self.a.flat)))

    def is_zero(self):
        return bool(np.all(self.a == 0))

    def col(self, j):
        return Matrix(self.field, self.a[:, j : j + 1].copy())

    def row(self, i):
        return Matrix(self.field, self.a[i : i + 1, :].copy())

    def take_rows(self, idx):
        return Matrix(self.field, self.a[list(idx), :].copy())

    def take_cols(self, idx):
        return Matrix(self.field, self.a[:, list(idx)].copy())

    def vstack(self, other):
        self._same_field(other)
        return Matrix(self.field, np.vstack([self.a, other.a]))

    def hstack(self, other):
        self._same_field(other)
        return Matrix(self.field, np.hstack([self.a, other.a]))

    def reshape_cols(self, rows):
        """Reinterpret every column's flat coordinates with a different row count."""
        return Matrix(self.field, self.a.reshape(rows, -1).copy())

    def rank(self):
        return len(_sparse_reduce(self.field, self.a))

    def tolist(self):
        fmt = self.field.format
        return [[fmt(x) for x in row] for row in self.a]

    def __repr__(self):
        return f"Matrix({self.field.spec}, {self.tolist()})"


# --------------------------------------------------------------------------
# elimination


def _rref_array(field, a):
    """Gauss-Jordan in place on a writable array; returns the pivot columns.

    Only rows with a nonzero in the pivot column and columns where the pivot
    row is nonzero are touched, which keeps the sparse structure-constant
    systems cheap.
    """
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c] != 0)
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        inv = field.inv(a[r, c])
        a[r] = field.normalize(a[r] * inv)
        others = np.flatnonzero(a[:, c] != 0)
        others = others[others != r]
        if others.size:
            pc = np.flatnonzero(a[r] != 0)
            block = np.ix_(others, pc)
            a[block] = field.normalize(a[block] - np.multiply.outer(a[others, c], a[r, pc]))
        pivots.append(c)
        r += 1
    return pivots


def rref(M):
    """Reduced row-echelon form: ``(R, pivots)`` with ``R`` holding only the nonzero rows."""
    a = np.array(M.a, dtype=M.field.dtype, copy=True)
    pivots = _rref_array(M.field, a)
    return Matrix(M.field, a[: len(pivots)]), tuple(pivots)


def dense_rows(a):
    """Rows of a raw array as ``{column: value}`` dicts of the nonzero entries."""
    for raw in a:
        nz = np.flatnonzero(raw != 0)
        if nz.size:
            yield {int(c): raw[c] for c in nz}


def _sparse_reduce(field, rows):
    """Row-reduce a mostly-zero system given as ``{column: value}`` rows.

    ``rows`` may also be a raw 2-d array.

    Returns ``{pivot column: row}`` where each row is a ``{column: value}``
    dict with a 1 at its own pivot and no entries in any other pivot column.
    The pivot set is not the RREF one in general, but the row space is, so
    kernels and ranks read off directly.
    """
    red = field.reduce
    pivrows = {}
    where = {}  # column -> pivot columns whose row touches it
    if isinstance(rows, np.ndarray):
        rows = dense_rows(rows)
    for row in rows:
        row = dict(row)
        for c in [c for c in row if c in pivrows]:
            v = row.pop(c, None)
            if v is None:
                continue
            for k, x in pivrows[c].items():
                if k == c:
                    continue
                y = red(row.get(k, 0) - v * x)
                if y != 0:
                    row[k] = y
                else:
                    row.pop(k, None)
        if not row:
            continue
        pc = min(row)
        inv = field.inv(row[pc])
        row = {k: red(x * inv) for k, x in row.items()}
        # clear the new pivot column from earlier pivot rows
        for q in list(where.get(pc, ())):
            prow = pivrows[q]
            v = prow.pop(pc, None)
            if v is None:
                continue
            for k, x in row.items():
                if k == pc:
                    continue
                y = red(prow.get(k, 0) - v * x)
                if y != 0:
                    if k not in prow:
                        where.setdefault(k, set()).add(q)
                    prow[k] = y
                elif k in prow:
                    del prow[k]
                    where[k].discard(q)
        where.pop(pc, None)
        pivrows[pc] = row
        for k in row:
            if k != pc:
                where.setdefault(k, set()).add(pc)
    return pivrows


def sparse_rank(M):
    return len(_sparse_reduce(M.field, M.a))


def _kernel_rows(field, pivrows, cols):
    free = [c for c in range(cols) if c not in pivrows]
    index = {f: k for k, f in enumerate(free)}
    out = field.zeros((len(free), cols))
    for k, f in enumerate(free):
        out[k, f] = field.one
    for pc, row in pivrows.items():
        for f, x in row.items():
            if f != pc:
                out[index[f], pc] = field.reduce(-x)
    return out


def kernel(M):
    """Right kernel ``{v : M v = 0}`` as a :class:`Subspace`."""
    return sparse_kernel(M.field, M.a, M.cols)


def sparse_kernel(field, rows, cols):
    """Kernel of a system given as dict rows (see :func:`_sparse_reduce`)."""
    kr = _kernel_rows(field, _sparse_reduce(field, rows), cols)
    return Subspace.span(field, cols, Matrix(field, kr))


def sparse_nullity(field, rows, cols):
    return cols - len(_sparse_reduce(field, rows))


def image(M):
    """Column space of ``M``."""
    return Subspace.span(M.field, M.rows, M.T)


def kernel_image_rank(M):
    return kernel(M), image(M), M.rank()


def kron(A, B):
    """Kronecker product with the row-major flat index convention."""
    A._same_field(B)
    F = A.field
    ra, ca = A.shape
    rb, cb = B.shape
    if 0 in (ra, ca, rb, cb):
        return Matrix.zeros(F, ra * rb, ca * cb)
    out = np.multiply.outer(A.a, B.a)  # (ra, ca, rb, cb)
    out = out.transpose(0, 2, 1, 3).reshape(ra * rb, ca * cb)
    return Matrix(F, F.normalize(out))


def solve_linear(M, b):
    """Solve ``M x = b``; returns ``(x, kernel(M))`` or ``None`` when inconsistent."""
    if b.rows != M.rows or b.cols != 1:
        raise DimensionMismatch(f"rhs shape {b.shape} does not fit {M.shape}")
    F, n = M.field, M.cols
    pivrows = _sparse_reduce(F, np.hstack([M.a, b.a]))
    if n in pivrows:
        return None
    # free variables set to zero; rows keep only their pivot among pivot columns
    x = F.zeros((n, 1))
    for pc, row in pivrows.items():
        x[pc, 0] = row.get(n, F.zero)
    rows = _kernel_rows(F, {pc: {k: v for k, v in row.items() if k != n}
                            for pc, row in pivrows.items()}, n)
    return Matrix(F, x), Subspace.span(F, n, Matrix(F, rows))


# --------------------------------------------------------------------------
# tensor legs


def apply_at(A, X, dims, leg):
    """Apply ``A`` to tensor leg ``leg`` of every column of ``X``.

    ``X`` has ``prod(dims)`` rows, read as a tensor with the given leg sizes.
    The result has leg ``leg`` replaced by ``A.rows``; with ``A`` the identity
    on the other legs this is ``(I (x) ... (x) A (x) ... (x) I) @ X``.
    """
    F = X.field
    dims = list(dims)
    if A.cols != dims[leg]:
        raise DimensionMismatch(f"map {A.shape} does not fit leg {leg} of {dims}")
    out_dims = dims[:leg] + [A.rows] + dims[leg + 1 :]
    k = X.cols
    if 0 in out_dims or k == 0 or A.cols == 0:
        return Matrix.zeros(F, int(np.prod(out_dims)), k)
    T = X.a.reshape(*dims, k)
    R = np.tensordot(A.a, T, axes=([1], [leg]))
    R = np.moveaxis(R, 0, leg).reshape(-1, k)
    return Matrix(F, F.normalize(R))


def permute_legs(X, dims, order):
    """Reorder tensor legs of every column: new leg ``i`` is old leg ``order[i]``."""
    k = X.cols
    T = X.a.reshape(*dims, k)
    T = T.transpose(*order, len(dims))
    return Matrix(X.field, T.reshape(-1, k).copy())


def flip(X, a, b):
    """``tau (x) ...`` on columns of ``X`` read in ``k^a (x) k^b``."""
    return permute_legs(X, (a, b), (1, 0))


def flip_matrix(field, a, b):
    """Matrix of the flip ``k^a (x) k^b -> k^b (x) k^a``."""
    return flip(Matrix.identity(field, a * b), a, b)


# --------------------------------------------------------------------------
# subspaces


class Subspace:
    """Subspace of ``k^n`` stored as an RREF basis (rows)."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, field, ambient_dim, vectors):
        """Row span of ``vectors`` (a Matrix with ``ambient_dim`` columns, or a list of rows)."""
        if not isinstance(vectors, Matrix):
            vectors = list(vectors)
            vectors = Matrix.from_rows(field, vectors, shape=(len(vectors), ambient_dim))
        if vectors.cols != ambient_dim:
            raise DimensionMismatch(f"vectors of length {vectors.cols} in k^{ambient_dim}")
        R, pivots = rref(vectors)
        return cls(field, ambient_dim, R, pivots)

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, Matrix.zeros(field, 0, n), ())

    @classmethod
    def full(cls, field, n):
        return cls(field, n, Matrix.identity(field, n), range(n))

    @classmethod
    def from_columns(cls, M):
        """Span of the columns of ``M``."""
        return image(M)

    @property
    def dim(self):
        return self.basis.rows

    def __len__(self):
        return self.dim

    def columns(self):
        """Basis vectors as the columns of an ``n x dim`` matrix."""
        return self.basis.T

    def _compatible(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch(f"k^{self.ambient_dim} vs k^{other.ambient_dim}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.pivots == other.pivots
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def contains_vector(self, v):
        """Membership test for a column or row vector (Matrix) or sequence."""
        if isinstance(v, Matrix):
            vals = v.a.reshape(-1)
        else:
            vals = self.field.asarray(list(v))
        if len(vals) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        return self.contains(Subspace.span(self.field, self.ambient_dim,
                                           Matrix(self.field, np.array(vals, dtype=self.field.dtype).reshape(1, -1))))

    def contains(self, other):
        self._compatible(other)
        if other.dim == 0:
            return True
        if other.dim > self.dim:
            return False
        return (self + other).dim == self.dim

    def __le__(self, other):
        return other.contains(self)

    def __ge__(self, other):
        return self.contains(other)

    def __add__(self, other):
        self._compatible(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis.vstack(other.basis))

    def __and__(self, other):
        self._compatible(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        stacked = self.basis.vstack(other.basis)
        rel = kernel(stacked.T)  # rows (x, y) with x U + y W = 0
        if rel.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        xs = rel.basis.take_cols(range(self.dim))
        return Subspace.span(self.field, self.ambient_dim, xs @ self.basis)

    def intersect(self, other):
        return self & other

    def quotient_basis(self):
        """``(projection, section)`` for ``k^n -> k^n / U``.

        The quotient is identified with the span of the non-pivot standard
        basis vectors; ``projection @ section`` is the identity.
        """
        F, n = self.field, self.ambient_dim
        piv = set(self.pivots)
        free = [c for c in range(n) if c not in piv]
        # v -> v - sum_r v[pivot_r] * basis_r, then keep the free coordinates
        reducer = F.eye(n)
        for r, pc in enumerate(self.pivots):
            reducer[:, pc] = F.normalize(reducer[:, pc] - self.basis.a[r])
        proj = Matrix(F, reducer[free, :].copy())
        sec = F.zeros((n, len(free)))
        for j, c in enumerate(free):
            sec[c, j] = F.one
        return proj, Matrix(F, sec)

    def image_under(self, M):
        """``M(U)`` for a linear map ``M`` with ``M.cols == ambient_dim``."""
        if M.cols != self.ambient_dim:
            raise DimensionMismatch(f"map {M.shape} on k^{self.ambient_dim}")
        if self.dim == 0:
            return Subspace.zero(self.field, M.rows)
        return Subspace.span(self.field, M.rows, (M @ self.basis.T).T)

    def preimage(self, M):
        """``{v : M v in U}`` for ``M`` with ``M.rows == ambient_dim``."""
        if M.rows != self.ambient_dim:
            raise DimensionMismatch(f"map {M.shape} into k^{self.ambient_dim}")
        proj, _ = self.quotient_basis()
        if proj.rows == 0:
            return Subspace.full(self.field, M.cols)
        return kernel(proj @ M)

    def coordinates(self, v):
        """Coordinates of a column vector in this basis (``None`` if outside)."""
        sol = solve_linear(self.basis.T, v)
        return None if sol is None else sol[0]

    def tensor(self, other):
        """``U (x) W`` inside ``k^n (x) k^m``."""
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return Subspace.span(self.field, self.ambient_dim * other.ambient_dim, kron(self.basis, other.basis))

    def tolist(self):
        return self.basis.tolist()

    def __repr__(self):
        return f"Subspace(dim={self.dim} in k^{self.ambient_dim}, {self.tolist()})"


def subspace_ops(U, W, op):
    if op == "sum":
        return U + W
    if op in ("intersect", "intersection"):
        return U & W
    if op == "contains":
        return U.contains(W)
    if op == "quotient_basis":
        U._compatible(W)
        return U.quotient_basis()
    raise ValueError(f"unknown subspace op {op!r}")


def contract(field, subscripts, A, B):
    """``einsum`` of two raw arrays followed by field normalization."""
    if A.size == 0 or B.size == 0:
        out_shape = np.einsum(subscripts, np.zeros(A.shape), np.zeros(B.shape)).shape
        return field.zeros(out_shape)
    return field.normalize(np.einsum(subscripts, A, B))
