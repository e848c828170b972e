"""Standard example objects and the distinguished morphisms between them.

Group elements follow the Cayley-table order (row 0 is the identity).  The
Taft algebra of order ``n`` uses the basis ``g^i x^j`` at index ``i + n*j``,
so Sweedler's algebra has basis ``1, g, x, gx``.
"""

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import BadParams
from .exactla import Matrix
from .scalars import parse_field_spec
from .structures import (AlgebraStr, Morphism,
                         dualize, make_morphism, renamed, tensor_objects,
                         trivial_object, validate_structure)


# --------------------------------------------------------------------------
# groups


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def klein_table():
    return [[i ^ j for j in range(4)] for i in range(4)]


def symmetric3_table():
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(k) = p(q(k))
    return [[index[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms]


def check_group_table(table):
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise BadParams("Cayley table must be a nonempty square")
    if any(not (0 <= x < n) for row in table for x in row):
        raise BadParams("Cayley table entries out of range")
    if any(table[0][j] != j or table[j][0] != j for j in range(n)):
        raise BadParams("row and column 0 must be the identity")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise BadParams(f"Cayley table is not associative at {(a, b, c)}")
    for a in range(n):
        if 0 not in table[a]:
            raise BadParams(f"element {a} has no inverse")
    return [table[a].index(0) for a in range(n)]


def group_algebra(field, table, name="kG"):
    inverses = check_group_table(table)
    n = len(table)
    F = field
    delta = F.zeros((n * n, n))
    mul = F.zeros((n, n * n))
    S = F.zeros((n, n))
    for g in range(n):
        delta[g * n + g, g] = F.one
        S[inverses[g], g] = F.one
        for h in range(n):
            mul[table[g][h], g * n + h] = F.one
    counit = Matrix.from_rows(F, [[1] * n])
    unit = Matrix.column(F, [1] + [0] * (n - 1))
    return validate_structure(F, n, Matrix(F, delta), counit, Matrix(F, mul), unit,
                              Matrix(F, S), name)


def function_algebra(field, table, name="k^G"):
    return renamed(dualize(group_algebra(field, table)), name)


# --------------------------------------------------------------------------
# Taft / Sweedler


def _is_primitive_root(F, q, n):
    x = F.one
    for k in range(1, n + 1):
        x = F.reduce(x * q)
        if x == F.one:
            return k == n
    return False


def taft(field, n, q=None, name=None):
    """Taft algebra of dimension ``n^2`` for a primitive ``n``-th root of unity ``q``."""
    F = field
    n = int(n)
    if n < 2:
        raise BadParams("Taft algebras need n >= 2")
    if q is None:
        if n == 2 and F.characteristic != 2:
            q = F.reduce(-F.one)
        else:
            raise BadParams(f"a primitive {n}-th root of unity must be supplied")
    q = F.coerce(q)
    if F.characteristic == 0 and F.degree == 1 and n > 2:
        raise BadParams("over Q only n = 2 is available")
    if not _is_primitive_root(F, q, n):
        raise BadParams(f"{F.format(q)} is not a primitive {n}-th root of unity in {F}")
    dim = n * n
    idx = lambda i, j: (i % n) + n * j  # noqa: E731
    qinv = F.inv(q)
    qpow = [F.one]
    for _ in range(n - 1):
        qpow.append(F.reduce(qpow[-1] * qinv))

    def mono(a, b, c, d):
        # (g^a x^b)(g^c x^d) = q^(-bc) g^(a+c) x^(b+d), zero once b+d >= n
        if b + d >= n:
            return None
        return qpow[(b * c) % n], idx(a + c, b + d)

    mul = F.zeros((dim, dim * dim))
    for a, b, c, d in itertools.product(range(n), repeat=4):
        m = mono(a, b, c, d)
        if m is not None:
            mul[m[1], idx(a, b) * dim + idx(c, d)] = m[0]
    unit = Matrix.column(F, [1] + [0] * (dim - 1))
    A = AlgebraStr(F, dim, Matrix(F, mul), unit)

    # elements are sparse dicts keyed by exponent pairs (or pairs of pairs in A (x) A)
    def times(u, v):
        out = {}
        for (a, b), s in u.items():
            for (c, d), t in v.items():
                m = mono(a, b, c, d)
                if m is not None:
                    key = ((a + c) % n, b + d)
                    out[key] = F.reduce(out.get(key, F.zero) + s * t * m[0])
        return out

    def times2(u, v):
        out = {}
        for (l1, r1), s in u.items():
            for (l2, r2), t in v.items():
                for kl, cl in times({l1: F.one}, {l2: F.one}).items():
                    for kr, cr in times({r1: F.one}, {r2: F.one}).items():
                        out[kl, kr] = F.reduce(out.get((kl, kr), F.zero) + s * t * cl * cr)
        return out

    g, x, one = (1, 0), (0, 1), (0, 0)
    dg = {(g, g): F.one}
    dx = {(x, one): F.one, (g, x): F.one}
    delta = F.zeros((dim * dim, dim))
    for i, j in itertools.product(range(n), repeat=2):
        v = {(one, one): F.one}
        for _ in range(i):
            v = times2(v, dg)
        for _ in range(j):
            v = times2(v, dx)
        for (l, r), c in v.items():
            delta[idx(*l) * dim + idx(*r), idx(i, j)] = c
    counit = Matrix.from_rows(F, [[1 if k < n else 0 for k in range(dim)]])
    # S(g^i x^j) = S(x)^j S(g)^i with S(g) = g^(n-1), S(x) = -g^(n-1) x
    sg = {(n - 1, 0): F.one}
    sx = {(n - 1, 1): F.reduce(-F.one)}
    S = F.zeros((dim, dim))
    for i, j in itertools.product(range(n), repeat=2):
        v = {one: F.one}
        for _ in range(j):
            v = times(v, sx)
        for _ in range(i):
            v = times(v, sg)
        for k, c in v.items():
            S[idx(*k), idx(i, j)] = c
    return validate_structure(F, dim, Matrix(F, delta), counit, A.mul, unit, Matrix(F, S),
                              name or ("H4" if n == 2 else f"Taft{n}"))


def sweedler4(field, name="H4"):
    if field.characteristic == 2:
        raise BadParams("Sweedler's algebra needs characteristic != 2")
    return taft(field, 2, name=name)


# --------------------------------------------------------------------------
# coalgebras and algebras


def comatrix(field, n, name=None):
    F, dim = field, n * n
    delta = F.zeros((dim * dim, dim))
    for i, j, k in itertools.product(range(n), repeat=3):
        delta[(i * n + k) * dim + (k * n + j), i * n + j] = F.one
    counit = Matrix.from_rows(F, [[1 if i == j else 0 for i in range(n) for j in range(n)]],
                              shape=(1, dim))
    return validate_structure(F, dim, Matrix(F, delta), counit, name=name or f"M{n}c")


def matrix_algebra(field, n, name=None):
    return renamed(dualize(comatrix(field, n)), name or f"M{n}")


def truncated_polynomial(field, n, name=None):
    """``k[t]/(t^n)`` with basis ``1, t, ..., t^(n-1)``."""
    F = field
    mul = F.zeros((n, n * n))
    for i, j in itertools.product(range(n), repeat=2):
        if i + j < n:
            mul[i + j, i * n + j] = F.one
    unit = Matrix.column(F, [1] + [0] * (n - 1))
    return validate_structure(F, n, mul=Matrix(F, mul), unit=unit, name=name or f"k[t]/t^{n}")


def divided_power(field, n, name=None):
    return renamed(dualize(truncated_polynomial(field, n)), name or f"Div{n}")


def _matrix_units_algebra(field, units, name):
    """Subalgebra of ``M_2`` spanned by the listed matrix units ``(i, j)``."""
    F = field
    pos = {u: k for k, u in enumerate(units)}
    d = len(units)
    mul = F.zeros((d, d * d))
    for (a, b), (c, e) in itertools.product(units, repeat=2):
        if b == c:
            mul[pos[(a, e)], pos[(a, b)] * d + pos[(c, e)]] = F.one
    unit = Matrix.column(F, [1 if i == j else 0 for (i, j) in units])
    return validate_structure(F, d, mul=Matrix(F, mul), unit=unit, name=name)


_D2 = [(0, 0), (1, 1)]
_T2 = [(0, 0), (0, 1), (1, 1)]
_M2 = [(0, 0), (0, 1), (1, 0), (1, 1)]


def _inclusion_matrix(field, small, big):
    return Matrix.from_rows(field, [[1 if b == s else 0 for s in small] for b in big])


def diagonal2(field):
    return _matrix_units_algebra(field, _D2, "D2")


def triangular2(field):
    return _matrix_units_algebra(field, _T2, "T2")


def triangular_pair(field):
    """``D2 -> T2`` (algebra inclusion) and its dual ``T2* -> D2*``."""
    D, T = diagonal2(field), triangular2(field)
    inc = make_morphism(D, T, _inclusion_matrix(field, _D2, _T2), "alg", "D2->T2")
    dual = renamed_morphism(dualize(inc), "T2*->D2*")
    return inc, dual


def triangular_in_matrix_pair(field):
    """``T2 -> M2`` (an epic non-surjective algebra map) and its dual ``M2c -> T2*``."""
    T = triangular2(field)
    M = _matrix_units_algebra(field, _M2, "M2")
    inc = make_morphism(T, M, _inclusion_matrix(field, _T2, _M2), "alg", "T2->M2")
    return inc, renamed_morphism(dualize(inc), "M2c->T2*")


def renamed_morphism(f, name):
    return Morphism(f.kind, f.src, f.dst, f.matrix, name)


def group_hom(G, H, gtable, htable, images, name=""):
    """Hopf map ``kG -> kH`` sending basis element ``g`` to ``images[g]``."""
    for a, b in itertools.product(range(len(gtable)), repeat=2):
        if images[gtable[a][b]] != htable[images[a]][images[b]]:
            raise BadParams("images do not define a group homomorphism")
    F = G.field
    m = Matrix.from_rows(F, [[1 if images[g] == h else 0 for g in range(G.dim)]
                             for h in range(H.dim)])
    return make_morphism(G, H, m, "hopf", name)


def cyclic_pair(field, m, n):
    """``kC_n -> kC_m`` (``g -> g^(m/n)``) and the dual surjection ``k^{C_m} -> k^{C_n}``."""
    if n <= 0 or m % n:
        raise BadParams("cyclic_pair needs n | m")
    Cn = group_algebra(field, cyclic_table(n), f"kC{n}")
    Cm = group_algebra(field, cyclic_table(m), f"kC{m}")
    inc = group_hom(Cn, Cm, cyclic_table(n), cyclic_table(m),
                    [(k * (m // n)) % m for k in range(n)], f"kC{n}->kC{m}")
    dual = dualize(inc)
    dual = Morphism(dual.kind, renamed(dual.src, f"k^C{m}"), renamed(dual.dst, f"k^C{n}"),
                    dual.matrix, f"k^C{m}->k^C{n}")
    return inc, dual


def counit_map(C, name=""):
    k = trivial_object(C.field, C.kind)
    return make_morphism(C, k, C.counit, name=name or f"eps_{C.name}")


def unit_map(H, name=""):
    k = trivial_object(H.field, H.kind)
    return make_morphism(k, H, H.unit, name=name or f"unit_{H.name}")


def identity_map(X):
    return make_morphism(X, X, Matrix.identity(X.field, X.dim), name=f"id_{X.name}")


# --------------------------------------------------------------------------
# corpus


@dataclass
class Corpus:
    field: object
    objects: dict = dc_field(default_factory=dict)
    morphisms: dict = dc_field(default_factory=dict)

    def add(self, *items):
        for x in items:
            if isinstance(x, Morphism):
                self.morphisms[x.name] = x
            else:
                self.objects[x.name] = x
        return items[0] if len(items) == 1 else items

    def of_kind(self, *kinds):
        return [f for f in self.morphisms.values() if f.kind in kinds]


def corpus(field):
    """All standard objects over ``field`` with their distinguished morphisms."""
    if isinstance(field, str):
        field = parse_field_spec(field)
    F = field
    c = Corpus(F)
    c.add(trivial_object(F, "hopf"))
    C2 = c.add(group_algebra(F, cyclic_table(2), "kC2"))
    C3 = c.add(group_algebra(F, cyclic_table(3), "kC3"))
    C4 = c.add(group_algebra(F, cyclic_table(4), "kC4"))
    V4 = c.add(group_algebra(F, klein_table(), "kV4"))
    S3 = c.add(group_algebra(F, symmetric3_table(), "kS3"))
    C2C2 = c.add(renamed(tensor_objects(C2, C2), "kC2(x)kC2"))
    fC2 = c.add(function_algebra(F, cyclic_table(2), "k^C2"))
    fC4 = c.add(function_algebra(F, cyclic_table(4), "k^C4"))
    M2c = c.add(comatrix(F, 2))
    div3 = c.add(divided_power(F, 3))
    kc = c.add(trivial_object(F, "coalgebra"))

    for X in (C2, C3, C4, V4, S3, C2C2, fC2, fC4, M2c, div3):
        c.add(counit_map(X))
        c.add(identity_map(X))
    for X in (C2, C4, V4, C2C2, fC4):
        c.add(unit_map(X))

    c2, c4, v4, s3 = cyclic_table(2), cyclic_table(4), klein_table(), symmetric3_table()
    c.add(group_hom(C4, C2, c4, c2, [0, 1, 0, 1], "kC4->kC2"))
    c.add(group_hom(C2, C4, c2, c4, [0, 2], "kC2->kC4"))
    c.add(group_hom(S3, C2, s3, c2, [0, 0, 0, 1, 1, 1], "sign"))
    c.add(group_hom(C2, S3, c2, s3, [0, 3], "kC2->kS3"))
    c.add(group_hom(C3, S3, cyclic_table(3), s3, [0, 1, 2], "kC3->kS3"))
    c.add(group_hom(V4, C2, v4, c2, [0, 1, 0, 1], "kV4->kC2"))
    c.add(group_hom(C2, V4, c2, v4, [0, 1], "kC2->kV4"))
    c.add(group_hom(C2, C2, c2, c2, [0, 0], "kC2->1->kC2"))
    # kC2 (x) kC2 has basis 1(x)1, 1(x)g, g(x)1, g(x)g, i.e. the Klein group
    mult = make_morphism(C2C2, C2, [[1, 0, 0, 1], [0, 1, 1, 0]], "hopf", "mult")
    pr1 = make_morphism(C2C2, C2, [[1, 1, 0, 0], [0, 0, 1, 1]], "hopf", "id(x)eps")
    pr2 = make_morphism(C2C2, C2, [[1, 0, 1, 0], [0, 1, 0, 1]], "hopf", "eps(x)id")
    c.add(mult, pr1, pr2)
    for f in (mult, pr1, pr2):
        d = dualize(f)
        c.add(Morphism(d.kind, fC2, renamed(d.dst, "k^(C2xC2)"), d.matrix, f"{f.name}*"))

    inc, dual = cyclic_pair(F, 4, 2)
    c.add(inc, Morphism(dual.kind, fC4, fC2, dual.matrix, dual.name))

    Dinc, Tdual = triangular_pair(F)
    c.add(Dinc.src, Dinc.dst, Tdual.src, Tdual.dst, Dinc, Tdual)
    Tinc, Mdual = triangular_in_matrix_pair(F)
    c.add(Tinc.dst, Tinc, Morphism(Mdual.kind, M2c, Mdual.dst, Mdual.matrix, Mdual.name))
    c.add(counit_map(Tdual.src), counit_map(Tdual.dst))
    c.add(make_morphism(M2c, kc, M2c.counit, "coalg", "tr_M2c"))
    div2 = c.add(divided_power(F, 2))
    c.add(make_morphism(div2, div3, [[1, 0], [0, 1], [0, 0]], "coalg", "Div2->Div3"))

    if F.characteristic != 2:
        H4 = c.add(sweedler4(F))
        c.add(counit_map(H4), identity_map(H4), unit_map(H4))
        c.add(make_morphism(H4, C2, [[1, 0, 0, 0], [0, 1, 0, 0]], "hopf", "H4->kC2"))
        c.add(make_morphism(C2, H4, [[1, 0], [0, 1], [0, 0], [0, 0]], "hopf", "kC2->H4"))
    return c


# --------------------------------------------------------------------------
# named entries


_GROUPS = {"C2": lambda: cyclic_table(2), "C3": lambda: cyclic_table(3),
           "C4": lambda: cyclic_table(4), "V4": klein_table, "S3": symmetric3_table}


def group_table(spec):
    """A Cayley table from ``C<n>``, ``V4``, ``S3`` or an explicit nested list."""
    if isinstance(spec, (list, tuple)):
        return [list(map(int, row)) for row in spec]
    spec = str(spec)
    if spec in _GROUPS:
        return _GROUPS[spec]()
    if spec.startswith("C") and spec[1:].isdigit() and int(spec[1:]) > 0:
        return cyclic_table(int(spec[1:]))
    raise BadParams(f"unknown group {spec!r}")


def _int_param(params, key, default=None):
    if key not in params:
        if default is None:
            raise BadParams(f"missing parameter {key!r}")
        return default
    try:
        return int(params[key])
    except (TypeError, ValueError):
        raise BadParams(f"parameter {key!r} must be an integer") from None


def build(name, field, params=None):
    """Build a catalog entry; returns ``(objects, morphisms)`` lists."""
    if isinstance(field, str):
        field = parse_field_spec(field)
    params = dict(params or {})
    F = field
    if name == "trivial":
        return [trivial_object(F, params.get("kind", "hopf"))], []
    if name in ("group_algebra", "function_algebra"):
        group = params.get("group", params.get("table", "C2"))
        table = group_table(group)
        label = group if isinstance(group, str) else "G"
        X = (group_algebra(F, table, f"k{label}") if name == "group_algebra"
             else function_algebra(F, table, f"k^{label}"))
        return [X], []
    if name == "sweedler4":
        return [sweedler4(F)], []
    if name == "taft":
        n = _int_param(params, "n")
        q = params.get("q")
        return [taft(F, n, F.coerce(q) if q is not None else None)], []
    if name == "comatrix":
        return [comatrix(F, _int_param(params, "n", 2))], []
    if name == "divided_power":
        return [divided_power(F, _int_param(params, "n", 3))], []
    if name == "triangular_pair":
        inc, dual = triangular_pair(F)
        return [inc.src, inc.dst, dual.src, dual.dst], [inc, dual]
    if name == "triangular_in_matrix_pair":
        inc, dual = triangular_in_matrix_pair(F)
        return [inc.src, inc.dst, dual.src, dual.dst], [inc, dual]
    if name == "cyclic_pair":
        inc, dual = cyclic_pair(F, _int_param(params, "m"), _int_param(params, "n"))
        return [inc.src, inc.dst, dual.src, dual.dst], [inc, dual]
    if name == "corpus":
        c = corpus(F)
        return list(c.objects.values()), list(c.morphisms.values())
    raise BadParams(f"unknown catalog entry {name!r}")


CATALOG_NAMES = ("trivial", "group_algebra", "function_algebra", "sweedler4", "taft",
                 "comatrix", "divided_power", "triangular_pair", "triangular_in_matrix_pair",
                 "cyclic_pair", "corpus")
