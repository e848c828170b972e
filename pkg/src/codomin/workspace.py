"""JSON workspace files: one field plus named objects, subspaces, morphisms and comodules.

Layout::

    {"field": "F2",
     "objects":   {"kC2": {"kind": "hopf", "dim": 2,
                           "delta": [[k, i, j, "c"], ...], "counit": ["c", ...],
                           "mul": [[k, i, j, "c"], ...], "unit": [...],
                           "antipode": [[...], ...]}},
     "subspaces": {"V": {"ambient": 2, "basis": [["1", "1"]], "of": "kC2"}},
     "morphisms": {"f": {"from": "kC2", "to": "k", "matrix": [[...]]}},
     "comodules": {"M": {"over": "kC2", "side": "right", "dim": 1,
                         "rho": [[v, w, c, "s"], ...]}}}

A ``delta`` entry adds ``c e_i (x) e_j`` to Delta(e_k); a ``mul`` entry adds
``c e_k`` to ``e_i e_j``; a ``rho`` entry adds ``s e_w (x) e_c`` to rho(e_v)
(``e_c (x) e_w`` for left comodules).  Bicomodules use ``"side": "bi"`` with
both ``"lambda"`` and ``"rho"``.  Emitted files are canonical: sorted keys,
sorted entries, reduced scalars.
"""

import itertools
import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from .comodules import Bicomodule, Comodule, comodule_violations
from .errors import (AxiomViolation, CodominError, ParseError, ShapeMismatch,
                     UnknownReference, ValidationError)
from .exactla import Matrix, Subspace
from .scalars import parse_field_spec
from .structures import (AlgebraStr, Bialgebra, Coalgebra, HopfAlgebra, Morphism,
                         make_morphism, renamed, validate_structure)

SECTIONS = ("objects", "subspaces", "morphisms", "comodules")


@dataclass
class Workspace:
    field: object
    objects: dict = dc_field(default_factory=dict)
    subspaces: dict = dc_field(default_factory=dict)
    morphisms: dict = dc_field(default_factory=dict)
    comodules: dict = dc_field(default_factory=dict)
    subspace_of: dict = dc_field(default_factory=dict)

    def names(self):
        return set(itertools.chain(self.objects, self.subspaces, self.morphisms, self.comodules))

    def _free(self, name):
        if name in self.names():
            raise ValidationError(name, ["duplicate name"])

    def add_object(self, X, name=None):
        name = name or X.name
        if self.objects.get(name) == X:
            return self.objects[name]
        self._free(name)
        X = renamed(X, name)
        self.objects[name] = X
        return X

    def add_morphism(self, f, name=None):
        name = name or f.name
        src = self.add_object(f.src)
        dst = self.add_object(f.dst)
        self._free(name)
        f = Morphism(f.kind, src, dst, f.matrix, name)
        self.morphisms[name] = f
        return f

    def add_subspace(self, name, U, of=None):
        self._free(name)
        self.subspaces[name] = U
        if of is not None:
            self.subspace_of[name] = of
        return U

    def add_comodule(self, V, name=None):
        name = name or V.name
        over = self.add_object(V.over)
        self._free(name)
        if isinstance(V, Bicomodule):
            V = Bicomodule(over, V.dim, V.lam, V.rho, name)
        else:
            V = Comodule(over, V.side, V.dim, V.rho, name)
        self.comodules[name] = V
        return V

    def get(self, section, name):
        table = getattr(self, section)
        if name not in table:
            raise UnknownReference(f"no {section[:-1]} named {name!r}")
        return table[name]


# --------------------------------------------------------------------------
# parsing


class _Path:
    def __init__(self, *parts):
        self.parts = parts

    def __truediv__(self, p):
        return _Path(*self.parts, p)

    def __str__(self):
        out = ""
        for p in self.parts:
            out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
        return out or "<root>"


def _expect(cond, path, msg):
    if not cond:
        raise ParseError(f"{path}: {msg}")


def _scalar(F, x, path):
    if isinstance(x, bool) or x is None or isinstance(x, dict):
        raise ParseError(f"{path}: bad scalar {x!r}")
    try:
        return F.coerce(x)
    except CodominError as exc:
        raise ParseError(f"{path}: {exc}") from None
    except (TypeError, ValueError):
        raise ParseError(f"{path}: bad scalar {x!r}") from None


def _int(x, path, lo=0, hi=None):
    _expect(isinstance(x, int) and not isinstance(x, bool), path, "expected an integer")
    _expect(x >= lo and (hi is None or x < hi), path, f"index {x} out of range")
    return x


def _dense(F, rows, shape, path):
    _expect(isinstance(rows, list) and len(rows) == shape[0], path,
            f"expected {shape[0]} rows")
    a = F.zeros(shape)
    for r, row in enumerate(rows):
        _expect(isinstance(row, list) and len(row) == shape[1], path / r,
                f"expected {shape[1]} entries")
        for c, x in enumerate(row):
            a[r, c] = _scalar(F, x, path / r / c)
    return Matrix(F, a)


def _vector(F, vals, n, path):
    _expect(isinstance(vals, list) and len(vals) == n, path, f"expected {n} scalars")
    return [_scalar(F, x, path / i) for i, x in enumerate(vals)]


def _terms(F, entries, dims, path):
    """``[[a, b, c, scalar], ...]`` with index bounds ``dims``."""
    _expect(isinstance(entries, list), path, "expected a list of terms")
    out = []
    for t, e in enumerate(entries):
        _expect(isinstance(e, list) and len(e) == 4, path / t, "expected [i, j, k, scalar]")
        idx = [_int(e[q], path / t / q, 0, dims[q]) for q in range(3)]
        out.append((*idx, _scalar(F, e[3], path / t / 3)))
    return out


def _parse_object(F, name, doc, path):
    _expect(isinstance(doc, dict), path, "expected an object")
    n = _int(doc.get("dim"), path / "dim")
    delta = counit = mul = unit = antipode = None
    if "delta" in doc or "counit" in doc:
        a = F.zeros((n * n, n))
        for k, i, j, s in _terms(F, doc.get("delta", []), (n, n, n), path / "delta"):
            a[i * n + j, k] = F.reduce(a[i * n + j, k] + s)
        delta = Matrix(F, a)
        counit = Matrix.from_rows(F, [_vector(F, doc.get("counit"), n, path / "counit")],
                                  shape=(1, n))
    if "mul" in doc or "unit" in doc:
        a = F.zeros((n, n * n))
        for k, i, j, s in _terms(F, doc.get("mul", []), (n, n, n), path / "mul"):
            a[k, i * n + j] = F.reduce(a[k, i * n + j] + s)
        mul = Matrix(F, a)
        unit = Matrix.column(F, _vector(F, doc.get("unit"), n, path / "unit"))
    if "antipode" in doc:
        antipode = _dense(F, doc["antipode"], (n, n), path / "antipode")
    try:
        X = validate_structure(F, n, delta, counit, mul, unit, antipode, name)
    except AxiomViolation as exc:
        raise ValidationError(name, exc.violations) from None
    except ShapeMismatch as exc:
        raise ValidationError(name, [str(exc)]) from None
    kind = doc.get("kind")
    if kind is not None and kind != X.kind:
        raise ValidationError(name, [f"declared kind {kind!r} but data gives {X.kind!r}"])
    return X


def _parse_comodule(F, ws, name, doc, path):
    _expect(isinstance(doc, dict), path, "expected an object")
    over_name = doc.get("over")
    _expect(isinstance(over_name, str), path / "over", "expected an object name")
    C = ws.get("objects", over_name)
    if not isinstance(C, (Coalgebra, Bialgebra, HopfAlgebra)):
        raise ValidationError(name, [f"{over_name} is not a coalgebra"])
    m = _int(doc.get("dim"), path / "dim")
    n = C.dim
    side = doc.get("side", "right")
    _expect(side in ("right", "left", "bi"), path / "side", "side must be right, left or bi")

    def coaction(key, s):
        a = F.zeros((m * n, m))
        for v, w, c, x in _terms(F, doc.get(key, []), (m, m, n), path / key):
            r = w * n + c if s == "right" else c * m + w
            a[r, v] = F.reduce(a[r, v] + x)
        return Matrix(F, a)

    try:
        if side == "bi":
            from .comodules import validate_bicomodule

            return validate_bicomodule(C, m, coaction("lambda", "left"), coaction("rho", "right"), name)
        rho = coaction("rho", side)
        v = comodule_violations(C, side, m, rho)
        if v:
            raise AxiomViolation(v, name)
        return Comodule(C, side, m, rho, name)
    except AxiomViolation as exc:
        raise ValidationError(name, exc.violations) from None


def parse_workspace(text):
    """Parse and validate a workspace document (a JSON string or an already-loaded dict)."""
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    else:
        doc = text
    root = _Path()
    _expect(isinstance(doc, dict), root, "top level must be an object")
    unknown = set(doc) - {"field", *SECTIONS}
    _expect(not unknown, root, f"unknown keys {sorted(unknown)}")
    _expect(isinstance(doc.get("field"), str), _Path("field"), "expected a field spec string")
    F = parse_field_spec(doc["field"])
    for sec in SECTIONS:
        _expect(isinstance(doc.get(sec, {}), dict), _Path(sec), "expected an object")
    seen = {}
    for sec in SECTIONS:
        for name in doc.get(sec, {}):
            if name in seen:
                raise ValidationError(name, [f"name used in both {seen[name]} and {sec}"])
            seen[name] = sec

    ws = Workspace(F)
    # pass 1: objects (no references); pass 2: everything that refers to them
    for name in sorted(doc.get("objects", {})):
        ws.objects[name] = _parse_object(F, name, doc["objects"][name], _Path("objects", name))
    for name in sorted(doc.get("subspaces", {})):
        path = _Path("subspaces", name)
        d = doc["subspaces"][name]
        _expect(isinstance(d, dict), path, "expected an object")
        of = d.get("of")
        if of is not None:
            ambient = ws.get("objects", of).dim
        else:
            ambient = _int(d.get("ambient"), path / "ambient")
        if "ambient" in d and d["ambient"] != ambient:
            raise ValidationError(name, [f"ambient {d['ambient']} differs from dim of {of}"])
        basis = d.get("basis", [])
        _expect(isinstance(basis, list), path / "basis", "expected a list of rows")
        rows = [_vector(F, r, ambient, path / "basis" / i) for i, r in enumerate(basis)]
        ws.subspaces[name] = Subspace.span(F, ambient, rows)
        if of is not None:
            ws.subspace_of[name] = of
    for name in sorted(doc.get("morphisms", {})):
        path = _Path("morphisms", name)
        d = doc["morphisms"][name]
        _expect(isinstance(d, dict), path, "expected an object")
        for key in ("from", "to"):
            _expect(isinstance(d.get(key), str), path / key, "expected an object name")
        src, dst = ws.get("objects", d["from"]), ws.get("objects", d["to"])
        mat = _dense(F, d.get("matrix"), (dst.dim, src.dim), path / "matrix")
        try:
            ws.morphisms[name] = make_morphism(src, dst, mat, d.get("kind"), name)
        except AxiomViolation as exc:
            raise ValidationError(name, exc.violations) from None
    for name in sorted(doc.get("comodules", {})):
        ws.comodules[name] = _parse_comodule(F, ws, name, doc["comodules"][name],
                                             _Path("comodules", name))
    return ws


def load_workspace(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    return parse_workspace(text)


# --------------------------------------------------------------------------
# emitting


def _fmt(F, x):
    return F.format(x)


def _term_list(F, M, index):
    """Nonzero entries of ``M`` as sorted 4-term lists via ``index(row, col)``."""
    out = []
    for (r, c), x in np.ndenumerate(M.a):
        if x != 0:
            out.append([*index(r, c), _fmt(F, x)])
    out.sort(key=lambda e: e[:3])
    return out


def object_doc(X):
    F, n = X.field, X.dim
    d = {"kind": X.kind, "dim": n}
    if isinstance(X, (Coalgebra, Bialgebra, HopfAlgebra)):
        d["delta"] = _term_list(F, X.delta, lambda r, c: (c, r // n, r % n) if n else (c, 0, 0))
        d["counit"] = [_fmt(F, x) for x in X.counit.a[0]]
    if isinstance(X, (AlgebraStr, Bialgebra, HopfAlgebra)):
        d["mul"] = _term_list(F, X.mul, lambda r, c: (r, c // n, c % n))
        d["unit"] = [_fmt(F, x) for x in X.unit.a[:, 0]]
    if isinstance(X, HopfAlgebra):
        d["antipode"] = X.antipode.tolist()
    return d


def comodule_doc(V):
    F, n, m = V.field, V.over.dim, V.dim

    def terms(M, side):
        if side == "right":
            return _term_list(F, M, lambda r, c: (c, r // n, r % n))
        return _term_list(F, M, lambda r, c: (c, r % m, r // m))

    if isinstance(V, Bicomodule):
        return {"over": V.over.name, "side": "bi", "dim": m,
                "lambda": terms(V.lam, "left"), "rho": terms(V.rho, "right")}
    return {"over": V.over.name, "side": V.side, "dim": m, "rho": terms(V.rho, V.side)}


def workspace_doc(ws):
    doc = {"field": ws.field.spec}
    doc["objects"] = {k: object_doc(X) for k, X in ws.objects.items()}
    subs = {}
    for k, U in ws.subspaces.items():
        d = {"ambient": U.ambient_dim, "basis": U.tolist()}
        if k in ws.subspace_of:
            d["of"] = ws.subspace_of[k]
        subs[k] = d
    doc["subspaces"] = subs
    doc["morphisms"] = {k: {"from": f.src.name, "to": f.dst.name, "kind": f.kind,
                            "matrix": f.matrix.tolist()} for k, f in ws.morphisms.items()}
    doc["comodules"] = {k: comodule_doc(V) for k, V in ws.comodules.items()}
    return doc


def canonical_json(doc):
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_workspace(ws):
    return canonical_json(workspace_doc(ws))


def save_workspace(ws, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_workspace(ws))
