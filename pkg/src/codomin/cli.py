"""Command-line front end: ``codomin COMMAND WORKSPACE [options]``.

Exit status is 0 on success (a ``false`` answer is still a success), 2 on
parse, validation or reference errors and 3 when a computation is
unsupported (for instance the characteristic gate of ``cosemisimple``).
"""

import argparse
import sys

from . import catalog, comodules, domkit, takeuchi
from .errors import CodominError, Unsupported
from .exactla import kernel
from .extension import extend_object, extension_context
from .scalars import parse_field_spec
from .structures import Morphism, quotient_by_coideal
from .workspace import Workspace, canonical_json, load_workspace, save_workspace


class Report:
    """Plain-text lines plus a machine-readable dict, printed one way or the other."""

    def __init__(self, command):
        self.command = command
        self.lines = []
        self.data = {}

    def put(self, key, value, text=None):
        self.data[key] = value
        if text is None:
            if isinstance(value, bool):
                text = "true" if value else "false"
            else:
                text = str(value)
        self.lines.append(f"{key.replace('_', ' ')} = {text}" if key != "answer" else text)

    def subspace(self, key, U):
        self.data[key] = {"dim": U.dim, "ambient": U.ambient_dim, "basis": U.tolist()}
        self.lines.append(f"{key.replace('_', ' ')} dim = {U.dim}")
        for row in U.tolist():
            self.lines.append("  " + _row_text(row))

    def matrix(self, key, M):
        self.data[key] = M.tolist()
        self.lines.append(f"{key.replace('_', ' ')} =")
        for row in M.tolist():
            self.lines.append("  " + _row_text(row))

    def render(self, as_json):
        if as_json:
            return canonical_json({"command": self.command, "result": self.data})
        return "\n".join(self.lines) + "\n"


def _row_text(row):
    def one(x):
        return x if isinstance(x, str) else "(" + ",".join(x) + ")"
    return "[" + " ".join(one(x) for x in row) + "]"


# --------------------------------------------------------------------------
# commands


def _morphism(ws, args, idx=0):
    if not args.morphism:
        raise CodominError("--morphism is required")
    return ws.get("morphisms", args.morphism[idx])


def _object(ws, args):
    if not args.object:
        raise CodominError("--object is required")
    return ws.get("objects", args.object)


def _subspace(ws, args, idx=0):
    if not args.subspace:
        raise CodominError("--subspace is required")
    return ws.get("subspaces", args.subspace[idx])


def _comodule(ws, args, idx=0):
    if not args.comodule or len(args.comodule) <= idx:
        raise CodominError("--comodule is required")
    return ws.get("comodules", args.comodule[idx])


def cmd_validate(ws, args, rep):
    for sec in ("objects", "subspaces", "morphisms", "comodules"):
        rep.put(sec, len(getattr(ws, sec)))
    for name, X in sorted(ws.objects.items()):
        rep.lines.append(f"object {name}: {X.kind}, dim {X.dim}")
    for name, f in sorted(ws.morphisms.items()):
        rep.lines.append(f"morphism {name}: {f.kind}, {f.src.name} -> {f.dst.name}")
    rep.put("valid", True)


def cmd_monic(ws, args, rep):
    f = _morphism(ws, args)
    if f.kind == "alg":
        raise Unsupported("monic is decided for coalgebra maps")
    rep.put("answer", domkit.is_monic(f))
    rep.data["cotensor_dim"] = domkit.self_cotensor(f).dim


def cmd_epic(ws, args, rep):
    f = _morphism(ws, args)
    if f.kind == "alg":
        rep.put("answer", domkit.dominion_alg(f).is_epic)
    else:
        rep.put("answer", domkit.is_epic(f))


def cmd_codominion(ws, args, rep, out):
    f = _morphism(ws, args)
    res = domkit.codominion(f)
    rep.subspace("kernel", res.kernel)
    rep.put("quotient_dim", res.quotient.quotient.dim)
    rep.put("is_codominion", res.is_codominion)
    rep.put("monic", res.kernel.dim == 0)
    if out is not None:
        q = out.add_object(res.quotient.quotient, f"{f.src.name}/K0({f.name})")
        out.add_morphism(Morphism(res.quotient.morphism.kind, f.src, q, res.quotient.projection),
                         f"codominion({f.name})")
        out.add_subspace(f"K0({f.name})", res.kernel, f.src.name)


def cmd_dominion(ws, args, rep, out):
    f = _morphism(ws, args)
    res = domkit.dominion_alg(f)
    rep.subspace("dominion", res.dominion)
    rep.put("tensor_dim", res.tensor_dim)
    rep.put("is_dominion", res.is_dominion)
    rep.put("epic", res.is_epic)
    if out is not None:
        out.add_subspace(f"dominion({f.name})", res.dominion, f.dst.name)


def _quotient_of(ws, args, C):
    if args.quotient:
        pi = ws.get("morphisms", args.quotient)
        return quotient_by_coideal(C, kernel(pi.matrix))
    return quotient_by_coideal(C, _subspace(ws, args))


def cmd_dominates(ws, args, rep):
    f = _morphism(ws, args)
    rep.put("answer", domkit.dominates(f, _quotient_of(ws, args, f.src)))


def cmd_equalizer(ws, args, rep, out):
    fs = [ws.get("morphisms", m) for m in args.morphism or []]
    E, inc = domkit.equalizer_coalg(fs)
    rep.subspace("equalizer", E)
    if out is not None:
        name = "eq(" + ",".join(args.morphism) + ")"
        sub = out.add_object(inc.src, name)
        out.add_morphism(Morphism("coalg", sub, inc.dst, inc.matrix), f"incl_{name}")


def cmd_largest(ws, args, rep, out):
    C = _object(ws, args)
    V = _subspace(ws, args)
    E = domkit.largest_subcoalgebra(C, V)
    rep.subspace("subcoalgebra", E)
    if out is not None:
        out.add_subspace(f"largest({args.subspace[0]})", E, C.name)


def cmd_coinvariants(ws, args, rep, out):
    V = _comodule(ws, args)
    along = ws.get("morphisms", args.morphism[0]) if args.morphism else None
    U = comodules.coinvariants(V, along=along)
    rep.subspace("coinvariants", U)
    if out is not None:
        out.add_subspace(f"coinv({V.name})", U)


def cmd_hom(ws, args, rep, out):
    V = _comodule(ws, args, 0)
    W = _comodule(ws, args, 1) if len(args.comodule) > 1 else V
    U = comodules.hom_colinear(V, W)
    rep.put("shape", f"{W.dim}x{V.dim}")
    rep.subspace("hom", U)
    if out is not None:
        out.add_subspace(f"hom({V.name},{W.name})", U)


def cmd_injective(ws, args, rep):
    V = _comodule(ws, args)
    ok, sigma = comodules.is_injective_comodule(V)
    rep.put("answer", ok)
    if ok:
        rep.matrix("retraction", sigma)


def cmd_split(ws, args, rep, out):
    f = _morphism(ws, args)
    s = comodules.find_comodule_splitting(f, args.side)
    rep.put("answer", s is not None)
    if s is not None:
        rep.matrix("section", s.matrix)
        if out is not None:
            out.add_morphism(Morphism("linear", f.dst, f.src, s.matrix), f"split({f.name})")


def cmd_cosemisimple(ws, args, rep):
    rep.put("answer", domkit.is_cosemisimple(_object(ws, args)))


def _coideal_subalgebra(ws, args):
    return takeuchi.validate_coideal_subalgebra(_object(ws, args), _subspace(ws, args))


def _module_quotient(ws, args):
    H = _object(ws, args)
    if args.quotient:
        K = kernel(ws.get("morphisms", args.quotient).matrix)
    else:
        K = _subspace(ws, args)
    return takeuchi.module_quotient(H, K)


def cmd_takeuchi_r(ws, args, rep, out):
    q = takeuchi.op_r(_coideal_subalgebra(ws, args))
    rep.subspace("kernel", q.kernel)
    rep.put("quotient_dim", q.quotient.quotient.dim)
    if out is not None:
        out.add_subspace(f"r({args.subspace[0]})", q.kernel, args.object)


def cmd_takeuchi_l(ws, args, rep, out):
    A = takeuchi.op_l(_module_quotient(ws, args))
    rep.subspace("subalgebra", A.subspace)
    if out is not None:
        out.add_subspace(f"l({args.quotient or args.subspace[0]})", A.subspace, args.object)


def cmd_closure(ws, args, rep, out):
    if args.kind == "quotient":
        q = takeuchi.closure(_module_quotient(ws, args))
        rep.subspace("kernel", q.kernel)
        U = q.kernel
    else:
        A = takeuchi.closure(_coideal_subalgebra(ws, args))
        rep.subspace("subalgebra", A.subspace)
        U = A.subspace
    if out is not None:
        out.add_subspace(f"closure({args.quotient or args.subspace[0]})", U, args.object)


def cmd_extend(ws, args, rep):
    if not args.minpoly:
        raise CodominError("--minpoly is required")
    ctx = extension_context(ws.field, args.minpoly)
    out = Workspace(ctx.ext)
    for name, X in ws.objects.items():
        out.add_object(extend_object(X, ctx), name)
    for name, U in ws.subspaces.items():
        out.add_subspace(name, extend_object(U, ctx), ws.subspace_of.get(name))
    for name, f in ws.morphisms.items():
        out.add_morphism(extend_object(f, ctx), name)
    for name, V in ws.comodules.items():
        out.add_comodule(extend_object(V, ctx), name)
    rep.put("field", ctx.ext.spec)
    for sec in ("objects", "subspaces", "morphisms", "comodules"):
        rep.put(sec, len(getattr(out, sec)))
    return out


def cmd_catalog(args, rep):
    field = parse_field_spec(args.field)
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise CodominError(f"--param expects key=value, got {item!r}")
        params[key] = value
    objects, morphisms = catalog.build(args.workspace, field, params)
    ws = Workspace(field)
    for X in objects:
        ws.add_object(X)
    for f in morphisms:
        ws.add_morphism(f)
    rep.put("field", field.spec)
    for name, X in sorted(ws.objects.items()):
        rep.lines.append(f"object {name}: {X.kind}, dim {X.dim}")
    rep.data["objects"] = sorted(ws.objects)
    rep.data["morphisms"] = sorted(ws.morphisms)
    for name in sorted(ws.morphisms):
        rep.lines.append(f"morphism {name}")
    return ws


_PLAIN = {"validate": cmd_validate, "monic": cmd_monic, "epic": cmd_epic,
          "dominates": cmd_dominates, "injective": cmd_injective,
          "cosemisimple": cmd_cosemisimple}
_EMITTING = {"codominion": cmd_codominion, "dominion": cmd_dominion,
             "equalizer": cmd_equalizer, "largest-subcoalgebra": cmd_largest,
             "coinvariants": cmd_coinvariants, "hom": cmd_hom, "split": cmd_split,
             "takeuchi-r": cmd_takeuchi_r, "takeuchi-l": cmd_takeuchi_l,
             "closure": cmd_closure}
COMMANDS = sorted([*_PLAIN, *_EMITTING, "extend", "catalog"])


def build_parser():
    p = argparse.ArgumentParser(prog="codomin", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("workspace", help="workspace JSON file (catalog: the entry name)")
    p.add_argument("--morphism", action="append", help="morphism name (repeatable)")
    p.add_argument("--object", help="object name")
    p.add_argument("--subspace", action="append", help="subspace name")
    p.add_argument("--comodule", action="append", help="comodule name (repeatable)")
    p.add_argument("--quotient", help="surjective morphism whose kernel defines a quotient")
    p.add_argument("--side", choices=("left", "right"), default="right")
    p.add_argument("--kind", choices=("subalgebra", "quotient"), default="subalgebra")
    p.add_argument("--minpoly", help="minimal polynomial for extend, e.g. t^2+t+1")
    p.add_argument("--field", default="Q", help="field spec for catalog")
    p.add_argument("--param", action="append", help="catalog parameter key=value")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--emit", metavar="FILE", help="write a result workspace")
    return p


def run_command(argv, stdout=None, stderr=None):
    """Run one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    rep = Report(args.command)
    try:
        if args.command == "catalog":
            out = cmd_catalog(args, rep)
        else:
            ws = load_workspace(args.workspace)
            if args.command == "extend":
                out = cmd_extend(ws, args, rep)
            elif args.command in _PLAIN:
                # boolean queries have no new objects; --emit writes the canonical input
                _PLAIN[args.command](ws, args, rep)
                out = ws
            else:
                out = None
                if args.emit:
                    out = Workspace(ws.field, dict(ws.objects), dict(ws.subspaces),
                                    dict(ws.morphisms), dict(ws.comodules), dict(ws.subspace_of))
                _EMITTING[args.command](ws, args, rep, out)
        if args.emit:
            if out is None:
                raise CodominError(f"{args.command} has nothing to emit")
            save_workspace(out, args.emit)
    except Unsupported as exc:
        stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 3
    except CodominError as exc:
        stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 2
    stdout.write(rep.render(args.json))
    return 0


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
