import pytest

from codomin.comodules import Comodule, corestrict, regular_comodule
from codomin.domkit import codominion_kernel, dominion_alg, equalizer_coalg, is_epic, is_monic, \
    largest_subcoalgebra
from codomin.errors import DescentFailure, FieldMismatch, Unsupported
from codomin.exactla import Matrix, Subspace, kernel
from codomin.extension import (descend_comodule, descend_matrix, descend_object, extend_matrix,
                               extend_object, extension_context)
from codomin.structures import structure_violations
from conftest import EXTENSIONS, corpus_of


def ctx_for(spec):
    return extension_context(corpus_of(spec).field, EXTENSIONS[spec])


def test_group_algebra_over_f4():
    ctx = ctx_for("F2")
    X = extend_object(corpus_of("F2").objects["kC2"], ctx)
    assert X.field.order == 4 and X.dim == 2 and structure_violations(X) == []


def test_matrix_entries_embed(Q):
    ctx = ctx_for("Q")
    M = Matrix.from_rows(Q, [[1, "2/3"], [0, -1]])
    E = extend_matrix(M, ctx)
    assert E.a[0, 1] == ctx.ext.embed(Q.coerce("2/3"))
    assert descend_matrix(E, ctx) == M


def test_codominion_kernel_extends():
    ctx = ctx_for("Q")
    eps = corpus_of("Q").morphisms["eps_kC2"]
    K = codominion_kernel(extend_object(eps, ctx))
    assert K == extend_object(codominion_kernel(eps), ctx)
    assert K.dim == 1


def test_extension_checks_the_field(F2):
    with pytest.raises(FieldMismatch):
        extend_object(corpus_of("Q").objects["kC2"], ctx_for("F2"))
    with pytest.raises(Unsupported):
        extension_context(ctx_for("F2").ext, "t^2+t+1")


def test_descent_of_regular_comodule_over_f4():
    ctx = ctx_for("F2")
    C = corpus_of("F2").objects["kC2"]
    V = regular_comodule(extend_object(C, ctx))
    W = descend_comodule(V, ctx, over=C)
    assert W.rho == regular_comodule(C).rho


def test_descent_of_corestriction_over_f25():
    ctx = ctx_for("F5")
    pi = corpus_of("F5").morphisms["kC4->kC2"]
    V = corestrict(regular_comodule(extend_object(pi.src, ctx)), extend_object(pi, ctx))
    W = descend_comodule(V, ctx, over=pi.dst)
    assert W.rho == corestrict(regular_comodule(pi.src), pi).rho


def test_descent_failure_names_the_coordinate():
    ctx = ctx_for("F2")
    C = extend_object(corpus_of("F2").objects["k^C2"], ctx)
    t = ctx.ext.gen
    # a grouplike coaction needs a grouplike; t*delta_0 + (1+t)*delta_1 is not base-defined
    rho = Matrix.from_rows(ctx.ext, [[t], [t + 1]])
    V = Comodule(C, "right", 1, rho)
    with pytest.raises(DescentFailure, match="t\\^1"):
        descend_comodule(V, ctx)


def test_descend_object_round_trip(corpus):
    spec = corpus.field.spec
    ctx = ctx_for(spec)
    for X in corpus.objects.values():
        assert descend_object(extend_object(X, ctx), ctx) == X


# --------------------------------------------------------------------------
# invariance over the whole corpus


def _coalgebra_maps(c):
    return [f for f in c.morphisms.values() if f.kind != "alg"]


def test_monic_and_epic_are_invariant(corpus):
    ctx = ctx_for(corpus.field.spec)
    for f in _coalgebra_maps(corpus):
        g = extend_object(f, ctx)
        assert is_monic(g) == is_monic(f), f.name
        assert is_epic(g) == is_epic(f), f.name


def test_codominion_kernels_commute_with_extension(corpus):
    ctx = ctx_for(corpus.field.spec)
    for f in _coalgebra_maps(corpus):
        K = codominion_kernel(f)
        assert codominion_kernel(extend_object(f, ctx)) == extend_object(K, ctx), f.name


def test_dominions_commute_with_extension(corpus):
    ctx = ctx_for(corpus.field.spec)
    for f in corpus.morphisms.values():
        if f.kind == "alg":
            D = dominion_alg(f).dominion
            assert dominion_alg(extend_object(f, ctx)).dominion == extend_object(D, ctx)


def test_equalizers_commute_with_extension(corpus):
    ctx = ctx_for(corpus.field.spec)
    maps = _coalgebra_maps(corpus)
    for f in maps:
        for g in maps:
            if f.src == g.src and f.dst == g.dst and f.name < g.name:
                E = equalizer_coalg([f, g])[0]
                Ee = equalizer_coalg([extend_object(f, ctx), extend_object(g, ctx)])[0]
                assert Ee == extend_object(E, ctx)


def _test_subspaces(c, C):
    F = c.field
    out = [kernel(C.counit), Subspace.zero(F, C.dim), Subspace.full(F, C.dim)]
    if hasattr(C, "unit"):
        out.append(Subspace.from_columns(C.unit))
    for f in c.morphisms.values():
        if f.dst == C and f.kind != "alg":
            out.append(Subspace.from_columns(f.matrix))
        if f.src == C and f.kind != "alg":
            out.append(kernel(f.matrix))
    return out


def test_largest_subcoalgebras_commute_with_extension(corpus):
    ctx = ctx_for(corpus.field.spec)
    for C in corpus.objects.values():
        if not hasattr(C, "delta"):
            continue
        Ce = extend_object(C, ctx)
        for V in _test_subspaces(corpus, C):
            E = largest_subcoalgebra(C, V)
            assert largest_subcoalgebra(Ce, extend_object(V, ctx)) == extend_object(E, ctx)


def test_tensor_products_commute_with_extension(corpus):
    from codomin.structures import tensor_objects

    ctx = ctx_for(corpus.field.spec)
    C2 = corpus.objects["kC2"]
    C3 = corpus.objects["kC3"]
    P = tensor_objects(C2, C3)
    Pe = tensor_objects(extend_object(C2, ctx), extend_object(C3, ctx))
    assert Pe == extend_object(P, ctx)


def test_comodules_descend_and_round_trip(corpus):
    ctx = ctx_for(corpus.field.spec)
    for f in _coalgebra_maps(corpus):
        for side in ("right", "left"):
            V = corestrict(regular_comodule(f.src, side), f)
            Ve = extend_object(V, ctx)
            W = descend_comodule(Ve, ctx, over=f.dst)
            assert W.rho == V.rho and extend_object(W, ctx).rho == Ve.rho
