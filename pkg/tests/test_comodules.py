import itertools

import numpy as np
import pytest

from codomin import catalog
from codomin.comodules import (Comodule, coinvariants, comodule_from_terms, corestrict, cotensor,
                               dual_comodule, find_comodule_splitting, hom_colinear, hom_dim,
                               hom_to_matrix, is_colinear, is_injective_comodule,
                               regular_bicomodule, regular_comodule, tensor_comodule,
                               trivial_comodule, validate_bicomodule, validate_comodule)
from codomin.errors import AxiomViolation, NotABialgebra, NotSurjective
from codomin.exactla import Matrix, Subspace, kron
from codomin.structures import compose, identity, trivial_object
import oracles
from conftest import corpus_of


def test_regular_and_trivial_comodules_validate(Q):
    C2 = corpus_of("Q").objects["kC2"]
    V = regular_comodule(C2)
    assert validate_comodule(C2, "right", 2, V.rho) is not None
    assert trivial_comodule(C2, 3).dim == 3
    assert validate_bicomodule(C2, 2, C2.delta, C2.delta).dim == 2


def test_counit_violation_is_named(Q):
    C2 = corpus_of("Q").objects["kC2"]
    with pytest.raises(AxiomViolation) as exc:
        comodule_from_terms(C2, "right", 1, [(0, 0, 0, 1), (0, 0, 1, 1)])
    assert "counit" in exc.value.violations


def test_trivial_comodule_needs_a_unit(Q):
    with pytest.raises(NotABialgebra):
        trivial_comodule(catalog.comatrix(Q, 2))


def test_corestrict_examples():
    c = corpus_of("Q")
    C4, pi = c.objects["kC4"], c.morphisms["kC4->kC2"]
    V = regular_comodule(C4)
    assert corestrict(V, identity(C4)).rho == V.rho
    W = corestrict(V, pi)
    # rho(g) = g (x) gbar and rho(g^2) = g^2 (x) 1bar
    assert W.rho.col(1) == Matrix.column(c.field, [0, 0, 0, 1, 0, 0, 0, 0])
    assert W.rho.col(2) == Matrix.column(c.field, [0, 0, 0, 0, 1, 0, 0, 0])
    T = corestrict(V, c.morphisms["eps_kC4"])
    assert T.rho == Matrix.identity(c.field, 4)


def test_cotensor_of_regular_kc2(Q):
    C2 = corpus_of("Q").objects["kC2"]
    X = cotensor(regular_comodule(C2, "right"), regular_comodule(C2, "left"))
    assert X == Subspace.span(Q, 4, [[1, 0, 0, 0], [0, 0, 0, 1]])


def test_cotensor_over_ground_field(Q):
    k = trivial_object(Q, "coalgebra")
    V = Comodule(k, "right", 2, Matrix.identity(Q, 2))
    W = Comodule(k, "left", 3, Matrix.identity(Q, 3))
    assert cotensor(V, W).dim == 6


def _cotensor_oracle(V, W):
    """dim of V []_D W over F2 by enumerating every vector of V (x) W."""
    m, w, n = V.dim, W.dim, V.over.dim
    R = oracles.as_array(V.rho).reshape(m, n, m)  # R[x, c, v]
    L = oracles.as_array(W.rho).reshape(n, w, w)  # L[c, y, u]
    count = 0
    for bits in itertools.product((0, 1), repeat=m * w):
        X = np.array(bits).reshape(m, w)
        lhs = np.einsum("xcv,vu->xcu", R, X) % 2
        rhs = np.einsum("cyu,vu->vcy", L, X) % 2
        count += not (lhs - rhs).any()
    return int(np.log2(count))


def test_cotensor_along_triangular_quotient(F2):
    """Frozen from the F2 enumeration oracle: T2* []_{D2*} T2* has dimension 4, not 3."""
    q = corpus_of("F2").morphisms["T2*->D2*"]
    V = corestrict(regular_comodule(q.src, "right"), q)
    W = corestrict(regular_comodule(q.src, "left"), q)
    assert _cotensor_oracle(V, W) == 4
    assert cotensor(V, W).dim == 4


def test_cotensor_matches_oracle_on_f2_corpus():
    c = corpus_of("F2")
    for f in c.morphisms.values():
        if f.kind == "alg" or f.src.dim > 3:
            continue
        V = corestrict(regular_comodule(f.src, "right"), f)
        W = corestrict(regular_comodule(f.src, "left"), f)
        assert cotensor(V, W).dim == _cotensor_oracle(V, W), f.name


def test_coinvariant_examples():
    c = corpus_of("Q")
    F = c.field
    for name in ("kC2", "kS3", "H4", "k^C4"):
        H = c.objects[name]
        assert coinvariants(regular_comodule(H)) == Subspace.from_columns(H.unit)
    H = c.objects["H4"]
    assert coinvariants(regular_comodule(H), along=c.morphisms["eps_H4"]).dim == 4
    fix = coinvariants(regular_comodule(c.objects["kC4"]), along=c.morphisms["kC4->kC2"])
    assert fix == Subspace.span(F, 4, [[1, 0, 0, 0], [0, 0, 1, 0]])


def test_coinvariants_need_a_bialgebra(Q):
    with pytest.raises(NotABialgebra):
        coinvariants(regular_comodule(catalog.comatrix(Q, 2)))


def test_hom_examples(Q):
    k = trivial_object(Q, "coalgebra")
    V = Comodule(k, "right", 2, Matrix.identity(Q, 2))
    W = Comodule(k, "right", 3, Matrix.identity(Q, 3))
    assert hom_dim(V, W) == 6
    C2 = corpus_of("Q").objects["kC2"]
    assert hom_dim(regular_comodule(C2), regular_comodule(C2)) == 2
    M = regular_comodule(catalog.comatrix(Q, 2))
    assert hom_dim(M, M) == 4


def test_hom_basis_elements_are_colinear(Q):
    H = corpus_of("Q").objects["H4"]
    V = regular_comodule(H)
    E = hom_colinear(V, V)
    for row in range(E.dim):
        phi = hom_to_matrix(Q, E.basis.row(row), 4, 4)
        assert is_colinear(V, V, phi)


def test_injectivity_examples():
    Q, F2 = corpus_of("Q"), corpus_of("F2")
    for c in (Q, F2):
        for X in c.objects.values():
            if hasattr(X, "delta") and X.dim <= 4:
                ok, sigma = is_injective_comodule(regular_comodule(X))
                assert ok, X.name
    ok, sigma = is_injective_comodule(trivial_comodule(Q.objects["kC2"]))
    V = trivial_comodule(Q.objects["kC2"])
    assert ok and sigma @ V.rho == Matrix.identity(Q.field, 1)
    # comodules over kC2 are C2-graded spaces, so even in characteristic 2 they are injective
    assert is_injective_comodule(trivial_comodule(F2.objects["kC2"]))[0]
    # the function algebra k^C2 over F2 has dual F2[C2], a local algebra
    assert not is_injective_comodule(trivial_comodule(F2.objects["k^C2"]))[0]
    assert is_injective_comodule(trivial_comodule(Q.objects["k^C2"]))[0]


def test_splitting_of_identity(Q):
    C2 = corpus_of("Q").objects["kC2"]
    s = find_comodule_splitting(identity(C2))
    assert s.matrix == Matrix.identity(Q, 2)


def _is_splitting(f, s, side):
    Cd = corestrict(regular_comodule(f.src, side), f)
    return (f.matrix @ s == Matrix.identity(f.field, f.dst.dim)
            and is_colinear(regular_comodule(f.dst, side), Cd, s))


def test_splitting_of_cyclic_quotient():
    c = corpus_of("Q")
    pi = c.morphisms["kC4->kC2"]
    for side in ("right", "left"):
        s = find_comodule_splitting(pi, side)
        assert s is not None and _is_splitting(pi, s.matrix, side)
    half = c.field.coerce("1/2")
    averaged = Matrix.from_rows(c.field, [[half, 0], [0, half], [half, 0], [0, half]])
    assert _is_splitting(pi, averaged, "right")


def test_splitting_of_sweedler_quotient():
    c = corpus_of("Q")
    f = c.morphisms["H4->kC2"]
    s = find_comodule_splitting(f, "right")
    assert s is not None and _is_splitting(f, s.matrix, "right")
    naive = Matrix.from_rows(c.field, [[1, 0], [0, 1], [0, 0], [0, 0]])
    assert _is_splitting(f, naive, "right")


def test_splitting_needs_surjection():
    c = corpus_of("Q")
    with pytest.raises(NotSurjective):
        find_comodule_splitting(c.morphisms["kC2->kC4"])


@pytest.mark.parametrize("spec", ["Q", "F2"])
def test_monic_non_codominion_has_no_splitting(spec):
    # a splitting on either side would force the kernel to be the codominion kernel
    f = corpus_of(spec).morphisms["M2c->T2*"]
    assert find_comodule_splitting(f, "right") is None
    assert find_comodule_splitting(f, "left") is None


def test_counit_always_splits():
    for f in (corpus_of("F2").morphisms["eps_k^C2"], corpus_of("Q").morphisms["eps_M2c"]):
        s = find_comodule_splitting(f)
        assert s is not None and f.matrix @ s.matrix == Matrix.identity(f.field, 1)


# --------------------------------------------------------------------------
# corpus invariants


def _coalgebra_maps(c):
    return [f for f in c.morphisms.values() if f.kind != "alg"]


def test_corestriction_preserves_axioms(corpus):
    for f in _coalgebra_maps(corpus):
        for side in ("right", "left"):
            V = corestrict(regular_comodule(f.src, side), f)
            assert validate_comodule(f.dst, side, V.dim, V.rho)


def test_corestriction_is_functorial(corpus):
    maps = _coalgebra_maps(corpus)
    for f in maps:
        for g in maps:
            if f.dst == g.src:
                V = regular_comodule(f.src)
                assert corestrict(V, compose(g, f)).rho == corestrict(corestrict(V, f), g).rho


def test_self_cotensor_contains_the_coproduct(corpus):
    for f in _coalgebra_maps(corpus):
        C = f.src
        X = cotensor(corestrict(regular_comodule(C, "right"), f),
                     corestrict(regular_comodule(C, "left"), f))
        assert X.dim >= C.dim
        assert X.contains(Subspace.from_columns(C.delta))


def _hopf_comodule_pairs(c):
    out = []
    for H in c.objects.values():
        if H.kind != "hopf" or H.dim > 4:
            continue
        mods = [regular_comodule(H), trivial_comodule(H, 2)]
        for f in c.morphisms.values():
            if f.dst == H and f.kind == "hopf" and f.src.dim > 1:
                mods.append(corestrict(regular_comodule(f.src), f))
        out += [(H, V, W) for V in mods for W in mods]
    return out


def test_hom_dimension_equals_coinvariants_of_internal_hom():
    pairs = _hopf_comodule_pairs(corpus_of("Q"))
    assert len(pairs) >= 10
    for H, V, W in pairs:
        WV = tensor_comodule(W, dual_comodule(V))
        assert hom_dim(V, W) == coinvariants(WV).dim


def test_corestriction_enlarges_hom_spaces(corpus):
    for f in _coalgebra_maps(corpus):
        if f.src.dim > 4:
            continue
        V = regular_comodule(f.src)
        fine = hom_colinear(V, V)
        coarse = hom_colinear(corestrict(V, f), corestrict(V, f))
        assert coarse.contains(fine)


def test_regular_bicomodule_compatibility(corpus):
    for X in corpus.objects.values():
        if hasattr(X, "delta"):
            B = regular_bicomodule(X)
            assert validate_bicomodule(X, X.dim, B.lam, B.rho)


def test_tensor_of_trivial_comodules(Q):
    H = corpus_of("Q").objects["kS3"]
    T = tensor_comodule(trivial_comodule(H, 2), trivial_comodule(H, 3))
    assert T.rho == kron(Matrix.identity(Q, 6), H.unit)
