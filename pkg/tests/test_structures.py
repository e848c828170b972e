import pytest
from hypothesis import given, strategies as st

from codomin import catalog
from codomin.errors import AxiomViolation, FieldMismatch, NotACoideal, NotReflexive, ShapeMismatch
from codomin.exactla import Matrix, Subspace
from codomin.structures import (AlgebraStr, Bialgebra, Coalgebra, HopfAlgebra, compose, dualize,
                                has_algebra, has_coalgebra, identity, is_cocommutative,
                                make_morphism, morphism_violations, quotient_by_coideal,
                                reflexive_coequalizer, structure_from_terms, structure_violations,
                                tensor_objects, trivial_object, validate_structure)
import oracles
from conftest import corpus_of


def kC2(F):
    return catalog.group_algebra(F, catalog.cyclic_table(2), "kC2")


def test_group_algebra_terms_validate(Q):
    C = structure_from_terms(Q, 2, delta=[(0, 0, 0, 1), (1, 1, 1, 1)], counit=[1, 1])
    assert isinstance(C, Coalgebra) and C.dim == 2


def test_comatrix_validates(Q):
    terms = []
    for i in range(2):
        for j in range(2):
            for k in range(2):
                terms.append((2 * i + j, 2 * i + k, 2 * k + j, 1))
    C = structure_from_terms(Q, 4, delta=terms, counit=[1, 0, 0, 1])
    assert C.delta == catalog.comatrix(Q, 2).delta


def test_bad_counit_law_is_named(Q):
    with pytest.raises(AxiomViolation) as exc:
        structure_from_terms(Q, 2, delta=[(0, 0, 0, 1), (1, 1, 0, 1)], counit=[1, 1])
    assert "counit-left" in exc.value.violations


def test_unpaired_data_is_a_shape_error(Q):
    C = kC2(Q)
    with pytest.raises(ShapeMismatch):
        validate_structure(Q, 2, delta=C.delta)
    with pytest.raises(ShapeMismatch):
        validate_structure(Q, 3, delta=C.delta, counit=C.counit)


def test_dual_of_group_algebra_is_function_algebra(Q):
    A = dualize(kC2(Q).coalg)
    assert isinstance(A, AlgebraStr)
    # delta_x delta_y = [x = y] delta_x
    assert A.mul == Matrix.from_rows(Q, [[1, 0, 0, 0], [0, 0, 0, 1]])


def test_dual_of_comatrix_is_matrix_algebra(Q):
    A = dualize(catalog.comatrix(Q, 2))
    n = 2
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    prod = A.mul.col((i * n + j) * 4 + (k * n + m))
                    want = [0] * 4
                    if j == k:
                        want[i * n + m] = 1
                    assert prod == Matrix.column(Q, want)


def test_double_dual_is_identity(corpus):
    for X in corpus.objects.values():
        assert dualize(dualize(X)) == X


def test_tensor_of_group_algebras_has_four_grouplikes(Q):
    P = tensor_objects(kC2(Q), kC2(Q))
    assert isinstance(P, HopfAlgebra) and P.dim == 4
    G = catalog.group_algebra(Q, catalog.klein_table())
    assert P.delta == G.delta and P.mul == G.mul


def test_tensor_with_unit_object(Q):
    C = catalog.comatrix(Q, 2)
    assert tensor_objects(trivial_object(Q, "coalgebra"), C).delta == C.delta


def test_comatrix_times_group_algebra_is_valid(Q):
    P = tensor_objects(catalog.comatrix(Q, 2), kC2(Q).coalg)
    assert P.dim == 8 and structure_violations(P) == []


def test_tensor_field_mismatch(Q, F2):
    with pytest.raises(FieldMismatch):
        tensor_objects(kC2(Q), kC2(F2))


def test_quotient_by_zero(Q):
    C = kC2(Q).coalg
    q = quotient_by_coideal(C, Subspace.zero(Q, 2))
    assert q.quotient.dim == 2 and q.projection == Matrix.identity(Q, 2)


def test_quotient_by_augmentation(Q):
    C = kC2(Q).coalg
    q = quotient_by_coideal(C, Subspace.span(Q, 2, [[-1, 1]]))
    assert q.quotient.dim == 1
    assert q.quotient.delta == Matrix.identity(Q, 1)


def test_not_a_coideal(Q):
    with pytest.raises(NotACoideal):
        quotient_by_coideal(kC2(Q).coalg, Subspace.span(Q, 2, [[0, 1]]))


def test_cocommutativity(Q):
    assert is_cocommutative(kC2(Q))
    assert not is_cocommutative(catalog.comatrix(Q, 2))
    assert not is_cocommutative(catalog.sweedler4(Q))


def _reflexive_data(Q):
    C2 = kC2(Q)
    X = tensor_objects(C2, C2)
    mult = make_morphism(X, C2, [[1, 0, 0, 1], [0, 1, 1, 0]], "hopf")
    pr1 = make_morphism(X, C2, [[1, 1, 0, 0], [0, 0, 1, 1]], "hopf")
    pr2 = make_morphism(X, C2, [[1, 0, 1, 0], [0, 1, 0, 1]], "hopf")
    s1 = make_morphism(C2, X, [[1, 0], [0, 0], [0, 1], [0, 0]], "hopf")  # h -> h (x) 1
    s2 = make_morphism(C2, X, [[1, 0], [0, 1], [0, 0], [0, 0]], "hopf")  # h -> 1 (x) h
    return C2, mult, pr1, pr2, s1, s2


def test_reflexive_coequalizers(Q):
    C2, mult, pr1, pr2, s1, s2 = _reflexive_data(Q)
    g_minus_1 = Subspace.span(Q, 2, [[-1, 1]])
    q = reflexive_coequalizer(mult, pr1, s1)
    assert q.kernel == g_minus_1 and q.quotient.dim == 1
    assert isinstance(q.quotient, HopfAlgebra)
    assert reflexive_coequalizer(mult, pr2, s2).kernel == g_minus_1
    same = reflexive_coequalizer(mult, mult, s1)
    assert same.kernel.dim == 0 and same.quotient.dim == 2


def test_not_reflexive(Q):
    C2, mult, pr1, pr2, s1, s2 = _reflexive_data(Q)
    with pytest.raises(NotReflexive):
        reflexive_coequalizer(pr1, pr2, s1)


def test_morphism_kind_detection(Q):
    C2 = kC2(Q)
    f = make_morphism(C2, C2, [[1, 0], [0, 1]])
    assert f.kind == "hopf"
    with pytest.raises(AxiomViolation):
        make_morphism(C2, C2, [[1, 0], [0, 0]], "coalg")
    # 1 <-> g preserves the coproduct but not the unit
    assert make_morphism(C2, C2, [[0, 1], [1, 0]]).kind == "coalg"
    assert make_morphism(C2, C2, [[1, 0], [0, 0]]).kind == "linear"


# --------------------------------------------------------------------------
# corpus-wide invariants


def test_every_corpus_object_validates(corpus):
    for X in corpus.objects.values():
        assert structure_violations(X) == [], X.name


def test_every_corpus_morphism_validates(corpus):
    for f in corpus.morphisms.values():
        assert morphism_violations(f.kind, f.src, f.dst, f.matrix) == [], f.name


def _mutations(X):
    """Every copy of ``X`` with one structure constant increased by 1."""
    F = X.field
    keys = []
    if has_coalgebra(X):
        keys += ["delta", "counit"]
    if has_algebra(X):
        keys += ["mul", "unit"]
    if isinstance(X, HopfAlgebra):
        keys.append("antipode")
    for key in keys:
        M = getattr(X, key)
        for i in range(M.rows):
            for j in range(M.cols):
                a = M.a.copy()
                a[i, j] = F.reduce(a[i, j] + F.one)
                mats = {k: getattr(X, k) for k in keys}
                mats[key] = Matrix(F, a)
                yield (key, i, j), mats


# The only single-entry mutations that stay valid: in the divided power
# coalgebras adding x(x)x to a coproduct gives another genuine coalgebra
# (for Div2 the element 1+x becomes grouplike).
SURVIVING_MUTATIONS = {("Div2", "delta", 3, 0), ("Div2", "delta", 3, 1),
                       ("Div3", "delta", 4, 1), ("Div3", "delta", 4, 2)}


@pytest.mark.parametrize("spec", ["Q", "F2", "F5"])
def test_mutated_objects_fail_a_named_axiom(spec):
    survivors = set()
    for X in corpus_of(spec).objects.values():
        for (key, i, j), mats in _mutations(X):
            try:
                validate_structure(X.field, X.dim, mats.get("delta"), mats.get("counit"),
                                   mats.get("mul"), mats.get("unit"), mats.get("antipode"))
            except AxiomViolation as exc:
                assert exc.violations
                continue
            survivors.add((X.name, key, i, j))
            # confirm independently that the mutated data really is a coalgebra
            p = X.field.characteristic
            delta = [[int(v) for v in row] for row in mats["delta"].tolist()]
            counit = [int(v) for v in mats["counit"].tolist()[0]]
            assert oracles.coalgebra_axioms_hold(delta, counit, X.dim, p)
    assert survivors == SURVIVING_MUTATIONS


def test_coalgebra_oracle_agrees_with_validator(F5):
    for X in corpus_of("F5").objects.values():
        if not has_coalgebra(X):
            continue
        for (key, i, j), mats in _mutations(X.coalg):
            delta = [[int(v) for v in row] for row in mats["delta"].tolist()]
            counit = [int(v) for v in mats["counit"].tolist()[0]]
            valid = not structure_violations(Coalgebra(F5, X.dim, mats["delta"], mats["counit"]))
            assert valid == oracles.coalgebra_axioms_hold(delta, counit, X.dim, 5)


def test_dual_of_composite_is_reversed_composite(corpus):
    fs = [f for f in corpus.morphisms.values() if f.kind in ("coalg", "hopf", "bialg")]
    pairs = [(f, g) for f in fs for g in fs if f.dst == g.src]
    assert pairs
    for f, g in pairs:
        gf = compose(g, f)
        lhs = dualize(gf)
        rhs = compose(dualize(f), dualize(g))
        assert lhs.matrix == rhs.matrix
        assert morphism_violations(lhs.kind, lhs.src, lhs.dst, lhs.matrix) == []


def test_identity_composes_neutrally(corpus):
    for f in corpus.morphisms.values():
        assert compose(f, identity(f.src)).matrix == f.matrix
        assert compose(identity(f.dst), f).matrix == f.matrix


@given(st.sampled_from(["Q", "F2", "F5"]), st.data())
def test_projection_after_section_is_identity(spec, data):
    corp = corpus_of(spec)
    surj = [f for f in corp.morphisms.values()
            if f.kind in ("coalg", "bialg", "hopf") and f.matrix.rank() == f.dst.dim]
    f = data.draw(st.sampled_from(sorted(surj, key=lambda f: f.name)))
    from codomin.exactla import kernel

    q = quotient_by_coideal(f.src, kernel(f.matrix))
    assert q.projection @ q.section == Matrix.identity(f.field, q.quotient.dim)
    assert q.quotient.dim == f.dst.dim


def test_bialgebra_passthrough(Q):
    H = catalog.sweedler4(Q)
    assert isinstance(H.bialg, Bialgebra)
    assert H.delta == H.coalg.delta and H.mul == H.alg.mul
