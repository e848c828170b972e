import pytest

from codomin import catalog
from codomin.domkit import is_cosemisimple
from codomin.errors import BadParams
from codomin.exactla import Matrix
from codomin.scalars import parse_field_spec
from codomin.structures import (HopfAlgebra, dualize, is_cocommutative, is_commutative,
                                structure_violations)


def test_group_algebra_entry(Q):
    (X,), _ = catalog.build("group_algebra", Q, {"group": "C2"})
    assert isinstance(X, HopfAlgebra) and X.dim == 2 and is_cocommutative(X)


def test_sweedler_entry(Q):
    (H,), _ = catalog.build("sweedler4", Q)
    assert H.dim == 4
    assert not is_cocommutative(H) and not is_cosemisimple(H)


def test_comatrix_entry(Q):
    (C,), _ = catalog.build("comatrix", Q, {"n": 2})
    assert C.dim == 4 and is_cosemisimple(C)


def test_sweedler_rejects_characteristic_two(F2):
    with pytest.raises(BadParams):
        catalog.build("sweedler4", F2)


@pytest.mark.parametrize("table", [[[0, 1], [1, 1]], [[0, 1, 2], [1, 0, 2], [2, 2, 0]], [[1, 0], [0, 1]], []])
def test_bad_cayley_tables(Q, table):
    with pytest.raises(BadParams):
        catalog.group_algebra(Q, table)


def test_taft_parameters(F5, Q):
    H = catalog.taft(F5, 4, 2)
    assert H.dim == 16 and structure_violations(H) == []
    with pytest.raises(BadParams):
        catalog.taft(F5, 4, 4)  # 4 has order 2
    with pytest.raises(BadParams):
        catalog.taft(F5, 4)  # no root supplied
    with pytest.raises(BadParams):
        catalog.taft(Q, 3)


def test_taft_over_cyclotomic_extension():
    F = parse_field_spec("Q[t]/t^2+t+1")
    H = catalog.taft(F, 3, F.gen)
    assert H.dim == 9 and structure_violations(H) == []
    assert not is_cocommutative(H)


def test_unknown_entries(Q):
    with pytest.raises(BadParams):
        catalog.build("quantum_sl2", Q)
    with pytest.raises(BadParams):
        catalog.build("group_algebra", Q, {"group": "D7"})
    with pytest.raises(BadParams):
        catalog.build("cyclic_pair", Q, {"m": 4, "n": 3})


def test_pairs(Q):
    objs, maps = catalog.build("triangular_pair", Q)
    assert [X.name for X in objs] == ["D2", "T2", "T2*", "D2*"]
    assert [f.kind for f in maps] == ["alg", "coalg"]
    objs, maps = catalog.build("cyclic_pair", Q, {"m": 6, "n": 3})
    assert [f.kind for f in maps] == ["hopf", "hopf"]
    assert maps[1].matrix.rank() == 3


def test_every_entry_builds(F5):
    params = {"taft": {"n": 4, "q": 2}, "cyclic_pair": {"m": 4, "n": 2}}
    for name in catalog.CATALOG_NAMES:
        objs, maps = catalog.build(name, F5, params.get(name))
        for X in objs:
            assert structure_violations(X) == []


def test_corpus_size(corpus):
    assert len(corpus.morphisms) >= 30


def test_antipode_squares_to_identity(corpus):
    for H in corpus.objects.values():
        if isinstance(H, HopfAlgebra) and (is_commutative(H) or is_cocommutative(H)):
            assert H.antipode @ H.antipode == Matrix.identity(H.field, H.dim)


@pytest.mark.parametrize("group", ["C2", "C3", "C4", "V4", "S3"])
def test_function_algebra_is_dual_of_group_algebra(corpus, group):
    table = catalog.group_table(group)
    G = catalog.group_algebra(corpus.field, table)
    fn = catalog.function_algebra(corpus.field, table)
    D = dualize(G)
    assert (D.delta, D.counit, D.mul, D.unit, D.antipode) == (fn.delta, fn.counit, fn.mul, fn.unit,
                                                             fn.antipode)
