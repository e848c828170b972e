import random

import pytest
from hypothesis import given, strategies as st

from codomin.errors import DivisionByZero, FieldMismatch, ParseError, Unsupported
from codomin.scalars import (Scalar, embed_scalar, parse_field_spec, prime_field, rationals,
                             scalar_arith, simple_extension)

SPECS = ["Q", "F2", "F5", "F7", "F2[t]/t^2+t+1", "F5[t]/t^2+2", "Q[t]/t^2+1", "F3[t]/t^3+2*t+1"]


def test_rational_sum():
    Q = rationals()
    assert scalar_arith(Scalar.of(Q, "1/2"), Scalar.of(Q, "1/3"), "+") == Scalar.of(Q, "5/6")


def test_residue_sum():
    F = prime_field(5)
    assert scalar_arith(Scalar.of(F, 2), Scalar.of(F, 4), "+") == Scalar.of(F, 1)


def test_f4_square_of_generator():
    F4 = parse_field_spec("F2[t]/t^2+t+1")
    t = F4.gen
    assert F4.components(t * t) == (1, 1)


def test_division_by_zero():
    for spec in ("Q", "F5", "F2[t]/t^2+t+1"):
        F = parse_field_spec(spec)
        with pytest.raises(DivisionByZero):
            scalar_arith(Scalar.of(F, 1), Scalar.of(F, 0), "/")


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        scalar_arith(Scalar.of(rationals(), 1), Scalar.of(prime_field(5), 1), "+")


def test_canonical_forms():
    Q = rationals()
    assert Q.format(Q.coerce("6/-4")) == "-3/2"
    assert prime_field(5).coerce(-1) == 4
    assert Q.parse("3/6") == Q.coerce("1/2")


@pytest.mark.parametrize("text", ["F4", "F2[t]/t^2+1", "Q[t]/t^2-1", "F5[t]/t^2+1", "G7", "Q[t]/t"])
def test_bad_field_specs(text):
    with pytest.raises(ParseError):
        parse_field_spec(text)


def test_degree_four_over_q_unsupported():
    with pytest.raises(Unsupported):
        parse_field_spec("Q[t]/t^4+1")


def test_towers_rejected():
    F4 = parse_field_spec("F2[t]/t^2+t+1")
    with pytest.raises(Unsupported):
        simple_extension(F4, [1, 1, 1])


def test_cubic_over_f3_is_a_field():
    F = parse_field_spec("F3[t]/t^3+2*t+1")
    assert F.order == 27
    nonzero = [x for x in F.elements() if x]
    assert len(nonzero) == 26
    assert all(x * F.inv(x) == F.one for x in nonzero)


def test_spec_round_trip():
    for spec in SPECS:
        assert parse_field_spec(parse_field_spec(spec).spec).spec == parse_field_spec(spec).spec


@pytest.mark.parametrize("spec, x", [("F2[t]/t^2+t+1", 1), ("Q[t]/t^2+1", "2/3"), ("F5[t]/t^2+2", 3)])
def test_embed_examples(spec, x):
    ext = parse_field_spec(spec)
    a = Scalar.of(ext.base, x)
    e = embed_scalar(a, ext)
    assert ext.components(e.value)[0] == ext.base.coerce(x)
    assert all(c == 0 for c in ext.components(e.value)[1:])


def test_embed_needs_extension_of_the_field():
    with pytest.raises(FieldMismatch):
        embed_scalar(Scalar.of(prime_field(5), 1), parse_field_spec("F2[t]/t^2+t+1"))


@pytest.mark.parametrize("spec", SPECS)
def test_field_axioms_random_triples(spec):
    F = parse_field_spec(spec)
    rng = random.Random(spec)
    for _ in range(1000):
        a, b, c = (Scalar(F, F.random_element(rng)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a - a == Scalar.of(F, 0)
        if not a.is_zero():
            assert (b / a) * a == b


@pytest.mark.parametrize("spec", ["F2[t]/t^2+t+1", "F5[t]/t^2+2", "Q[t]/t^2+1"])
def test_embedding_is_an_injective_ring_map(spec):
    ext = parse_field_spec(spec)
    rng = random.Random(spec)
    for _ in range(1000):
        a, b = (Scalar(ext.base, ext.base.random_element(rng)) for _ in range(2))
        assert embed_scalar(a + b, ext) == embed_scalar(a, ext) + embed_scalar(b, ext)
        assert embed_scalar(a * b, ext) == embed_scalar(a, ext) * embed_scalar(b, ext)
        assert embed_scalar(a, ext).is_zero() == a.is_zero()


@given(st.fractions(), st.fractions())
def test_rationals_match_fractions(x, y):
    Q = rationals()
    a, b = Scalar.of(Q, f"{x.numerator}/{x.denominator}"), Scalar.of(Q, f"{y.numerator}/{y.denominator}")
    s = x * y + x - y
    assert a * b + a - b == Scalar.of(Q, f"{s.numerator}/{s.denominator}")


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_prime_field_matches_modular_ints(x, y):
    F = prime_field(7)
    assert Scalar.of(F, x) * Scalar.of(F, y) == Scalar.of(F, (x * y) % 7)
