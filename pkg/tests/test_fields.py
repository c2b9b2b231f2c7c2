from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from slword import GF, QQ, Field, Fp


rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)
nonzero_rationals = rationals.filter(bool)
residues_13 = st.integers(min_value=0, max_value=12).map(lambda v: Fp(v, 13))
nonzero_residues_13 = residues_13.filter(bool)


def test_rational_addition():
    assert QQ.parse("1/2") + QQ.parse("1/3") == Fraction(5, 6)


def test_prime_field_multiplication():
    assert GF(5).scalar(2) * GF(5).scalar(3) == GF(5).one


@given(nonzero_rationals)
def test_rational_inverse(x):
    assert x * x**-1 == 1


@given(nonzero_residues_13)
def test_residue_inverse(x):
    assert x * x**-1 == Fp(1, 13)


@given(rationals, rationals, rationals)
def test_rational_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@given(residues_13, residues_13, residues_13)
def test_residue_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) * c == a * c + b * c


def test_canonical_forms():
    assert QQ.parse("4/2") == Fraction(2)
    assert QQ.parse("-1/-2") == Fraction(1, 2)
    assert QQ.format(QQ.parse("-3/6")) == "-1/2"
    assert GF(7).parse("13") == Fp(6, 7)
    assert GF(7).parse("-1") == Fp(6, 7)
    assert GF(7).format(Fp(20, 7)) == "6"


@given(st.integers(), st.integers(min_value=0, max_value=100))
def test_residue_renormalization_is_stable(v, shift):
    a = Fp(v, 11)
    assert Fp(a.val, 11) == a == Fp(v + 11 * shift, 11)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / Fraction(0)
    with pytest.raises(ZeroDivisionError):
        Fp(1, 5) / Fp(0, 5)
    with pytest.raises(ZeroDivisionError):
        Fp(0, 5) ** -1


def test_mixed_fields_rejected():
    with pytest.raises(TypeError):
        Fp(1, 5) + Fp(1, 7)
    with pytest.raises(TypeError):
        Fp(1, 5) * Fraction(1, 2)
    with pytest.raises(TypeError):
        Fraction(1, 2) - Fp(1, 5)
    with pytest.raises(TypeError):
        GF(5).scalar(Fraction(1, 2))
    with pytest.raises(TypeError):
        QQ.scalar(Fp(1, 5))


def test_int_coercion():
    assert 1 - Fp(3, 7) == Fp(5, 7)
    assert Fp(3, 7) + 6 == Fp(2, 7)
    assert 2 / Fp(3, 7) == Fp(3, 7)  # 3 * 3 = 2 mod 7


def test_modulus_must_be_prime():
    for bad in (0, 1, 4, 6, 9, 15):
        with pytest.raises(ValueError):
            Field(bad)
    GF(2), GF(3), GF(101)  # fine


def test_field_json_round_trip():
    for f in (QQ, GF(7)):
        assert Field.from_json(f.to_json()) == f
    with pytest.raises(ValueError):
        Field.from_json({"kind": "R"})
