from fractions import Fraction

import pytest

from hopfgalois.fields import (QQ, FieldError, PrimeField, field_from_name,
                               field_name)


def test_rational_roundtrip():
    for text in ["0", "1", "-1", "2/3", "-7/4"]:
        assert QQ.format(QQ.parse(text)) == text
    assert QQ.parse("4/6") == Fraction(2, 3)


def test_rational_arithmetic():
    a, b = QQ.parse("2/3"), QQ.parse("-1/6")
    assert QQ.add(a, b) == Fraction(1, 2)
    assert QQ.mul(a, QQ.inv(a)) == QQ.one
    assert QQ.div(a, b) == Fraction(-4, 1)


def test_bad_rational():
    with pytest.raises(FieldError):
        QQ.parse("x/y")


def test_prime_field():
    f = PrimeField(5)
    assert f.add(f.from_int(3), f.from_int(4)) == 2
    assert f.mul(f.from_int(2), f.inv(f.from_int(2))) == f.one
    # frozen oracle: [[2]]^{-1} over F_5 is [[3]]
    assert f.inv(f.from_int(2)) == 3
    assert f.format(f.parse("7 mod 5")) == "2 mod 5"


def test_prime_field_rejects_composite():
    with pytest.raises(FieldError):
        PrimeField(6)


def test_wrong_modulus():
    with pytest.raises(FieldError):
        PrimeField(5).parse("1 mod 3")


def test_field_names():
    assert field_name(QQ) == "Q"
    assert field_name(PrimeField(7)) == "F_7"
    assert field_from_name("F_7").p == 7
    assert field_from_name("Q") is QQ
    with pytest.raises(FieldError):
        field_from_name("R")
