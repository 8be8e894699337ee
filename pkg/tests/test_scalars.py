"""Tests for exact field scalars and characteristic-aware binomials."""

import random
from fractions import Fraction
from math import comb

import pytest

from symdual.errors import CharMismatch, InvalidInput
from symdual.scalars import (
    FieldScalar,
    binomial_char,
    is_prime,
    multi_binomial,
    validate_char,
)


def test_validate_char():
    validate_char(0)
    validate_char(2)
    validate_char(7)
    pytest.raises(InvalidInput, lambda: validate_char(1))
    pytest.raises(InvalidInput, lambda: validate_char(4))
    pytest.raises(InvalidInput, lambda: validate_char(-3))


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_field_scalar_char0():
    a = FieldScalar(Fraction(3, 2), 0)
    b = FieldScalar(Fraction(1, 3), 0)
    assert (a + b).value == Fraction(11, 6)
    assert (a - b).value == Fraction(7, 6)
    assert (a * b).value == Fraction(1, 2)
    assert (a / b).value == Fraction(9, 2)
    assert (-a).value == Fraction(-3, 2)
    assert a.inverse().value == Fraction(2, 3)
    assert not FieldScalar.zero(0)
    assert FieldScalar.one(0)


def test_field_scalar_charp():
    a = FieldScalar(4, 5)
    b = FieldScalar(3, 5)
    assert (a + b).value == 2
    assert (a * b).value == 2
    assert a.inverse().value == 4
    assert (a * a.inverse()) == FieldScalar.one(5)
    # every nonzero element of F_7 has a working inverse
    for v in range(1, 7):
        s = FieldScalar(v, 7)
        assert (s * s.inverse()).value == 1


def test_field_scalar_char_mismatch():
    a = FieldScalar(1, 2)
    b = FieldScalar(1, 3)
    pytest.raises(CharMismatch, lambda: a + b)
    pytest.raises(CharMismatch, lambda: a * b)


def test_field_scalar_zero_inverse():
    z = FieldScalar.zero(5)
    pytest.raises(ZeroDivisionError, z.inverse)


def test_binomial_char0():
    assert binomial_char(5, 2, 0).value == 10
    assert binomial_char(6, 0, 0).value == 1
    assert binomial_char(3, 5, 0).value == 0


def test_binomial_lucas():
    # char-p binomial agrees with the integer binomial reduced mod p
    rng = random.Random(7)
    for _ in range(200):
        p = rng.choice([2, 3, 5])
        b = rng.randrange(0, 40)
        a = rng.randrange(0, 40)
        assert binomial_char(b, a, p).value == comb(b, a) % p


def test_multi_binomial():
    # structure constant of the divided power product
    assert multi_binomial((1, 0), (1, 0), 0).value == 2
    assert multi_binomial((1, 0), (1, 0), 2).value == 0
    assert multi_binomial((2, 1), (1, 1), 0).value == comb(3, 1) * comb(2, 1)
    assert multi_binomial((), (), 0).value == 1
