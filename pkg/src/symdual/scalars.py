"""Exact field arithmetic over Q and prime fields, plus binomial kernels.

Scalars carry their characteristic and refuse to mix: an element of F_5
never silently coerces into Q or F_7.  Rational values are arbitrary
precision ``fractions.Fraction``; prime-field values are residues in
``range(p)``.  Binomial coefficients in characteristic p are reduced
digit-by-digit through Lucas' identity, so huge integers are never
materialized on the way to a residue.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import CharMismatch, InvalidInput

MAX_PRIME = 2**31


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def validate_char(char: int) -> int:
    """Return ``char`` if it is 0 or a prime below 2**31, else raise."""
    if char == 0:
        return 0
    if not isinstance(char, int) or char >= MAX_PRIME or not is_prime(char):
        raise InvalidInput(f"characteristic must be 0 or a prime < 2**31, got {char!r}")
    return char


class FieldScalar:
    """An exact element of Q (char 0) or F_p (char p).

    Arithmetic between scalars of different characteristic raises
    CharMismatch; plain Python ints and (in char 0) Fractions coerce via
    the canonical ring map.
    """

    __slots__ = ("char", "value")

    def __init__(self, value=0, char: int = 0):
        validate_char(char)
        object.__setattr__(self, "char", char)
        if char == 0:
            if isinstance(value, FieldScalar):
                value = value.value
            object.__setattr__(self, "value", Fraction(value))
        else:
            if isinstance(value, FieldScalar):
                value = value.value
            if isinstance(value, str):
                value = Fraction(value)
            if isinstance(value, Fraction):
                if value.denominator % char == 0:
                    raise ZeroDivisionError(f"denominator divisible by {char}")
                value = value.numerator * pow(value.denominator, -1, char)
            object.__setattr__(self, "value", value % char)

    def __setattr__(self, name, val):
        raise AttributeError("FieldScalar is immutable")

    @classmethod
    def zero(cls, char: int = 0) -> "FieldScalar":
        return cls(0, char)

    @classmethod
    def one(cls, char: int = 0) -> "FieldScalar":
        return cls(1, char)

    def _coerce(self, other):
        if isinstance(other, FieldScalar):
            if other.char != self.char:
                raise CharMismatch(
                    f"cannot mix characteristics {self.char} and {other.char}"
                )
            return other
        if isinstance(other, int):
            return FieldScalar(other, self.char)
        if isinstance(other, Fraction) and self.char == 0:
            return FieldScalar(other, 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldScalar(self.value + other.value, self.char)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldScalar(self.value - other.value, self.char)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldScalar(other.value - self.value, self.char)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        v = self.value * other.value
        return FieldScalar(v if self.char == 0 else v % self.char, self.char)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return FieldScalar(-self.value, self.char)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if self.char == 0:
            return FieldScalar(self.value**k, 0)
        return FieldScalar(pow(self.value, k, self.char), self.char)

    def inverse(self) -> "FieldScalar":
        if not self:
            raise ZeroDivisionError("division by zero scalar")
        if self.char == 0:
            return FieldScalar(1 / self.value, 0)
        return FieldScalar(pow(self.value, -1, self.char), self.char)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            try:
                other = FieldScalar(other, self.char)
            except (ZeroDivisionError, InvalidInput):
                return NotImplemented
        if not isinstance(other, FieldScalar):
            return NotImplemented
        return self.char == other.char and self.value == other.value

    def __hash__(self):
        return hash((self.char, self.value))

    def __repr__(self):
        if self.char == 0:
            return f"FieldScalar({str(self.value)!r})"
        return f"FieldScalar({self.value}, char={self.char})"

    def __str__(self):
        return str(self.value)


def exponent_vec(exps) -> tuple[int, ...]:
    """Validate and freeze a tuple of nonnegative integer exponents."""
    t = tuple(exps)
    for e in t:
        if not isinstance(e, int) or e < 0:
            raise InvalidInput(f"exponents must be nonnegative integers, got {e!r}")
    return t


def vec_degree(a) -> int:
    return sum(a)


def vec_add(a, b) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b) -> tuple[int, ...]:
    """Componentwise difference; caller guarantees b <= a."""
    return tuple(x - y for x, y in zip(a, b))


def vec_leq(a, b) -> bool:
    """Componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b))


def binomial_char(b: int, a: int, char: int = 0) -> FieldScalar:
    """Binomial coefficient C(b, a) in the given characteristic.

    C(b, a) = 0 when a > b.  In characteristic p the residue is computed
    from base-p digits by Lucas' identity: C(b, a) = prod C(b_i, a_i) mod p.
    """
    validate_char(char)
    if a < 0 or b < 0:
        raise InvalidInput("binomial arguments must be nonnegative")
    if a > b:
        return FieldScalar.zero(char)
    if char == 0:
        return FieldScalar(math.comb(b, a), 0)
    p = char
    r = 1
    while a or b:
        ad, a = a % p, a // p
        bd, b = b % p, b // p
        if ad > bd:
            return FieldScalar.zero(p)
        r = r * math.comb(bd, ad) % p
    return FieldScalar(r, p)


def multi_binomial(a, b, char: int = 0) -> FieldScalar:
    """Product of per-coordinate binomials: prod_i C(a_i + b_i, a_i).

    This is the structure constant of the divided power basis:
    Y^[a] * Y^[b] = multi_binomial(a, b) * Y^[a+b].
    """
    if len(a) != len(b):
        raise InvalidInput("exponent vectors must have equal length")
    out = FieldScalar.one(char)
    for x, y in zip(a, b):
        out = out * binomial_char(x + y, x, char)
        if not out:
            break
    return out
