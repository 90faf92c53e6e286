"""Exact arithmetic kernel: unbounded naturals and reduced rationals.

Python ints carry the naturals (arbitrary precision, no wraparound) and
``fractions.Fraction`` carries the rationals, which stay in lowest terms
with a positive denominator after every operation.  Floating point is
banned throughout the package: the inequalities certified downstream are
strict claims about exact values, not approximations, so everything here
is integer arithmetic all the way down.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError

RationalLike = Fraction | int


def _natural(value: int, what: str) -> int:
    if value < 0:
        raise DomainError("negative-natural", f"{what} must be a nonnegative integer, got {value}")
    return value


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two naturals; gcd(0, 0) = 0."""
    return math.gcd(_natural(a, "gcd argument"), _natural(b, "gcd argument"))


def pow_nat(base: int, exp: int) -> int:
    """base**exp by square-and-multiply. 0**0 is rejected as an undefined form."""
    _natural(base, "base")
    _natural(exp, "exponent")
    if base == 0 and exp == 0:
        raise DomainError("zero-power-zero", "0^0 is an undefined form")
    result = 1
    square = base
    e = exp
    while e:
        if e & 1:
            result *= square
        e >>= 1
        if e:
            square *= square
    return result


def rational(numerator: int, denominator: int = 1) -> Fraction:
    """Build a reduced fraction, rejecting a zero denominator."""
    if denominator == 0:
        raise DomainError("zero-denominator", "rational with denominator 0")
    return Fraction(numerator, denominator)


def _as_fraction(value: RationalLike) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def rat_add(a: RationalLike, b: RationalLike) -> Fraction:
    return _as_fraction(a) + _as_fraction(b)


def rat_sub(a: RationalLike, b: RationalLike) -> Fraction:
    return _as_fraction(a) - _as_fraction(b)


def rat_mul(a: RationalLike, b: RationalLike) -> Fraction:
    return _as_fraction(a) * _as_fraction(b)


def rat_div(a: RationalLike, b: RationalLike) -> Fraction:
    b = _as_fraction(b)
    if b == 0:
        raise DomainError("division-by-zero", "exact division by zero")
    return _as_fraction(a) / b


def rat_cmp(a: RationalLike, b: RationalLike) -> int:
    """Exact total order: -1 if a < b, 0 if equal, +1 if a > b."""
    a, b = _as_fraction(a), _as_fraction(b)
    # cross-multiplied so the comparison is plain integer arithmetic
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0
