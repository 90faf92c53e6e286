"""Structural forms of perfect numbers as executable constructions.

Even perfect numbers and Mersenne primes determine each other:  every
prime 2**k - 1 yields the perfect number 2**(k-1) * (2**k - 1), and every
even perfect number decomposes back to such a k.  Any odd perfect number
(none is known) would have to factor as p**i * m**2 with p prime and
p, i, m all odd; the decomposition pipeline below is defined on every odd
number of that syntactic shape so it can actually be exercised.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvariantViolation
from .primes import PrimePowerFactorization, is_prime, lucas_lehmer, odd_split, prime_power_factors
from .sigma import is_perfect


@dataclass(frozen=True)
class EvenPerfectForm:
    """n = 2**(k-1) * mersenne with mersenne = 2**k - 1 prime."""

    k: int
    mersenne: int
    n: int


@dataclass(frozen=True)
class OddDecomposition:
    """n = p**i * m**2 with p an odd prime, i and m odd, p not dividing m."""

    p: int
    i: int
    m: int


def euclid_perfect(k: int) -> EvenPerfectForm:
    """Build the perfect number 2**(k-1) * (2**k - 1) from a Mersenne exponent."""
    if k < 2:
        raise DomainError("mersenne-exponent-range", f"Mersenne exponent must be >= 2, got {k}")
    if not lucas_lehmer(k):
        raise DomainError("mersenne-composite", f"2^{k} - 1 is composite; k = {k} builds no perfect number")
    mersenne = (1 << k) - 1
    n = (1 << (k - 1)) * mersenne
    if not is_perfect(n):
        raise InvariantViolation("euclid-construction", f"2^{k - 1} * (2^{k} - 1) = {n} failed the sigma(n) = 2n check")
    return EvenPerfectForm(k=k, mersenne=mersenne, n=n)


def euler_decompose_even(n: int) -> EvenPerfectForm:
    """Recover k and the Mersenne prime from an even perfect number.

    The structural checks (odd part equals 2**k - 1, and it is prime) cannot
    fail for a genuine even perfect number; a failure is raised loudly as a
    bug, never returned.
    """
    if n < 1:
        raise DomainError("even-decompose-undefined", f"decomposition undefined at {n}")
    if n % 2 != 0:
        raise DomainError("even-decompose-parity", f"{n} is odd; even-perfect decomposition needs an even input")
    if not is_perfect(n):
        raise DomainError("even-decompose-not-perfect", f"{n} is not perfect")
    odd_part, i = odd_split(n)
    k = i + 1
    if odd_part != (1 << k) - 1:
        raise InvariantViolation("even-form", f"odd part {odd_part} of perfect {n} is not 2^{k} - 1")
    if not is_prime(odd_part):
        raise InvariantViolation("even-form", f"odd part {odd_part} of perfect {n} is composite")
    form = EvenPerfectForm(k=k, mersenne=odd_part, n=n)
    if euclid_perfect(k).n != n:
        raise InvariantViolation("even-form", f"round trip through k = {k} did not rebuild {n}")
    return form


def find_odd_exponent_pair(factors: PrimePowerFactorization) -> tuple[int, int]:
    """The unique (prime, exponent) pair with odd exponent.

    Zero odd exponents means the input was a perfect square; more than one
    means it is outside the odd-perfect shape.  Both are domain errors.
    """
    odd_pairs = [(p, e) for p, e in factors if e % 2 == 1]
    if not odd_pairs:
        raise DomainError("no-odd-exponent", "every exponent is even (the number is a perfect square)")
    if len(odd_pairs) > 1:
        raise DomainError(
            "multiple-odd-exponents",
            f"{len(odd_pairs)} exponents are odd ({odd_pairs}); the odd-perfect shape allows exactly one",
        )
    return odd_pairs[0]


def euler_decompose_odd(n: int) -> OddDecomposition:
    """Decompose odd n = p**i * m**2, the shape any odd perfect number must have.

    p and i come from the unique odd-exponent pair; m multiplies out the
    remaining primes at half their (necessarily even) exponents.  Perfection
    is not required: the shape is testable even though no odd perfect number
    is known.
    """
    if n < 1:
        raise DomainError("odd-decompose-undefined", f"decomposition undefined at {n}")
    if n % 2 == 0:
        raise DomainError("odd-decompose-parity", f"{n} is even; the p^i * m^2 pipeline needs an odd input")
    if n == 1:
        raise DomainError("odd-decompose-unit", "1 has no prime part to decompose")
    factors = prime_power_factors(n)
    p, i = find_odd_exponent_pair(factors)
    if p == 2:
        raise InvariantViolation("odd-decompose-parity", f"odd input {n} produced prime factor 2")
    m = 1
    for q, e in factors:
        if q != p:
            m *= q ** (e // 2)
    if p**i * m * m != n:
        raise InvariantViolation("odd-form", f"p^i * m^2 = {p}^{i} * {m}^2 does not rebuild {n}")
    return OddDecomposition(p=p, i=i, m=m)
