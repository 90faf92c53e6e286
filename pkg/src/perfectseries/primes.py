"""Primality testing and prime-power factorization over unbounded naturals.

Every answer is exact.  Trial division decides small inputs; a
fixed-witness strong-probable-prime test covers the range where that
witness set is proven deterministic; Mersenne-shaped inputs always route
through the Lucas-Lehmer recurrence.  Inputs outside every proven range
raise instead of guessing.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Iterator, NamedTuple

from .errors import DomainError

_TRIAL_LIMIT = 10**6

# Strong-probable-prime witnesses: the first 13 primes decide primality for
# every n below 3317044064679887385961981 (Sorenson & Webster's bound).
_SPRP_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SPRP_LIMIT = 3_317_044_064_679_887_385_961_981

PrimePowerFactorization = list[tuple[int, int]]


class OddSplit(NamedTuple):
    """n = odd_part * 2**two_adic with odd_part odd and two_adic maximal."""

    odd_part: int
    two_adic: int


# ---------------------------------------------------------------------------
# Incremental prime sieve (cache only ever grows; observationally pure).

_sieve_bound = 0
_prime_cache: list[int] = []


def _extend_sieve(limit: int) -> None:
    global _sieve_bound, _prime_cache
    if limit <= _sieve_bound:
        return
    bound = max(limit, 2 * _sieve_bound, 1 << 10)
    flags = bytearray([1]) * (bound + 1)
    flags[0:2] = b"\x00\x00"
    p = 2
    while p * p <= bound:
        if flags[p]:
            flags[p * p :: p] = b"\x00" * ((bound - p * p) // p + 1)
        p += 1
    _prime_cache = [i for i in range(2, bound + 1) if flags[i]]
    _sieve_bound = bound


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    _extend_sieve(limit)
    return _prime_cache[: bisect_right(_prime_cache, limit)]


def _prime_stream() -> Iterator[int]:
    i = 0
    while True:
        if i >= len(_prime_cache):
            _extend_sieve(max(2 * _sieve_bound, 1 << 10))
        yield _prime_cache[i]
        i += 1


# ---------------------------------------------------------------------------
# Primality.


def _trial_division_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _strong_probable_prime(n: int, base: int) -> bool:
    # n odd, n > 2; write n - 1 = d * 2**r with d odd
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = (x * x) % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Exact primality: true iff n has exactly two divisors.

    Deterministic at every magnitude it accepts.  Non-Mersenne inputs at or
    beyond the proven witness range raise rather than return a probabilistic
    answer.
    """
    if n < 0:
        raise DomainError("negative-natural", f"primality is defined on naturals, got {n}")
    if n < 2:
        return False
    if n < _TRIAL_LIMIT:
        return _trial_division_prime(n)
    if (n & (n + 1)) == 0:
        # n = 2**k - 1: always decide via Lucas-Lehmer
        return lucas_lehmer(n.bit_length())
    if n % 2 == 0:
        return False
    if n < _SPRP_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _SPRP_WITNESSES)
    raise DomainError(
        "primality-range",
        f"no exact primality procedure for non-Mersenne {n} >= {_SPRP_LIMIT}",
    )


def lucas_lehmer(k: int) -> bool:
    """Decide whether 2**k - 1 is prime (k >= 2).

    Composite k short-circuits to False since 2**a - 1 divides 2**k - 1 for
    every a dividing k.  For prime k the classic recurrence s(0) = 4,
    s(j+1) = s(j)**2 - 2 (mod 2**k - 1) decides: prime iff s(k - 2) = 0.
    """
    if k < 2:
        raise DomainError("lucas-lehmer-range", f"Lucas-Lehmer needs exponent k >= 2, got {k}")
    if k == 2:
        return True  # 2**2 - 1 = 3; the recurrence only starts at k = 3
    if not is_prime(k):
        return False
    m = (1 << k) - 1
    s = 4
    for _ in range(k - 2):
        s = (s * s - 2) % m
    return s == 0


# ---------------------------------------------------------------------------
# Factorization.


def prime_power_factors(n: int) -> PrimePowerFactorization:
    """Unique factorization n = prod p**e as an ascending list of (p, e) pairs.

    n = 1 yields the empty product.  Trial division by sieved primes, with an
    exact primality short-circuit once the remaining cofactor is prime, so
    inputs with at most one large prime factor stay cheap.
    """
    if n < 1:
        raise DomainError("factorization-undefined", f"factorization undefined at {n}")
    pairs: PrimePowerFactorization = []
    rem = n
    if rem > _TRIAL_LIMIT and is_prime(rem):
        return [(rem, 1)]
    for p in _prime_stream():
        if rem == 1:
            break
        if p * p > rem:
            pairs.append((rem, 1))
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            pairs.append((p, e))
            if rem > _TRIAL_LIMIT and is_prime(rem):
                pairs.append((rem, 1))
                break
    return pairs


def odd_split(n: int) -> OddSplit:
    """Split n >= 1 into its odd part and the largest i with 2**i dividing n."""
    if n < 1:
        raise DomainError("odd-split-undefined", f"odd/2-adic split undefined at {n}")
    two_adic = (n & -n).bit_length() - 1
    return OddSplit(n >> two_adic, two_adic)
