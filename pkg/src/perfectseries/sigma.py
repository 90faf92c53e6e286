"""Divisor sums, the perfect-number predicate, and bulk enumeration.

Three independent routes to sigma(n) = sum of all divisors of n:

* ``sigma_naive`` sums the divisor list found by trial division;
* ``sigma_fast`` evaluates the multiplicative formula
  sigma(p**e) = (p**(e+1) - 1) / (p - 1) over the prime-power factorization;
* ``sigma_sieve`` / the segmented scans accumulate every divisor of every n
  in bulk, one divisor-pair pass per segment.

The routes exist to check each other; none may be collapsed into another.
Bulk tables use numpy int64 (exact integer arithmetic, no floats) and are
range-guarded so values can never overflow.
"""

from __future__ import annotations

import os
from math import isqrt

import numpy as np

from .errors import DomainError, InvariantViolation
from .primes import lucas_lehmer, prime_power_factors

MEMORY_CAP_ENV = "PERFECTSERIES_SIEVE_MEMORY_BYTES"
_DEFAULT_MEMORY_CAP = 1 << 30  # 1 GiB

_SEGMENT = 1 << 22
# sigma(n) < 7n holds comfortably for n <= 1e16, so int64 never overflows here
_SCAN_MAX = 10**16
_AUTO_SIEVE_LIMIT = 10**7

_STRATEGIES = ("auto", "sieve", "mersenne", "checked")

_scan_memo: dict[tuple[str, int], tuple[int, ...]] = {}


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1, strictly ascending (includes 1 and n)."""
    if n < 1:
        raise DomainError("divisors-undefined", f"divisors undefined at {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma_naive(n: int) -> int:
    """Sum of all divisors of n, straight off the divisor list."""
    if n < 1:
        raise DomainError("sigma-undefined", f"sigma undefined at {n}")
    return sum(divisors(n))


def sigma_fast(n: int) -> int:
    """Sum of all divisors of n via the multiplicative prime-power formula."""
    if n < 1:
        raise DomainError("sigma-undefined", f"sigma undefined at {n}")
    total = 1
    for p, e in prime_power_factors(n):
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def is_perfect(n: int) -> bool:
    """True iff sigma(n) = 2n."""
    if n < 1:
        raise DomainError("perfect-undefined", f"perfection undefined at {n}")
    return sigma_fast(n) == 2 * n


class SigmaTable:
    """Immutable table of sigma(1..limit); index n yields sigma(n)."""

    __slots__ = ("_values", "limit")

    def __init__(self, values: np.ndarray, limit: int):
        values.setflags(write=False)
        self._values = values
        self.limit = limit

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise DomainError("sieve-index-range", f"sigma table covers 1..{self.limit}, got {n}")
        return int(self._values[n])

    def __len__(self) -> int:
        return self.limit


def _memory_cap() -> int:
    raw = os.environ.get(MEMORY_CAP_ENV)
    if raw is None:
        return _DEFAULT_MEMORY_CAP
    try:
        return int(raw)
    except ValueError:
        raise DomainError("sieve-memory-cap", f"{MEMORY_CAP_ENV} must be an integer byte count, got {raw!r}")


def sigma_sieve(limit: int) -> SigmaTable:
    """Table of sigma(n) for all n <= limit by divisor accumulation.

    One pass per divisor d adds d to every multiple, so the build is
    O(limit log limit) additions.  The table is 8 bytes per entry and is
    refused above the memory cap (default 1 GiB, override via the
    PERFECTSERIES_SIEVE_MEMORY_BYTES environment variable).
    """
    if limit < 1:
        raise DomainError("sieve-empty", f"sieve limit must be at least 1, got {limit}")
    cap = _memory_cap()
    need = 8 * (limit + 1)
    if need > cap:
        raise DomainError(
            "sieve-memory-cap",
            f"sigma table for limit {limit} needs {need} bytes, cap is {cap}"
            f" (override with {MEMORY_CAP_ENV})",
        )
    values = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        values[d::d] += d
    return SigmaTable(values, limit)


# ---------------------------------------------------------------------------
# Segmented scans.  sigma over a window [lo, hi) is accumulated from divisor
# pairs d * q = n with d < q: each pair adds d + q, and squares add their
# root once.  Memory stays O(segment) regardless of the scan limit.


def _sigma_segment(lo: int, hi: int) -> np.ndarray:
    """sigma(n) for every n in [lo, hi); index i holds sigma(lo + i)."""
    sig = np.zeros(hi - lo, dtype=np.int64)
    for d in range(1, isqrt(hi - 1) + 1):
        start = max(d * (d + 1), ((lo + d - 1) // d) * d)  # first multiple with q > d
        if start < hi:
            i0 = start - lo
            q0 = start // d
            count = (hi - 1 - start) // d + 1
            window = sig[i0::d]
            window += d
            window += np.arange(q0, q0 + count, dtype=np.int64)
        if lo <= d * d < hi:
            sig[d * d - lo] += d
    return sig


def _sigma_segment_odd(lo: int, hi: int) -> np.ndarray:
    """sigma(n) for odd n in [lo, hi), lo odd; index i holds sigma(lo + 2i)."""
    sig = np.zeros((hi - lo + 1) // 2, dtype=np.int64)
    for d in range(1, isqrt(hi - 1) + 1, 2):
        # odd multiples n = d * q with odd q > d; d odd makes start + d flip parity
        start = max(d * (d + 2), ((lo + d - 1) // d) * d)
        if start % 2 == 0:
            start += d
        if start < hi:
            i0 = (start - lo) // 2
            q0 = start // d
            count = (hi - 1 - start) // (2 * d) + 1
            window = sig[i0::d]  # n-stride 2d is index-stride d
            window += d
            window += np.arange(q0, q0 + 2 * count, 2, dtype=np.int64)
        if lo <= d * d < hi:
            sig[(d * d - lo) // 2] += d
    return sig


def _guard_scan_limit(limit: int) -> None:
    if limit < 1:
        raise DomainError("scan-empty", f"scan limit must be at least 1, got {limit}")
    if limit > _SCAN_MAX:
        raise DomainError("scan-range", f"scan limit {limit} exceeds the int64-safe bound {_SCAN_MAX}")


def _scan_perfect(limit: int) -> tuple[int, ...]:
    out = []
    lo = 1
    while lo <= limit:
        hi = min(lo + _SEGMENT, limit + 1)
        sig = _sigma_segment(lo, hi)
        ns = np.arange(lo, hi, dtype=np.int64)
        out.extend(int(n) for n in ns[sig == 2 * ns])
        lo = hi
    return tuple(out)


def _scan_odd_perfect(limit: int) -> tuple[int, ...]:
    out = []
    lo = 1
    while lo <= limit:
        hi = min(lo + _SEGMENT, limit + 1)  # segment length even keeps lo odd
        sig = _sigma_segment_odd(lo, hi)
        ns = np.arange(lo, hi, 2, dtype=np.int64)
        out.extend(int(n) for n in ns[sig == 2 * ns])
        lo = hi
    return tuple(out)


def _mersenne_perfect(limit: int) -> tuple[int, ...]:
    """Even perfect numbers <= limit built as 2**(k-1) * (2**k - 1)."""
    out = []
    k = 2
    while (1 << (k - 1)) * ((1 << k) - 1) <= limit:
        if lucas_lehmer(k):
            out.append((1 << (k - 1)) * ((1 << k) - 1))
        k += 1
    return tuple(out)


def _memoized(kind: str, limit: int, builder) -> tuple[int, ...]:
    key = (kind, limit)
    if key not in _scan_memo:
        _scan_memo[key] = builder(limit)
    return _scan_memo[key]


def perfect_up_to(limit: int, strategy: str = "auto") -> list[int]:
    """All perfect numbers <= limit, ascending.

    strategy:
      * ``"sieve"``    -- segmented sigma scan over every n;
      * ``"mersenne"`` -- even perfects constructed from Mersenne exponents,
        odd candidates still scanned (odd-only sigma scan);
      * ``"auto"``     -- sieve below 10**7, mersenne construction above;
      * ``"checked"``  -- run both and demand they agree.
    """
    _guard_scan_limit(limit)
    if strategy not in _STRATEGIES:
        raise DomainError("scan-strategy", f"unknown strategy {strategy!r}; expected one of {_STRATEGIES}")

    if strategy == "auto":
        strategy = "sieve" if limit <= _AUTO_SIEVE_LIMIT else "mersenne"

    if strategy == "sieve":
        return list(_memoized("scan", limit, _scan_perfect))
    if strategy == "mersenne":
        evens = _mersenne_perfect(limit)
        odds = _memoized("odd-scan", limit, _scan_odd_perfect)
        return sorted(evens + odds)

    scanned = list(_memoized("scan", limit, _scan_perfect))
    constructed = sorted(_mersenne_perfect(limit) + _memoized("odd-scan", limit, _scan_odd_perfect))
    if scanned != constructed:
        raise InvariantViolation(
            "enumeration-mismatch",
            f"sigma scan found {scanned} but construction + odd scan found {constructed} at limit {limit}",
        )
    return scanned
