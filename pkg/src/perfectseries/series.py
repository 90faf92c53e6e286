"""Exact partial sums of reciprocals of perfect numbers, with bound certificates.

The running sum splits into an even and an odd branch.  Each even perfect
number 2**i * (2**(i+1) - 1) contributes at most 1/2**i, so the even branch
sits below a finite geometric sum and hence below 2.  Each odd perfect
number p**i * m**2 contributes at most 1/m**2 with all the m distinct, so
the odd branch sits below a finite sum of inverse squares and hence below 2.
Both relaxations are replayed step by step in exact rationals and packaged
as a certificate whose every inequality is re-checked before it is returned;
the grand total is certified < 4.

Everything here is a pure function of its inputs; no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import DomainError, InvariantViolation
from .exact import rat_cmp
from .sigma import perfect_up_to
from .structure import euler_decompose_even, euler_decompose_odd

_TWO = Fraction(2)
_FOUR = Fraction(4)

RELATION_LE = "le"
RELATION_LT = "lt"


def geometric_partial(n: int) -> Fraction:
    """Sum of 1/2**i for i = 0..n, verified against the identity 2 - 1/2**n."""
    if n < 0:
        raise DomainError("geometric-range", f"geometric partial sum needs n >= 0, got {n}")
    total = Fraction(0)
    for i in range(n + 1):
        total += Fraction(1, 1 << i)
    closed = _TWO - Fraction(1, 1 << n)
    if total != closed:
        raise InvariantViolation("geometric-identity", f"sum to {n} is {total}, expected {closed}")
    return total


def basel_partial(n: int) -> Fraction:
    """Sum of 1/m**2 for m = 1..n, verified against the bound 2 - 1/n."""
    if n < 1:
        raise DomainError("basel-range", f"inverse-square partial sum needs n >= 1, got {n}")
    total = Fraction(0)
    for m in range(1, n + 1):
        total += Fraction(1, m * m)
    bound = _TWO - Fraction(1, n)
    if total > bound:
        raise InvariantViolation("basel-bound", f"sum to {n} is {total}, above the bound {bound}")
    return total


class HornfeckLedger:
    """Uniqueness monitor for odd-perfect square parts.

    Distinct odd perfect numbers must carry distinct m in their p**i * m**2
    forms, so one m mapping to two different n can only mean a bug; recording
    such a pair is a hard failure, not a recoverable error.
    """

    def __init__(self) -> None:
        self._entries: dict[int, int] = {}

    def record(self, m: int, n: int) -> None:
        prev = self._entries.get(m)
        if prev is None:
            self._entries[m] = n
        elif prev != n:
            raise InvariantViolation(
                "hornfeck-collision",
                f"square part {m} already belongs to {prev}; refusing a second owner {n}",
            )

    def entries(self) -> dict[int, int]:
        return dict(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, m: int) -> bool:
        return m in self._entries


@dataclass(frozen=True)
class PartialSum:
    """Exact reciprocal sum over the perfect numbers up to ``cutoff``."""

    cutoff: int
    total: Fraction
    even_part: Fraction
    odd_part: Fraction
    terms: tuple[tuple[int, Fraction], ...]


@dataclass(frozen=True)
class CertStep:
    """One certified inequality: lhs RELATION rhs with exact sides."""

    label: str
    lhs: Fraction
    relation: str
    rhs: Fraction


@dataclass(frozen=True)
class BoundCertificate:
    """Machine-checked trace concluding total < 4 at the given cutoff."""

    cutoff: int
    even_steps: tuple[CertStep, ...]
    odd_steps: tuple[CertStep, ...]
    total: Fraction
    bound: Fraction


def perfect_reciprocal_sum(cutoff: int, strategy: str = "auto") -> PartialSum:
    """Sum 1/n over perfect n <= cutoff, split into even and odd branches.

    Every odd term is decomposed and its square part fed through a
    HornfeckLedger, so a uniqueness violation aborts the sum.
    """
    if cutoff < 1:
        raise DomainError("series-cutoff-range", f"series cutoff must be at least 1, got {cutoff}")
    ledger = HornfeckLedger()
    even = Fraction(0)
    odd = Fraction(0)
    terms = []
    for n in perfect_up_to(cutoff, strategy):
        reciprocal = Fraction(1, n)
        if n % 2 == 0:
            even += reciprocal
        else:
            ledger.record(euler_decompose_odd(n).m, n)
            odd += reciprocal
        terms.append((n, reciprocal))
    return PartialSum(cutoff=cutoff, total=even + odd, even_part=even, odd_part=odd, terms=tuple(terms))


def _step(label: str, lhs: Fraction, relation: str, rhs: Fraction) -> CertStep:
    order = rat_cmp(lhs, rhs)
    ok = order < 0 if relation == RELATION_LT else order <= 0
    if not ok:
        raise InvariantViolation("certificate-step", f"step {label}: {lhs} {relation} {rhs} does not hold")
    return CertStep(label=label, lhs=lhs, relation=relation, rhs=rhs)


def certify_bound(cutoff: int, strategy: str = "auto") -> BoundCertificate:
    """Certificate that the reciprocal sum up to ``cutoff`` stays below 4.

    The even branch is relaxed term-by-term to 1/2**i (using each term's
    decomposed exponent), then to the full geometric sum; the odd branch to
    1/m**2 (ledger-distinct m), then to the full inverse-square sum.  The
    full sums are instantiated at the tightest indices the found terms
    allow: i <= log2(cutoff) because 2**i <= n <= cutoff, and
    m <= isqrt(cutoff) because m**2 <= n <= cutoff.  Every relation is
    re-checked exactly before the certificate is returned.
    """
    parts = perfect_reciprocal_sum(cutoff, strategy)

    ledger = HornfeckLedger()
    sparse_geometric = Fraction(0)
    sparse_squares = Fraction(0)
    for n, _ in parts.terms:
        if n % 2 == 0:
            i = euler_decompose_even(n).k - 1
            sparse_geometric += Fraction(1, 1 << i)
        else:
            decomposition = euler_decompose_odd(n)
            ledger.record(decomposition.m, n)
            sparse_squares += Fraction(1, decomposition.m ** 2)

    geometric_index = cutoff.bit_length() - 1
    square_index = isqrt(cutoff)
    full_geometric = geometric_partial(geometric_index)
    geometric_closed = _TWO - Fraction(1, 1 << geometric_index)
    full_squares = basel_partial(square_index)
    squares_bound = _TWO - Fraction(1, square_index)

    even_steps = (
        _step("even-terms-vs-powers", parts.even_part, RELATION_LE, sparse_geometric),
        _step("even-powers-within-geometric", sparse_geometric, RELATION_LE, full_geometric),
        _step("even-geometric-closed-form", full_geometric, RELATION_LE, geometric_closed),
        _step("even-bound-below-two", geometric_closed, RELATION_LT, _TWO),
    )
    odd_steps = (
        _step("odd-terms-vs-squares", parts.odd_part, RELATION_LE, sparse_squares),
        _step("odd-squares-within-basel", sparse_squares, RELATION_LE, full_squares),
        _step("odd-basel-upper-bound", full_squares, RELATION_LE, squares_bound),
        _step("odd-bound-below-two", squares_bound, RELATION_LT, _TWO),
    )

    if parts.total != parts.even_part + parts.odd_part:
        raise InvariantViolation("certificate-total", f"total {parts.total} is not the branch sum")
    if rat_cmp(parts.total, _FOUR) >= 0:
        raise InvariantViolation("certificate-total", f"total {parts.total} is not below 4")

    return BoundCertificate(
        cutoff=cutoff,
        even_steps=even_steps,
        odd_steps=odd_steps,
        total=parts.total,
        bound=_FOUR,
    )


@dataclass(frozen=True)
class SeriesReport:
    """Partial sums at each requested cutoff, certified monotone and < 4."""

    entries: tuple[PartialSum, ...]
    bound: Fraction

    @property
    def pairs(self) -> list[tuple[int, Fraction]]:
        return [(entry.cutoff, entry.total) for entry in self.entries]


def monotone_bounded_report(cutoffs: list[int], strategy: str = "auto") -> SeriesReport:
    """Evaluate the partial sum at each cutoff; demand nondecreasing totals < 4.

    A monotonicity or bound violation is impossible for genuine perfect
    numbers and therefore raises as a bug instead of appearing in the report.
    """
    cutoffs = list(cutoffs)
    if not cutoffs:
        raise DomainError("report-cutoffs-empty", "at least one cutoff is required")
    for a, b in zip(cutoffs, cutoffs[1:]):
        if a >= b:
            raise DomainError("report-cutoffs-order", f"cutoffs must be strictly ascending, got {a} before {b}")
    entries = tuple(perfect_reciprocal_sum(c, strategy) for c in cutoffs)
    previous = Fraction(0)
    for entry in entries:
        if entry.total < previous:
            raise InvariantViolation(
                "series-monotonicity",
                f"total dropped from {previous} to {entry.total} at cutoff {entry.cutoff}",
            )
        if rat_cmp(entry.total, _FOUR) >= 0:
            raise InvariantViolation("series-bound", f"total {entry.total} at cutoff {entry.cutoff} reached 4")
        previous = entry.total
    return SeriesReport(entries=entries, bound=_FOUR)
