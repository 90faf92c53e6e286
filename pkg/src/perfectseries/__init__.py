"""Exact perfect-number toolkit.

Divisor sums, Mersenne/Lucas-Lehmer primality, structural decompositions
of perfect numbers, and machine-checked exact-rational certificates that
partial sums of reciprocals of perfect numbers stay below 4.
"""

from .certificate import (
    CERTIFICATE_VERSION,
    certificate_doc,
    certificate_from_doc,
    fraction_str,
    parse_fraction,
    validate_certificate_doc,
)
from .errors import DomainError, InvariantViolation
from .exact import gcd, pow_nat, rat_add, rat_cmp, rat_div, rat_mul, rat_sub, rational
from .primes import (
    OddSplit,
    is_prime,
    lucas_lehmer,
    odd_split,
    prime_power_factors,
    primes_up_to,
)
from .series import (
    BoundCertificate,
    CertStep,
    HornfeckLedger,
    PartialSum,
    SeriesReport,
    basel_partial,
    certify_bound,
    geometric_partial,
    monotone_bounded_report,
    perfect_reciprocal_sum,
)
from .sigma import (
    MEMORY_CAP_ENV,
    SigmaTable,
    divisors,
    is_perfect,
    perfect_up_to,
    sigma_fast,
    sigma_naive,
    sigma_sieve,
)
from .structure import (
    EvenPerfectForm,
    OddDecomposition,
    euclid_perfect,
    euler_decompose_even,
    euler_decompose_odd,
    find_odd_exponent_pair,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "CERTIFICATE_VERSION",
    "CertStep",
    "DomainError",
    "EvenPerfectForm",
    "HornfeckLedger",
    "InvariantViolation",
    "MEMORY_CAP_ENV",
    "OddDecomposition",
    "OddSplit",
    "PartialSum",
    "SeriesReport",
    "SigmaTable",
    "basel_partial",
    "certificate_doc",
    "certificate_from_doc",
    "certify_bound",
    "divisors",
    "euclid_perfect",
    "euler_decompose_even",
    "euler_decompose_odd",
    "find_odd_exponent_pair",
    "fraction_str",
    "gcd",
    "geometric_partial",
    "is_perfect",
    "is_prime",
    "lucas_lehmer",
    "monotone_bounded_report",
    "odd_split",
    "parse_fraction",
    "perfect_reciprocal_sum",
    "perfect_up_to",
    "pow_nat",
    "prime_power_factors",
    "primes_up_to",
    "rat_add",
    "rat_cmp",
    "rat_div",
    "rat_mul",
    "rat_sub",
    "rational",
    "sigma_fast",
    "sigma_naive",
    "sigma_sieve",
]
