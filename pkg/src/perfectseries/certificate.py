"""Certificate export format and its independent validator.

A certificate document is a plain dict (JSON-shaped):

    {
      "version": "1",
      "cutoff": "<decimal digits>",
      "steps": [
        {"label": ..., "lhs": "num/den", "relation": "le" | "lt", "rhs": "num/den"},
        ...
      ],
      "conclusion": {"total": "num/den", "bound": "4/1"}
    }

All numbers are exact decimal strings; rationals are "num/den" in lowest
terms with a positive denominator, so documents round-trip byte for byte.
The validator below never reuses Fraction comparisons: it re-checks every
relation by integer cross-multiplication, parses with plain int(), and is
deliberately a separate route from the code that built the certificate.
"""

from __future__ import annotations

import re
import sys
from fractions import Fraction
from math import gcd

from .errors import DomainError, InvariantViolation
from .series import BoundCertificate, CertStep, RELATION_LE, RELATION_LT

CERTIFICATE_VERSION = "1"

# Exact certificates legitimately carry integers far beyond the interpreter's
# default int<->str conversion guard (the reduced inverse-square sum at index
# 10**4 already has ~8700 digits), so raise it once here.
_INT_STR_DIGITS = 2_000_000
if sys.get_int_max_str_digits() < _INT_STR_DIGITS:
    sys.set_int_max_str_digits(_INT_STR_DIGITS)

_FRACTION_RE = re.compile(r"(-?\d+)/(\d+)")
_NATURAL_RE = re.compile(r"\d+")

_CONCLUSION_LABEL = "total-below-four"


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Parse a canonical "num/den" string; reject anything non-canonical."""
    match = _FRACTION_RE.fullmatch(text)
    if not match:
        raise DomainError("fraction-format", f"expected 'num/den', got {text!r}")
    num, den = int(match.group(1)), int(match.group(2))
    if den == 0:
        raise DomainError("fraction-format", f"zero denominator in {text!r}")
    if gcd(abs(num), den) != 1:
        raise DomainError("fraction-format", f"{text!r} is not in lowest terms")
    return Fraction(num, den)


def parse_natural(text: str) -> int:
    if not _NATURAL_RE.fullmatch(text):
        raise DomainError("natural-format", f"expected decimal digits, got {text!r}")
    return int(text)


def certificate_doc(certificate: BoundCertificate) -> dict:
    """Flatten a certificate into its export document."""
    steps = [
        {
            "label": step.label,
            "lhs": fraction_str(step.lhs),
            "relation": step.relation,
            "rhs": fraction_str(step.rhs),
        }
        for step in certificate.even_steps + certificate.odd_steps
    ]
    steps.append(
        {
            "label": _CONCLUSION_LABEL,
            "lhs": fraction_str(certificate.total),
            "relation": RELATION_LT,
            "rhs": fraction_str(certificate.bound),
        }
    )
    return {
        "version": CERTIFICATE_VERSION,
        "cutoff": str(certificate.cutoff),
        "steps": steps,
        "conclusion": {
            "total": fraction_str(certificate.total),
            "bound": fraction_str(certificate.bound),
        },
    }


def certificate_from_doc(doc: dict) -> BoundCertificate:
    """Rebuild the in-memory certificate from an export document."""
    validate_certificate_doc(doc)
    steps = [
        CertStep(
            label=item["label"],
            lhs=parse_fraction(item["lhs"]),
            relation=item["relation"],
            rhs=parse_fraction(item["rhs"]),
        )
        for item in doc["steps"]
    ]
    return BoundCertificate(
        cutoff=parse_natural(doc["cutoff"]),
        even_steps=tuple(s for s in steps if s.label.startswith("even-")),
        odd_steps=tuple(s for s in steps if s.label.startswith("odd-")),
        total=parse_fraction(doc["conclusion"]["total"]),
        bound=parse_fraction(doc["conclusion"]["bound"]),
    )


def _parse_side(text: str, where: str) -> tuple[int, int]:
    match = _FRACTION_RE.fullmatch(text) if isinstance(text, str) else None
    if not match:
        raise DomainError("certificate-malformed", f"{where}: expected 'num/den', got {text!r}")
    num, den = int(match.group(1)), int(match.group(2))
    if den == 0:
        raise DomainError("certificate-malformed", f"{where}: zero denominator")
    if gcd(abs(num), den) != 1:
        raise DomainError("certificate-malformed", f"{where}: {text!r} is not in lowest terms")
    return num, den


def _cross(a: tuple[int, int], b: tuple[int, int]) -> int:
    """Sign of a - b by cross-multiplication, pure integer arithmetic."""
    diff = a[0] * b[1] - b[0] * a[1]
    return (diff > 0) - (diff < 0)


def validate_certificate_doc(doc: dict) -> int:
    """Re-check every relation in a certificate document; return the count.

    Malformed documents raise DomainError; a well-formed document containing
    a false relation (or a broken chain) raises InvariantViolation.
    """
    if not isinstance(doc, dict):
        raise DomainError("certificate-malformed", "certificate document must be a mapping")
    if doc.get("version") != CERTIFICATE_VERSION:
        raise DomainError("certificate-malformed", f"unsupported version {doc.get('version')!r}")
    if not isinstance(doc.get("cutoff"), str) or not _NATURAL_RE.fullmatch(doc["cutoff"]):
        raise DomainError("certificate-malformed", f"bad cutoff {doc.get('cutoff')!r}")
    steps = doc.get("steps")
    if not isinstance(steps, list) or not steps:
        raise DomainError("certificate-malformed", "steps must be a nonempty list")
    conclusion = doc.get("conclusion")
    if not isinstance(conclusion, dict):
        raise DomainError("certificate-malformed", "missing conclusion")

    total = _parse_side(conclusion.get("total"), "conclusion.total")
    bound = _parse_side(conclusion.get("bound"), "conclusion.bound")
    if bound != (4, 1):
        raise DomainError("certificate-malformed", f"conclusion bound must be 4/1, got {conclusion.get('bound')!r}")

    checked = 0
    chains: dict[str, list[tuple[str, tuple[int, int], str, tuple[int, int]]]] = {"even": [], "odd": []}
    final = None
    for index, item in enumerate(steps):
        if not isinstance(item, dict):
            raise DomainError("certificate-malformed", f"step {index} is not a mapping")
        label = item.get("label")
        relation = item.get("relation")
        if not isinstance(label, str):
            raise DomainError("certificate-malformed", f"step {index} has no label")
        if relation not in (RELATION_LE, RELATION_LT):
            raise DomainError("certificate-malformed", f"step {label}: relation must be 'le' or 'lt'")
        lhs = _parse_side(item.get("lhs"), f"step {label} lhs")
        rhs = _parse_side(item.get("rhs"), f"step {label} rhs")

        order = _cross(lhs, rhs)
        holds = order < 0 if relation == RELATION_LT else order <= 0
        if not holds:
            raise InvariantViolation(
                "certificate-refuted",
                f"step {label}: {item['lhs']} {relation} {item['rhs']} is false",
            )
        checked += 1

        if label == _CONCLUSION_LABEL:
            final = (lhs, relation, rhs)
        elif label.startswith("even-"):
            chains["even"].append((label, lhs, relation, rhs))
        elif label.startswith("odd-"):
            chains["odd"].append((label, lhs, relation, rhs))
        else:
            raise DomainError("certificate-malformed", f"step {label} belongs to no branch")

    if final is None:
        raise DomainError("certificate-malformed", f"missing final step {_CONCLUSION_LABEL!r}")
    if final[0] != total or final[2] != bound:
        raise InvariantViolation("certificate-refuted", "final step disagrees with the conclusion")

    branch_heads = {}
    for branch, chain in chains.items():
        if not chain:
            raise DomainError("certificate-malformed", f"{branch} branch has no steps")
        for (label_a, _, _, rhs_a), (label_b, lhs_b, _, _) in zip(chain, chain[1:]):
            if rhs_a != lhs_b:
                raise InvariantViolation(
                    "certificate-refuted",
                    f"chain break between {label_a} and {label_b}: {rhs_a} != {lhs_b}",
                )
        if all(relation == RELATION_LE for _, _, relation, _ in chain):
            raise InvariantViolation("certificate-refuted", f"{branch} branch never goes strict")
        tail = chain[-1]
        if tail[3] != (2, 1):
            raise InvariantViolation("certificate-refuted", f"{branch} branch does not end below 2")
        branch_heads[branch] = chain[0][1]

    # total must be exactly the sum of the two branch heads
    even_head, odd_head = branch_heads["even"], branch_heads["odd"]
    sum_num = even_head[0] * odd_head[1] + odd_head[0] * even_head[1]
    sum_den = even_head[1] * odd_head[1]
    if sum_num * total[1] != total[0] * sum_den:
        raise InvariantViolation("certificate-refuted", "conclusion total is not the sum of the branch sums")

    return checked
