"""Command-line surface: exact number-theory queries with auditable output.

Human-readable text is the default; ``--json`` switches to a single
structured envelope per invocation.  Every integer and rational in
structured output is a decimal string ("num/den" for rationals) so no
value is ever squeezed through a float.  Exit codes: 0 success, 1 usage
error, 2 domain error (with the originating error code in the envelope).
"""

from __future__ import annotations

import argparse
import json
import sys

from .certificate import certificate_doc, fraction_str
from .errors import DomainError
from .primes import lucas_lehmer, prime_power_factors
from .series import certify_bound, perfect_reciprocal_sum
from .sigma import is_perfect, perfect_up_to, sigma_fast
from .structure import euler_decompose_even, euler_decompose_odd

_PROG = "perfectseries"


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1 (argparse defaults to 2, which we reserve
    # for domain errors)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected a nonnegative decimal integer, got {text!r}")
    return int(text)


def _cutoff_list(text: str) -> list[int]:
    try:
        return [_natural(part) for part in text.split(",") if part != ""]
    except argparse.ArgumentTypeError:
        raise argparse.ArgumentTypeError(f"expected comma-separated nonnegative integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=_PROG, description="Exact perfect-number toolkit: sigma, factorization, structure, series bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit one structured JSON envelope")
        return p

    p = add("sigma", "divisor sum of n")
    p.add_argument("n", type=_natural)

    p = add("factor", "prime-power factorization of n")
    p.add_argument("n", type=_natural)

    p = add("perfect-scan", "all perfect numbers up to a limit")
    p.add_argument("limit_pos", type=_natural, nargs="?", metavar="limit")
    p.add_argument("--limit", type=_natural, dest="limit_flag")
    p.add_argument("--strategy", choices=("auto", "sieve", "mersenne", "checked"), default="auto")

    p = add("decompose", "structural decomposition (even: Mersenne form; odd: p^i*m^2)")
    p.add_argument("n", type=_natural)

    p = add("mersenne", "Lucas-Lehmer sweep over exponents 2..max_k")
    p.add_argument("max_k_pos", type=_natural, nargs="?", metavar="max_k")
    p.add_argument("--max-k", type=_natural, dest="max_k_flag")

    p = add("series", "exact partial sum of reciprocals of perfect numbers")
    p.add_argument("cutoff", type=_natural)
    p.add_argument("--certify", action="store_true", help="attach the bound certificate (total < 4)")

    p = add("report", "write delimited series data plus figures to a directory")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument(
        "--cutoffs",
        type=_cutoff_list,
        default=[10, 100, 1000, 10000, 100000, 1000000],
        help="comma-separated ascending cutoffs (default 10..10^6 by decades)",
    )

    return parser


class _UsageError(Exception):
    pass


def _one_of(parser_value, flag_value, what: str):
    if (parser_value is None) == (flag_value is None):
        raise _UsageError(f"exactly one of positional or named {what} is required")
    return parser_value if parser_value is not None else flag_value


def render_json(doc: dict) -> str:
    """Canonical serialization: stable key order, fixed layout, one trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _run_sigma(args):
    n = args.n
    value = sigma_fast(n)
    perfect = is_perfect(n)
    echo = {"n": str(n)}
    payload = {"n": str(n), "sigma": str(value), "perfect": perfect}
    lines = [f"sigma({n}) = {value}"]
    lines.append(f"{n} is {'perfect' if perfect else 'not perfect'} (sigma {'=' if perfect else '!='} 2n)")
    return echo, payload, lines


def _run_factor(args):
    n = args.n
    pairs = prime_power_factors(n)
    echo = {"n": str(n)}
    payload = {
        "n": str(n),
        "factors": [{"prime": str(p), "exponent": str(e)} for p, e in pairs],
    }
    if pairs:
        rendered = " * ".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in pairs)
    else:
        rendered = "1 (empty product)"
    return echo, payload, [f"{n} = {rendered}"]


def _run_perfect_scan(args):
    limit = _one_of(args.limit_pos, args.limit_flag, "limit")
    values = perfect_up_to(limit, args.strategy)
    echo = {"limit": str(limit), "strategy": args.strategy}
    payload = {"limit": str(limit), "count": str(len(values)), "perfect": [str(v) for v in values]}
    lines = [f"perfect numbers <= {limit}: {len(values)} found"]
    lines.extend(str(v) for v in values)
    return echo, payload, lines


def _run_decompose(args):
    n = args.n
    echo = {"n": str(n)}
    if n % 2 == 0:
        form = euler_decompose_even(n)
        payload = {
            "n": str(n),
            "kind": "even-perfect",
            "k": str(form.k),
            "mersenne": str(form.mersenne),
        }
        lines = [f"{n} = 2^{form.k - 1} * (2^{form.k} - 1), mersenne = {form.mersenne}"]
    else:
        decomposition = euler_decompose_odd(n)
        payload = {
            "n": str(n),
            "kind": "odd-prime-square",
            "p": str(decomposition.p),
            "i": str(decomposition.i),
            "m": str(decomposition.m),
        }
        lines = [f"{n} = {decomposition.p}^{decomposition.i} * {decomposition.m}^2"]
    return echo, payload, lines


def _run_mersenne(args):
    max_k = _one_of(args.max_k_pos, args.max_k_flag, "max_k")
    entries = [(k, (1 << k) - 1, lucas_lehmer(k)) for k in range(2, max_k + 1)]
    echo = {"max_k": str(max_k)}
    payload = {
        "max_k": str(max_k),
        "entries": [
            {"k": str(k), "mersenne": str(m), "prime": prime} for k, m, prime in entries
        ],
        "prime_exponents": [str(k) for k, _, prime in entries if prime],
    }
    lines = [f"2^{k} - 1 = {m}: {'prime' if prime else 'composite'}" for k, m, prime in entries]
    if not entries:
        lines = [f"no exponents in 2..{max_k}"]
    return echo, payload, lines


def _run_series(args):
    cutoff = args.cutoff
    parts = perfect_reciprocal_sum(cutoff)
    echo = {"cutoff": str(cutoff), "certify": args.certify}
    payload = {
        "cutoff": str(cutoff),
        "total": fraction_str(parts.total),
        "even_part": fraction_str(parts.even_part),
        "odd_part": fraction_str(parts.odd_part),
        "terms": [{"n": str(n), "reciprocal": fraction_str(r)} for n, r in parts.terms],
    }
    lines = [
        f"sum of 1/n over perfect n <= {cutoff}: {fraction_str(parts.total)}",
        f"even branch: {fraction_str(parts.even_part)}",
        f"odd branch:  {fraction_str(parts.odd_part)}",
    ]
    if args.certify:
        doc = certificate_doc(certify_bound(cutoff))
        payload["certificate"] = doc
        lines.append("certificate steps:")
        for step in doc["steps"]:
            relation = "<=" if step["relation"] == "le" else "<"
            lines.append(f"  {step['label']}: {step['lhs']} {relation} {step['rhs']}")
    return echo, payload, lines


def _run_report(args):
    from .report import write_series_report  # defer: pulls in matplotlib

    paths = write_series_report(args.cutoffs, args.out)
    echo = {"out": args.out, "cutoffs": [str(c) for c in args.cutoffs]}
    payload = {"files": paths}
    lines = ["wrote:"] + [f"  {kind}: {path}" for kind, path in paths.items()]
    return echo, payload, lines


_HANDLERS = {
    "sigma": _run_sigma,
    "factor": _run_factor,
    "perfect-scan": _run_perfect_scan,
    "decompose": _run_decompose,
    "mersenne": _run_mersenne,
    "series": _run_series,
    "report": _run_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    handler = _HANDLERS[args.command]
    try:
        echo, payload, lines = handler(args)
    except _UsageError as err:
        sys.stderr.write(f"{_PROG} {args.command}: error: {err}\n")
        return 1
    except DomainError as err:
        envelope = {
            "command": args.command,
            "input": _echo_from_args(args),
            "exact": True,
            "error": {"code": err.code, "message": err.message},
        }
        if args.json:
            sys.stdout.write(render_json(envelope))
        else:
            sys.stderr.write(f"{_PROG} {args.command}: error[{err.code}]: {err.message}\n")
        return 2

    if args.json:
        envelope = {"command": args.command, "input": echo, "exact": True, "result": payload}
        sys.stdout.write(render_json(envelope))
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _echo_from_args(args) -> dict:
    echo = {}
    for key in ("n", "cutoff"):
        if getattr(args, key, None) is not None:
            echo[key] = str(getattr(args, key))
    if getattr(args, "limit_pos", None) is not None or getattr(args, "limit_flag", None) is not None:
        value = args.limit_pos if args.limit_pos is not None else args.limit_flag
        echo["limit"] = str(value)
    if getattr(args, "max_k_pos", None) is not None or getattr(args, "max_k_flag", None) is not None:
        value = args.max_k_pos if args.max_k_pos is not None else args.max_k_flag
        echo["max_k"] = str(value)
    if getattr(args, "certify", None):
        echo["certify"] = True
    if getattr(args, "out", None) is not None:
        echo["out"] = args.out
    if getattr(args, "cutoffs", None) is not None:
        echo["cutoffs"] = [str(c) for c in args.cutoffs]
    return echo


def run() -> None:
    raise SystemExit(main())
