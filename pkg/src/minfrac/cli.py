"""Command-line front end.

Subcommands:
    repr       minimum fraction and a sqrt(M)-bounded witness for one residue
    enumerate  full per-class representation lists
    trace      the descent pair sequence with determinants
    table      minimum fractions for x = 1..M-1
    verify     invariant sweeps over a modulus range

Exit codes are part of the contract: 0 success, 1 a sweep or cross-check
found a counterexample, 2 usage error, 3 internal invariant failure,
4 brute-force ceiling exceeded.

Integer arguments accept decimal or 0x-prefixed hex, so cryptographic-scale
moduli paste in directly.  JSON output for identical inputs is identical
across runs (no timestamps or durations).
"""

from __future__ import annotations

import argparse
import json
import sys

from .descent import run_descent
from .errors import CeilingExceeded, InvariantError
from .harness import CHECK_NAMES, SweepConfig, run_checks
from .minimality import minimum_fraction, sqrt_bound_witness
from .oracle import brute_minimum, enumerate_class
from .residues import Fraction, Residue, ResidueClass, check_modulus, represents

_EXIT_CODES = """\
exit codes:
  0  success
  1  counterexample found (verify, table --cross-check)
  2  usage error
  3  internal invariant failure
  4  brute-force ceiling exceeded (see --ceiling-override / MINFRAC_CEILING)
"""


def _int_arg(text: str) -> int:
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def render_fraction(f: Fraction, bare_units: bool = False) -> str:
    """Fraction as text; with bare_units, d = 1 prints as a plain integer."""
    if bare_units and f.d == 1:
        return str(f.n)
    return f"{f.n}/{f.d}"


def _frac_dict(f: Fraction) -> dict:
    return {"n": f.n, "d": f.d}


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _reduce_x(x: int, m: int) -> int:
    check_modulus(m)
    if 0 <= x < m:
        return x
    reduced = x % m
    print(f"note: x = {x} reduced to {reduced} (mod {m})", file=sys.stderr)
    return reduced


def _cmd_repr(args: argparse.Namespace) -> int:
    m = args.modulus
    r = Residue(_reduce_x(args.x, m), m)
    minimum = minimum_fraction(r)
    witness = sqrt_bound_witness(r)
    if args.format == "json":
        _emit({"modulus": m, "x": r.x, "fractions": [_frac_dict(minimum), _frac_dict(witness)]})
    else:
        print(render_fraction(minimum, bare_units=True))
        print(f"witness: {render_fraction(witness, bare_units=True)}")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    m = args.modulus
    r = Residue(_reduce_x(args.x, m), m)
    ceiling = args.ceiling_override
    if args.residue_class == "both":
        pos = enumerate_class(r, ResidueClass.POSITIVE, ceiling)
        neg = enumerate_class(r, ResidueClass.NEGATIVE, ceiling)
        if args.format == "json":
            _emit({
                "modulus": m, "x": r.x, "class": "both",
                "positive": [_frac_dict(f) for f in pos],
                "negative": [_frac_dict(f) for f in neg],
            })
        else:
            print("positive: " + ", ".join(str(f) for f in pos))
            print("negative: " + ", ".join(str(f) for f in neg))
        return 0
    cls = ResidueClass(args.residue_class)
    fractions = enumerate_class(r, cls, ceiling)
    if args.format == "json":
        _emit({
            "modulus": m, "x": r.x, "class": cls.value,
            "fractions": [_frac_dict(f) for f in fractions],
        })
    else:
        print(", ".join(str(f) for f in fractions))
    return 0


def _cmd_trace(args: argparse.Namespace) -> int:
    m = args.modulus
    r = Residue(_reduce_x(args.x, m), m)
    trace = run_descent(r)
    if args.format == "json":
        _emit({
            "modulus": m,
            "x": r.x,
            "trace": [
                {
                    "neg": _frac_dict(p.neg),
                    "pos": _frac_dict(p.pos),
                    "det": p.determinant(),
                    "replaced": rep.value if rep is not None else None,
                }
                for p, rep in zip(trace.pairs, trace.replaced)
            ],
        })
    else:
        for p, rep in zip(trace.pairs, trace.replaced):
            suffix = "" if rep is None else f" replaced={rep.value}"
            print(f"{p} det={p.determinant()}{suffix}")
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    m = args.modulus
    check_modulus(m)
    entries = [minimum_fraction(Residue(x, m)) for x in range(1, m)]
    if args.cross_check:
        for x, f in enumerate(entries, start=1):
            r = Residue(x, m)
            if not represents(r, f):
                raise InvariantError(f"table entry {f} does not represent {x} mod {m}")
            expected = brute_minimum(r, ceiling=args.ceiling_override)
            if f != expected:
                print(
                    f"cross-check failed at x={x}: table has {f}, oracle says {expected}",
                    file=sys.stderr,
                )
                return 1
    if args.format == "json":
        _emit({"modulus": m, "fractions": [_frac_dict(f) for f in entries]})
    else:
        print(", ".join(render_fraction(f, bare_units=True) for f in entries))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.checks == "all":
        checks = CHECK_NAMES
    else:
        checks = tuple(name.strip() for name in args.checks.split(",") if name.strip())
    config = SweepConfig(
        m_min=args.m_min,
        m_max=args.m_max,
        checks=checks,
        parallelism=args.workers,
        seed=args.seed,
        ceiling=args.ceiling_override,
        random_pairs_per_m=args.random_pairs,
    )
    reports = run_checks(config)
    if args.format == "json":
        _emit({"report": [r.to_dict() for r in reports]})
    else:
        for r in reports:
            print(r.summary())
            for c in r.counterexamples:
                print(f"  counterexample m={c.m} x={c.x}: {c.detail} (replay: {c.replay})")
            for a in r.anomalies:
                print(f"  anomaly m={a.m} x={a.x}: {a.detail}")
            if r.anomaly_count > len(r.anomalies):
                print(f"  ... {r.anomaly_count - len(r.anomalies)} more anomalies")
    return 0 if all(r.ok for r in reports) else 1


def _add_common(p: argparse.ArgumentParser, x: bool = True) -> None:
    p.add_argument("--modulus", "-m", type=_int_arg, required=True, help="modulus M >= 2")
    if x:
        p.add_argument("--x", type=_int_arg, required=True,
                       help="residue; reduced mod M with a notice if out of range")
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minfrac",
        description="Minimal fractional representations of residues modulo M.",
        epilog=_EXIT_CODES,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("repr", help="minimum fraction and sqrt(M)-bounded witness for x")
    _add_common(p)
    p.set_defaults(func=_cmd_repr)

    p = sub.add_parser("enumerate", help="list every representation of x, per class")
    _add_common(p)
    p.add_argument("--class", dest="residue_class",
                   choices=("positive", "negative", "both"), default="both")
    p.add_argument("--ceiling-override", type=_int_arg, default=None,
                   help="raise/lower the enumeration ceiling for this run")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("trace", help="print the full descent pair sequence")
    _add_common(p)
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("table", help="minimum fractions for x = 1..M-1")
    _add_common(p, x=False)
    p.add_argument("--cross-check", action="store_true",
                   help="verify every entry against the brute-force oracle")
    p.add_argument("--ceiling-override", type=_int_arg, default=None)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run invariant sweeps over a modulus range")
    p.add_argument("--m-min", type=_int_arg, required=True)
    p.add_argument("--m-max", type=_int_arg, required=True)
    p.add_argument("--checks", default="all",
                   help=f"comma-separated subset of {', '.join(CHECK_NAMES)}; or 'all'")
    p.add_argument("--workers", type=_int_arg, default=1)
    p.add_argument("--seed", type=_int_arg, default=0)
    p.add_argument("--random-pairs", type=_int_arg, default=0,
                   help="extra random pairs per modulus for the agreement check")
    p.add_argument("--ceiling-override", type=_int_arg, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CeilingExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
