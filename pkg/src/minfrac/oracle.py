"""Brute-force ground truth for cross-checking the algorithmic modules.

Everything here recomputes residues from first principles (multiply, mod,
shift) and evaluates definitions by exhaustive iteration.  The duplication
with the residues/minimality modules is deliberate: this module has to stay
an independent witness, so it shares data types with them but no arithmetic
helpers.

Brute-force work is gated behind ceilings so a typo'd modulus cannot start
an hours-long run by accident; exceeding a ceiling raises CeilingExceeded
rather than silently proceeding.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import CeilingExceeded
from .residues import Fraction, FractionPair, Residue, ResidueClass

DEFAULT_ENUMERATION_CEILING = 10**6
DEFAULT_PAIR_CHECK_CEILING = 10**4

# Environment override for the default ceilings (both gates); explicit
# `ceiling=` arguments still win over it.
CEILING_ENV_VAR = "MINFRAC_CEILING"


def _resolve_ceiling(explicit: int | None, default: int) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(CEILING_ENV_VAR)
    if env is not None:
        return int(env, 0)
    return default


def _check_ceiling(m: int, explicit: int | None, default: int, what: str) -> None:
    ceiling = _resolve_ceiling(explicit, default)
    if m > ceiling:
        raise CeilingExceeded(m, ceiling, what)


def enumerate_class(r: Residue, cls: ResidueClass, ceiling: int | None = None) -> list[Fraction]:
    """Every class-c representation of r, one per denominator, in denominator order.

    Positive class: denominators 1..M; negative class: 0..M-1.  Either way
    the list has exactly M entries.
    """
    _check_ceiling(r.m, ceiling, DEFAULT_ENUMERATION_CEILING, "class enumeration")
    x, m = r.x, r.m
    if cls is ResidueClass.POSITIVE:
        return [Fraction((x * d) % m, d) for d in range(1, m + 1)]
    return [Fraction((x * d) % m - m, d) for d in range(0, m)]


@dataclass(frozen=True)
class RepresentationTable:
    """Both full enumeration lists for one residue."""

    x: Residue
    pos: tuple[Fraction, ...]
    neg: tuple[Fraction, ...]


def representation_table(r: Residue, ceiling: int | None = None) -> RepresentationTable:
    return RepresentationTable(
        x=r,
        pos=tuple(enumerate_class(r, ResidueClass.POSITIVE, ceiling)),
        neg=tuple(enumerate_class(r, ResidueClass.NEGATIVE, ceiling)),
    )


def brute_minimum(r: Residue, ceiling: int | None = None) -> Fraction:
    """Criterion-minimal representation found by scanning every denominator.

    Applies the same order as minimality.criterion_key -- smallest maximum
    coefficient, then smaller denominator, then positive class -- but spelled
    out locally so this path shares no code with the module it checks.
    """
    _check_ceiling(r.m, ceiling, DEFAULT_ENUMERATION_CEILING, "minimum enumeration")
    x, m = r.x, r.m
    best_n = best_d = best_max = None
    for d in range(1, m + 1):
        rp = (x * d) % m
        for n in (rp, rp - m) if d < m else (rp,):
            maxc = max(n if n >= 0 else -n, d)
            if (
                best_max is None
                or maxc < best_max
                or (maxc == best_max and d < best_d)
                or (maxc == best_max and d == best_d and n >= 0 > best_n)
            ):
                best_n, best_d, best_max = n, d, maxc
    return Fraction(best_n, best_d)


def brute_pair_minimal(p: FractionPair, r: Residue, ceiling: int | None = None) -> bool:
    """Evaluate the pair-minimality definition literally, over every denominator.

    For each d, if the residue magnitude in either class is below the sum of
    the pair's numerator magnitudes, d must be >= the pair's denominator of
    that class.
    """
    _check_ceiling(r.m, ceiling, DEFAULT_PAIR_CHECK_CEILING, "pair-minimality check")
    x, m = r.x, r.m
    threshold = -p.neg.n + p.pos.n
    neg_d, pos_d = p.neg.d, p.pos.d
    # The implication can only fail when d is below a pair denominator, so
    # test that first; past both denominators each iteration is two integer
    # comparisons.  Same truth value as evaluating the residue side first.
    for d in range(0, m + 1):
        if d < pos_d and 1 <= d and (x * d) % m < threshold:
            return False
        if d < neg_d and m - (x * d) % m < threshold:
            return False
    return True
