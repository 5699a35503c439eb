"""The three minimality notions and the sqrt(M) bound witness.

Per-class minimality: no smaller denominator in the same residue class gives
a numerator of smaller magnitude.  Pair minimality generalizes this to a
(negative, positive) pair via a sum-of-magnitudes threshold and is the
invariant the descent preserves.  The global minimum fraction is the
representation with the smallest maximum coefficient, ties broken by the
smaller denominator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .descent import descent_steps
from .errors import InvariantError
from .residues import (
    Fraction,
    FractionPair,
    Residue,
    ResidueClass,
    neg_residue,
    pos_residue,
    represents,
)


@dataclass(frozen=True)
class MinimalityVerdict:
    """Outcome of a minimality check; carries a violating denominator on failure."""

    holds: bool
    witness_d: int | None = None

    def __bool__(self) -> bool:
        return self.holds


def criterion_key(f: Fraction) -> tuple[int, int, int]:
    """Total order for picking the minimum fraction.

    Smallest maximum coefficient first, then smaller denominator; a residual
    tie (same |n| and d in both classes, possible when 2x = 0 mod M) prefers
    the positive-class fraction.
    """
    return (max(abs(f.n), f.d), f.d, 0 if f.n >= 0 else 1)


def is_minimal_in_class(f: Fraction, r: Residue) -> MinimalityVerdict:
    """Check that no smaller same-class denominator beats |f.n|.

    Denominators are scanned in increasing order, so a failing verdict
    carries the smallest violating denominator.
    """
    if not represents(r, f):
        raise ValueError(f"{f} does not represent {r}")
    if f.residue_class is ResidueClass.POSITIVE:
        lo, residue_of = 1, pos_residue
        if not lo <= f.d <= r.m:
            raise ValueError(f"denominator {f.d} out of positive-class range [1, {r.m}]")
    else:
        lo, residue_of = 0, neg_residue
        if not lo <= f.d <= r.m - 1:
            raise ValueError(f"denominator {f.d} out of negative-class range [0, {r.m - 1}]")
    bound = abs(f.n)
    for d in range(lo, f.d):
        if abs(residue_of(r, d)) < bound:
            return MinimalityVerdict(False, d)
    return MinimalityVerdict(True)


def is_minimal_pair(p: FractionPair, r: Residue) -> MinimalityVerdict:
    """Check the generalized pair-minimality condition.

    The pair is minimal iff any denominator whose residue magnitude (in
    either class) drops below |neg.n| + |pos.n| is at least as large as the
    pair's denominator of the matching class.  Denominators at or above the
    matching-class denominator satisfy the condition trivially, so only the
    smaller ones are scanned: the negative side first, then the positive
    side, each in increasing order.
    """
    for f in (p.neg, p.pos):
        if not represents(r, f):
            raise ValueError(f"{f} does not represent {r}")
    threshold = -p.neg.n + p.pos.n  # |neg.n| + |pos.n|
    for d in range(0, p.neg.d):
        if -neg_residue(r, d) < threshold:
            return MinimalityVerdict(False, d)
    for d in range(1, p.pos.d):
        if pos_residue(r, d) < threshold:
            return MinimalityVerdict(False, d)
    return MinimalityVerdict(True)


def minimum_fraction(r: Residue) -> Fraction:
    """The criterion-minimal representation of r, excluding denominator 0.

    Found by scanning the descent trace, which visits every per-class
    minimal fraction; the global minimum is always among them (checked
    against exhaustive enumeration by the oracle test sweep).
    """
    best: tuple[tuple[int, int, int], int, int] | None = None
    for nn, nd, pn, pd, _ in descent_steps(r.x, r.m):
        for n, d in ((nn, nd), (pn, pd)):
            if d >= 1:
                key = (max(-n if n < 0 else n, d), d, 0 if n >= 0 else 1)
                if best is None or key < best[0]:
                    best = (key, n, d)
    assert best is not None  # trace always contains x/1
    return Fraction(best[1], best[2])


def sqrt_bound_witness(r: Residue) -> Fraction:
    """A representation of r with |n| <= sqrt(M) and d <= sqrt(M).

    The first qualifying fraction in trace order is returned; comparisons
    square the coefficients instead of taking square roots, so everything
    stays in exact integers.  Every residue has such a representation; if
    the scan ever comes up empty that falsifies the bound and is raised as
    an InvariantError.
    """
    m = r.m
    for nn, nd, pn, pd, _ in descent_steps(r.x, r.m):
        if nn * nn <= m and nd * nd <= m:
            return Fraction(nn, nd)
        if pn * pn <= m and pd * pd <= m:
            return Fraction(pn, pd)
    raise InvariantError(
        f"no sqrt-bounded representation found for {r}; "
        f"this falsifies the existence bound and should be reported"
    )
