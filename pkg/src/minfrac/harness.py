"""Batch invariant sweeps over ranges of moduli.

Each check packages one theorem as an exhaustive scan over every residue of
every modulus in a range and reduces the outcome to a VerificationReport:
pass/fail counts plus replayable counterexamples.  A failure is a falsified
invariant.  Anomalies (currently only unusually long traces) are flagged for
inspection but never fail a report, because termination carries no stated
step bound.

Sweeps are embarrassingly parallel over moduli; with parallelism > 1 the
moduli are striped across a process pool and the partial results merged into
a canonical order, so a report is deterministic for a given config no matter
how the work was split.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .descent import descent_steps, run_descent
from .errors import InvariantError
from .minimality import is_minimal_pair, minimum_fraction, sqrt_bound_witness
from .oracle import brute_minimum, brute_pair_minimal
from .residues import FractionPair, Residue, ResidueClass, residue_fraction

CHECK_NAMES = ("determinant", "minimality", "sqrt_bound", "progress", "agreement")

DEFAULT_TRACE_CAP_FACTOR = 10

# Reports keep at most this many anomalies; the full count is always kept.
ANOMALY_SAMPLE_CAP = 50


@dataclass(frozen=True)
class SweepConfig:
    """One sweep request: modulus range, which checks, and how to run them."""

    m_min: int
    m_max: int
    checks: tuple[str, ...] = CHECK_NAMES
    parallelism: int = 1
    seed: int = 0
    ceiling: int | None = None
    trace_cap_factor: int = DEFAULT_TRACE_CAP_FACTOR
    random_pairs_per_m: int = 0

    def __post_init__(self) -> None:
        if self.m_min < 2:
            raise ValueError(f"m_min must be >= 2, got {self.m_min}")
        if self.m_max < self.m_min:
            raise ValueError(f"empty modulus range [{self.m_min}, {self.m_max}]")
        unknown = sorted(set(self.checks) - set(CHECK_NAMES))
        if unknown:
            raise ValueError(f"unknown checks {unknown}; known: {list(CHECK_NAMES)}")
        if self.parallelism < 1:
            raise ValueError(f"parallelism must be >= 1, got {self.parallelism}")
        if self.random_pairs_per_m < 0:
            raise ValueError("random_pairs_per_m must be >= 0")
        requested = set(self.checks)
        object.__setattr__(self, "checks", tuple(c for c in CHECK_NAMES if c in requested))


@dataclass(frozen=True)
class Counterexample:
    """A falsifying instance, with a CLI command that replays it."""

    m: int
    x: int
    detail: str
    replay: str


@dataclass(frozen=True)
class Anomaly:
    """Something worth inspecting that is not a falsified invariant."""

    m: int
    x: int
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check over one sweep."""

    check: str
    passes: int
    failures: int
    counterexamples: tuple[Counterexample, ...]
    anomaly_count: int = 0
    anomalies: tuple[Anomaly, ...] = ()
    duration: float = 0.0

    def __post_init__(self) -> None:
        if self.failures != len(self.counterexamples):
            raise InvariantError(
                f"report lists {len(self.counterexamples)} counterexamples "
                f"but claims {self.failures} failures"
            )

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        """Machine-readable form.

        Wall-clock duration is deliberately omitted so identical inputs
        always serialize identically.
        """
        return {
            "check": self.check,
            "pass": self.passes,
            "fail": self.failures,
            "counterexamples": [
                {"m": c.m, "x": c.x, "detail": c.detail, "replay": c.replay}
                for c in self.counterexamples
            ],
            "anomaly_count": self.anomaly_count,
            "anomalies": [{"m": a.m, "x": a.x, "detail": a.detail} for a in self.anomalies],
        }

    def summary(self) -> str:
        line = f"{self.check}: pass={self.passes} fail={self.failures}"
        if self.anomaly_count:
            line += f" anomalies={self.anomaly_count}"
        return line + f" ({self.duration:.2f}s)"


def _replay(m: int, x: int) -> str:
    return f"minfrac trace --modulus {m} --x {x}"


def _determinant_m(m: int) -> tuple[int, list[Counterexample], list[Anomaly]]:
    passes = 0
    bad: list[Counterexample] = []
    for x in range(m):
        for nn, nd, pn, pd, _ in descent_steps(x, m):
            det = pn * nd - nn * pd
            if det == m:
                passes += 1
            else:
                bad.append(
                    Counterexample(
                        m, x, f"pair ({nn}/{nd}, {pn}/{pd}) has determinant {det}, expected {m}",
                        _replay(m, x),
                    )
                )
    return passes, bad, []


def _sqrt_bound_m(m: int) -> tuple[int, list[Counterexample], list[Anomaly]]:
    passes = 0
    bad: list[Counterexample] = []
    for x in range(m):
        r = Residue(x, m)
        try:
            sqrt_bound_witness(r)
            passes += 1
        except InvariantError:
            trace = ", ".join(str(p) for p in run_descent(r).pairs)
            bad.append(
                Counterexample(
                    m, x, f"no representation with n^2 <= {m} and d^2 <= {m}; trace: {trace}",
                    _replay(m, x),
                )
            )
    return passes, bad, []


def _minimality_m(m: int, ceiling: int | None) -> tuple[int, list[Counterexample], list[Anomaly]]:
    passes = 0
    bad: list[Counterexample] = []
    for x in range(m):
        r = Residue(x, m)
        for p in run_descent(r).pairs:
            if brute_pair_minimal(p, r, ceiling=ceiling):
                passes += 1
            else:
                bad.append(Counterexample(m, x, f"trace pair {p} is not pair-minimal", _replay(m, x)))
    return passes, bad, []


def _progress_m(m: int, cap_factor: int) -> tuple[int, list[Counterexample], list[Anomaly]]:
    cap = cap_factor * m.bit_length()
    passes = 0
    bad: list[Counterexample] = []
    anomalies: list[Anomaly] = []
    for x in range(m):
        npairs = 0
        prev_sum = prev_max = 0
        for nn, nd, pn, pd, rep in descent_steps(x, m):
            mag_sum = pn - nn
            npairs += 1
            if rep is not None:
                new_mag = -nn if rep is ResidueClass.NEGATIVE else pn
                if mag_sum < prev_sum and new_mag < prev_max:
                    passes += 1
                else:
                    bad.append(
                        Counterexample(
                            m, x,
                            f"step {npairs - 1}: magnitude sum {prev_sum} -> {mag_sum}, "
                            f"replaced side {new_mag} vs previous max {prev_max}",
                            _replay(m, x),
                        )
                    )
            prev_sum = mag_sum
            prev_max = pn if pn > -nn else -nn
        if npairs > cap:
            anomalies.append(
                Anomaly(m, x, f"{npairs} pairs exceeds cap {cap} ({cap_factor} * bit_length)")
            )
    return passes, bad, anomalies


def _agreement_m(
    m: int, seed: int, random_pairs: int, ceiling: int | None
) -> tuple[int, list[Counterexample], list[Anomaly]]:
    passes = 0
    bad: list[Counterexample] = []

    def compare_pair(p: FractionPair, r: Residue) -> None:
        nonlocal passes
        fast = bool(is_minimal_pair(p, r))
        slow = brute_pair_minimal(p, r, ceiling=ceiling)
        if fast == slow:
            passes += 1
        else:
            bad.append(
                Counterexample(
                    r.m, r.x,
                    f"is_minimal_pair says {fast} but the exhaustive scan says {slow} for {p}",
                    _replay(r.m, r.x),
                )
            )

    for x in range(m):
        r = Residue(x, m)
        fast_min = minimum_fraction(r)
        slow_min = brute_minimum(r, ceiling=ceiling)
        if fast_min == slow_min:
            passes += 1
        else:
            bad.append(
                Counterexample(
                    m, x, f"trace minimum {fast_min} != enumerated minimum {slow_min}",
                    f"minfrac repr --modulus {m} --x {x}",
                )
            )
        for p in run_descent(r).pairs:
            compare_pair(p, r)
    if random_pairs:
        # Seeded per modulus so the sample is independent of chunking.
        rng = random.Random(f"{seed}:{m}")
        for _ in range(random_pairs):
            r = Residue(rng.randrange(m), m)
            p = FractionPair(
                neg=residue_fraction(r, rng.randrange(0, m), ResidueClass.NEGATIVE),
                pos=residue_fraction(r, rng.randrange(1, m + 1), ResidueClass.POSITIVE),
            )
            compare_pair(p, r)
    return passes, bad, []


def _chunk_worker(task: tuple) -> tuple[int, list[Counterexample], list[Anomaly]]:
    check, ms, cap_factor, seed, random_pairs, ceiling = task
    passes = 0
    bad: list[Counterexample] = []
    anomalies: list[Anomaly] = []
    for m in ms:
        if check == "determinant":
            part = _determinant_m(m)
        elif check == "minimality":
            part = _minimality_m(m, ceiling)
        elif check == "sqrt_bound":
            part = _sqrt_bound_m(m)
        elif check == "progress":
            part = _progress_m(m, cap_factor)
        else:
            part = _agreement_m(m, seed, random_pairs, ceiling)
        passes += part[0]
        bad.extend(part[1])
        anomalies.extend(part[2])
    return passes, bad, anomalies


def _run_one_check(check: str, cfg: SweepConfig) -> VerificationReport:
    start = time.perf_counter()
    ms = tuple(range(cfg.m_min, cfg.m_max + 1))
    tasks = [
        (check, ms[i :: cfg.parallelism], cfg.trace_cap_factor, cfg.seed,
         cfg.random_pairs_per_m, cfg.ceiling)
        for i in range(cfg.parallelism)
        if ms[i :: cfg.parallelism]
    ]
    if len(tasks) == 1:
        parts = [_chunk_worker(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            parts = list(pool.map(_chunk_worker, tasks))
    passes = sum(p for p, _, _ in parts)
    bad = sorted((c for _, cs, _ in parts for c in cs), key=lambda c: (c.m, c.x, c.detail))
    anomalies = sorted((a for _, _, an in parts for a in an), key=lambda a: (a.m, a.x, a.detail))
    return VerificationReport(
        check=check,
        passes=passes,
        failures=len(bad),
        counterexamples=tuple(bad),
        anomaly_count=len(anomalies),
        anomalies=tuple(anomalies[:ANOMALY_SAMPLE_CAP]),
        duration=time.perf_counter() - start,
    )


def run_checks(config: SweepConfig) -> tuple[VerificationReport, ...]:
    """Run every requested check over the configured range, in canonical order."""
    return tuple(_run_one_check(check, config) for check in config.checks)


def check_determinant(m_range: tuple[int, int], parallelism: int = 1) -> VerificationReport:
    """Every trace pair of every residue has determinant M."""
    cfg = SweepConfig(m_range[0], m_range[1], checks=("determinant",), parallelism=parallelism)
    return run_checks(cfg)[0]


def check_sqrt_bound(m_range: tuple[int, int], parallelism: int = 1) -> VerificationReport:
    """Every residue has a representation with n^2 <= M and d^2 <= M."""
    cfg = SweepConfig(m_range[0], m_range[1], checks=("sqrt_bound",), parallelism=parallelism)
    return run_checks(cfg)[0]


def check_minimality(
    m_range: tuple[int, int], parallelism: int = 1, ceiling: int | None = None
) -> VerificationReport:
    """Every trace pair passes the exhaustive pair-minimality scan."""
    cfg = SweepConfig(
        m_range[0], m_range[1], checks=("minimality",), parallelism=parallelism, ceiling=ceiling
    )
    return run_checks(cfg)[0]


def check_progress(
    m_range: tuple[int, int],
    parallelism: int = 1,
    trace_cap_factor: int = DEFAULT_TRACE_CAP_FACTOR,
) -> VerificationReport:
    """Magnitude sums strictly decrease at every step; long traces get flagged."""
    cfg = SweepConfig(
        m_range[0], m_range[1], checks=("progress",),
        parallelism=parallelism, trace_cap_factor=trace_cap_factor,
    )
    return run_checks(cfg)[0]


def check_agreement(
    m_range: tuple[int, int],
    parallelism: int = 1,
    seed: int = 0,
    random_pairs_per_m: int = 0,
    ceiling: int | None = None,
) -> VerificationReport:
    """The fast paths agree with the brute-force oracle.

    Compares minimum_fraction against brute_minimum for every residue, and
    is_minimal_pair against brute_pair_minimal on every trace pair plus an
    optional seeded sample of random pairs per modulus.
    """
    cfg = SweepConfig(
        m_range[0], m_range[1], checks=("agreement",), parallelism=parallelism,
        seed=seed, random_pairs_per_m=random_pairs_per_m, ceiling=ceiling,
    )
    return run_checks(cfg)[0]
