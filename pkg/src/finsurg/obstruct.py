"""Obstruction scan over the dihedral family Y_n with |H_1| = 4m.

A manifold is obstructed when one of its d-invariants falls strictly
outside the interval every 4m-surgery on an L-space knot must respect.
Equality on the boundary does not obstruct.
"""
from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from .errors import InvalidArgumentError, SearchExhaustedError
from .nemethi import d_table
from .numtheory import render
from .surgery import Realization, d_bounds, dihedral_realizations


class Verdict(enum.Enum):
    OBSTRUCTED = "ObstructedByBounds"
    REALIZED = "RealizedByTorusKnot"
    NON_CYCLIC = "ExcludedNonCyclicH1"
    INVALID = "InvalidPresentation"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class ObstructionReport:
    m: int
    n: int
    verdict: Verdict
    d_min: Optional[Fraction] = None
    d_max: Optional[Fraction] = None
    witness_vector: Optional[tuple] = None
    witness_d: Optional[Fraction] = None
    bound_violated: Optional[str] = None
    realization: Optional[Realization] = None

    def as_row(self) -> Dict[str, str]:
        def opt(x):
            return "" if x is None else render(x)

        return {
            "m": str(self.m),
            "n": str(self.n),
            "verdict": self.verdict.value,
            "d_min": opt(self.d_min),
            "d_max": opt(self.d_max),
            "witness_vector": "" if self.witness_vector is None else " ".join(map(str, self.witness_vector)),
            "bound_violated": self.bound_violated or "",
            "realization": "" if self.realization is None else str(self.realization),
        }

    def as_json(self) -> dict:
        out = {"m": self.m, "n": self.n, "verdict": self.verdict.value}
        if self.d_min is not None:
            out["d_min"] = render(self.d_min)
            out["d_max"] = render(self.d_max)
        if self.witness_vector is not None:
            out["witness"] = {
                "vector": list(self.witness_vector),
                "d": render(self.witness_d),
                "bound": self.bound_violated,
            }
        if self.realization is not None:
            r = self.realization
            out["realization"] = {"knot": r.knot_name, "p": r.p, "q": r.q}
        return out


CSV_COLUMNS = ("m", "n", "verdict", "d_min", "d_max", "witness_vector", "bound_violated", "realization")


def evaluate(m: int, n: int) -> ObstructionReport:
    if m < 1:
        raise InvalidArgumentError(f"m must be positive, got {m}")
    if n == 0:
        return ObstructionReport(m, n, Verdict.INVALID)
    if n % 2 == 0:
        # H_1 = Z_2 + Z_2m is not cyclic, so Y_n is no knot surgery
        return ObstructionReport(m, n, Verdict.NON_CYCLIC)
    if gcd(m, abs(n)) != 1:
        return ObstructionReport(m, n, Verdict.INVALID)

    table = d_table(m, n)
    lower, upper = d_bounds(m)
    low_v, low_d = min(table.entries, key=lambda e: (e[1], e[0]))
    high_v, high_d = max(table.entries, key=lambda e: (e[1], tuple(-x for x in e[0])))
    summary = dict(d_min=low_d, d_max=high_d)
    if low_d < lower or high_d > upper:
        if low_d < lower:
            bound = "both" if high_d > upper else "lower"
            vec, d = low_v, low_d
        else:
            bound, vec, d = "upper", high_v, high_d
        return ObstructionReport(
            m, n, Verdict.OBSTRUCTED, witness_vector=vec, witness_d=d, bound_violated=bound, **summary
        )
    for record in dihedral_realizations(m, abs(n)):
        if record.target == n:
            return ObstructionReport(m, n, Verdict.REALIZED, realization=record, **summary)
    return ObstructionReport(m, n, Verdict.UNDETERMINED, **summary)


def _is_valid_odd(m: int, n: int) -> bool:
    return n % 2 == 1 and gcd(m, abs(n)) == 1


@dataclass
class ScanSummary:
    m: int
    n_lo: int
    n_hi: int
    counts: Dict[str, int] = field(default_factory=dict)
    realized: List[int] = field(default_factory=list)
    undetermined: List[int] = field(default_factory=list)
    threshold: int = 0

    @property
    def claimed_threshold(self) -> int:
        return 16 * self.m

    @property
    def within_claim(self) -> bool:
        """True when the empirical threshold does not exceed 16m."""
        return self.threshold <= self.claimed_threshold

    def as_json(self) -> dict:
        return {
            "m": self.m,
            "range": [self.n_lo, self.n_hi],
            "counts": dict(self.counts),
            "realized": list(self.realized),
            "undetermined": list(self.undetermined),
            "threshold": self.threshold,
            "claimed_threshold": self.claimed_threshold,
            "within_claim": self.within_claim,
        }


def summarize(m: int, n_lo: int, n_hi: int, reports: List[ObstructionReport]) -> ScanSummary:
    summary = ScanSummary(m, n_lo, n_hi)
    for v in Verdict:
        summary.counts[v.value] = 0
    last_open = None
    for rep in reports:
        summary.counts[rep.verdict.value] += 1
        if rep.verdict is Verdict.REALIZED:
            summary.realized.append(rep.n)
        elif rep.verdict is Verdict.UNDETERMINED:
            summary.undetermined.append(rep.n)
        if _is_valid_odd(m, rep.n) and rep.verdict is not Verdict.OBSTRUCTED:
            last_open = max(abs(rep.n), last_open or 0)
    # least N with every valid odd |n| >= N in range obstructed
    summary.threshold = 0 if last_open is None else last_open + 1
    return summary


def _evaluate_pair(args):
    return evaluate(*args)


def scan(m: int, n_lo: int, n_hi: int, workers: int = 1) -> Tuple[List[ObstructionReport], ScanSummary]:
    """Evaluate every n in [n_lo, n_hi]; reports come back ordered by n."""
    if n_lo > n_hi:
        raise InvalidArgumentError(f"empty range {n_lo}..{n_hi}")
    jobs = [(m, n) for n in range(n_lo, n_hi + 1)]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_evaluate_pair, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        reports = [evaluate(m, n) for m, n in jobs]
    return reports, summarize(m, n_lo, n_hi, reports)


def default_workers() -> int:
    return os.cpu_count() or 1


def unboundedness_witness(m: int, target, cap: int = 10_000):
    """Least n >= 1 with gcd(2m, n) = 1 and some |d(Y_n, s)| >= target.

    Returns ``(n, vector, d)``.
    """
    if m < 1:
        raise InvalidArgumentError(f"m must be positive, got {m}")
    target = Fraction(target)
    for n in range(1, cap + 1):
        if gcd(2 * m, n) != 1:
            continue
        table = d_table(m, n)
        vec, d = max(table.entries, key=lambda e: (abs(e[1]), tuple(-x for x in e[0])))
        if abs(d) >= target:
            return n, vec, d
    raise SearchExhaustedError(f"no |d| >= {target} for m={m} with n <= {cap}")
