"""Acceptance checks, runnable from pytest or ``finsurg selftest``.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
criterion, so a run always reports every line.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Dict, List

from . import nemethi, obstruct, seifert, surgery
from .numtheory import dedekind_sum, reciprocity_rhs


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name} ({self.seconds:.1f}s) {self.detail}"


def check_reciprocity() -> CheckResult:
    failures = [
        (a, b)
        for b in range(1, 201)
        for a in range(1, b)
        if gcd(a, b) == 1 and dedekind_sum(a, b) + dedekind_sum(b, a) != reciprocity_rhs(a, b)
    ]
    return CheckResult("1 dedekind reciprocity, 1 <= a < b <= 200", not failures, f"failures={failures[:5]}")


def check_vanishing() -> CheckResult:
    failures = []
    count = 0
    for m in range(1, 21):
        for n in range(m + 1, 201):
            if n % 2 == 0 or gcd(2 * m, n) != 1:
                continue
            count += 1
            if dedekind_sum(n, n - m) + dedekind_sum(-m, n - m) != 0:
                failures.append((m, n))
    return CheckResult("2 vanishing s(n,n-m)+s(-m,n-m)=0", not failures, f"pairs={count} failures={failures[:5]}")


def check_spinc_counting() -> CheckResult:
    problems = []
    for m in range(1, 11):
        for n in range(2, 201):
            if gcd(2 * m, n) != 1:
                continue
            inv = seifert.nemethi_form(seifert.dihedral_family(m, -n))
            try:
                sols = nemethi.enumerate_spinc(inv)
            except Exception as exc:  # count mismatch surfaces here
                problems.append((m, n, str(exc)))
                continue
            if len(sols) != 4 * m:
                problems.append((m, n, len(sols)))
            elif n > 2 * m and sols != nemethi.eq2_solutions(m):
                problems.append((m, n, "closed-form list differs"))
    return CheckResult("3 Spin^c count 4m and closed-form list", not problems, f"problems={problems[:5]}")


def check_recursion() -> CheckResult:
    problems = []
    quarter = Fraction(1, 4)
    for m in range(1, 6):
        for n in range(2 * m + 1, 22 * m + 1):
            if gcd(m, n) != 1:
                continue
            small = nemethi.plumbing_table(seifert.dihedral_family(m, -n))
            big = nemethi.plumbing_table(seifert.dihedral_family(m, -(n + m)))
            if small.negated or big.negated:
                problems.append((m, n, "not computed on the negative definite side"))
                continue
            d_small, d_big = dict(small.entries), dict(big.entries)
            if set(d_small) != set(d_big):
                problems.append((m, n, "solution sets differ"))
                continue
            for v, d in d_small.items():
                want = quarter if v[1] == v[2] == 0 else 0
                if d_big[v] - d != want:
                    problems.append((m, n, v, d_big[v] - d))
            k_diff = nemethi.k2s(seifert.nemethi_form(seifert.dihedral_family(m, -(n + m)))) - nemethi.k2s(
                seifert.nemethi_form(seifert.dihedral_family(m, -n))
            )
            if k_diff != 1:
                problems.append((m, n, "K^2+s difference", k_diff))
    return CheckResult("4 recursion +1/4 / 0 and K^2+s step 1", not problems, f"problems={problems[:5]}")


def check_lens_closed_form() -> CheckResult:
    problems = []
    for m in range(1, 26):
        closed = [surgery.lens_d_closed_4m(m, i) for i in range(2 * m + 1)]
        rec = [surgery.lens_d(4 * m, 1, i) for i in range(4 * m)]
        if closed != rec[: 2 * m + 1]:
            problems.append((m, "recursion != closed form"))
        if min(closed) != Fraction(-1, 4) or closed[2 * m] != Fraction(-1, 4):
            problems.append((m, "minimum"))
        if max(closed) != m - Fraction(1, 4) or closed[0] != m - Fraction(1, 4):
            problems.append((m, "maximum"))
        if (min(rec), max(rec)) != (Fraction(-1, 4), m - Fraction(1, 4)):
            problems.append((m, "full-range extrema"))
    return CheckResult("5 lens recursion = closed form, extrema", not problems, f"problems={problems[:5]}")


def check_cross_formula() -> CheckResult:
    problems = []
    signs = set()
    for m in range(1, 11):
        plumbing = sorted(nemethi.d_table(m, 2 * m + 1).values)
        spec = surgery.SurgerySpec(surgery.TorusKnot(2 * m + 1, 2), 4 * m)
        surg = sorted(surgery.surgery_d_values(spec))
        if plumbing == surg:
            signs.add(1)
        elif plumbing == sorted(-d for d in surg):
            signs.add(-1)
        else:
            problems.append(m)
    m1 = sorted(nemethi.d_table(1, 3).values)
    if m1 != sorted(Fraction(x, 4) for x in (-5, -1, 0, 0)):
        problems.append(("m=1 multiset", m1))
    ok = not problems and len(signs) == 1
    return CheckResult("6 plumbing vs surgery formula on T(2m+1,2)", ok, f"signs={sorted(signs)} problems={problems}")


def check_torsion_bounds() -> CheckResult:
    problems = []
    total = 0
    for g in range(1, 9):
        for poly in surgery.lspace_polynomials(g):
            total += 1
            for i in range(g):
                t = surgery.torsion_sum(poly, i)
                if not 0 <= t <= max(1, g - i - 1):
                    problems.append((str(poly), i, t))
            if surgery.torsion_sum(poly, g - 1) != 1:
                problems.append((str(poly), "t_{g-1}"))
    return CheckResult("7 torsion bounds, g <= 8", not problems, f"polys={total} problems={problems[:5]}")


def check_surgery_bounds() -> CheckResult:
    problems = []
    for m in range(1, 7):
        lower, upper = surgery.d_bounds(m)
        # the bound chain: lens minimum less twice the largest torsion sum, lens maximum
        if lower != surgery.lens_d_closed_4m(m, 2 * m) - 2 * (2 * m - 1):
            problems.append((m, "lower bound constant", lower))
        if upper != surgery.lens_d_closed_4m(m, 0):
            problems.append((m, "upper bound constant", upper))
        for g in range(0, 2 * m + 1):
            for poly in surgery.lspace_polynomials(g):
                spec = surgery.SurgerySpec(poly, 4 * m)
                for d in surgery.surgery_d_values(spec):
                    if not lower <= d <= upper:
                        problems.append((m, str(poly), d))
    return CheckResult("8 surgery d within [-4m+7/4, m-1/4]", not problems, f"problems={problems[:5]}")


def expected_realized(m: int) -> List[int]:
    plus = [n for n in range(1, 2 * m + 2) if (2 * m + 1) % n == 0]
    minus = [-n for n in range(1, 2 * m) if (2 * m - 1) % n == 0]
    return sorted(plus + minus)


def check_main_theorem(workers: int = 1) -> CheckResult:
    problems = []
    details = []
    reports, summary = obstruct.scan(1, -501, 501, workers=workers)
    for rep in reports:
        if rep.n % 2 and 16 <= abs(rep.n) and rep.verdict is not obstruct.Verdict.OBSTRUCTED:
            problems.append((1, rep.n, rep.verdict.value))
    if sorted(summary.realized) != expected_realized(1):
        problems.append((1, "realized", summary.realized))
    details.append(f"N*(1)={summary.threshold}")
    for m in (2, 3):
        reports, summary = obstruct.scan(m, -1000, 1000, workers=workers)
        if len(reports) != 2001:
            problems.append((m, "incomplete scan"))
        if sorted(summary.realized) != expected_realized(m):
            problems.append((m, "realized", summary.realized, expected_realized(m)))
        flag = "within" if summary.within_claim else "exceeds"
        details.append(f"N*({m})={summary.threshold} ({flag} 16m={summary.claimed_threshold})")
    return CheckResult("9 obstruction scan", not problems, "; ".join(details) + f" problems={problems[:5]}")


def check_unboundedness() -> CheckResult:
    found = []
    problems = []
    for m in (1, 2, 3):
        try:
            n, vec, d = obstruct.unboundedness_witness(m, 10)
            found.append((m, n, str(d)))
        except Exception as exc:
            problems.append((m, str(exc)))
    return CheckResult("10 unbounded |d| >= 10", not problems, f"witnesses={found} problems={problems}")


def check_orientation() -> CheckResult:
    problems = []
    for m, top in ((1, 501), (2, 1000), (3, 1000)):
        for n in range(1, top + 1):
            if gcd(2 * m, n) != 1:
                continue
            plus = nemethi.d_table(m, n).values
            minus = nemethi.d_table(m, -n).values
            if sorted(-d for d in plus) != minus:
                problems.append((m, n))
    return CheckResult("11 d(Y_-n) = -d(Y_n) as multisets", not problems, f"problems={problems[:5]}")


SUITES: Dict[str, List[Callable[[], CheckResult]]] = {
    "dedekind": [check_reciprocity, check_vanishing],
    "spinc": [check_spinc_counting],
    "recursion": [check_recursion],
    "lens": [check_lens_closed_form],
    "cross": [check_cross_formula],
    "torsion": [check_torsion_bounds],
    "bounds": [check_surgery_bounds],
    "theorem": [check_main_theorem],
    "unbounded": [check_unboundedness],
    "orientation": [check_orientation],
}

ALL_CHECKS = [check for suite in SUITES.values() for check in suite]


def run_checks(checks, echo=None) -> List[CheckResult]:
    results = []
    for check in checks:
        start = time.perf_counter()
        try:
            res = check()
        except Exception as exc:
            res = CheckResult(check.__name__, False, f"raised {type(exc).__name__}: {exc}")
        res.seconds = time.perf_counter() - start
        results.append(res)
        if echo:
            echo(res.line())
    return results


def run(suites=None, echo=None) -> List[CheckResult]:
    names = list(SUITES) if not suites else list(suites)
    return run_checks([check for name in names for check in SUITES[name]], echo)
