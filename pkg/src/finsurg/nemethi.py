"""d-invariants of negative definite three-legged Seifert plumbings.

Spin^c structures of the boundary are represented by integer vectors
``(a0, a1, a2, a3)`` solving the s(i) <= 0 system; for each one

    d = (K^2 + s)/4 - 2 chi - 2 min_{i >= 0} tau(i).

Every loop over ``i`` stops at a certified cutoff derived from
``floor(x) <= x``, so the infinite conditions are checked exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
from typing import List, Tuple

from . import seifert
from .errors import ConsistencyError, InvalidArgumentError
from .numtheory import dedekind_sum, frac
from .seifert import NemethiInvariants, SeifertPresentation

SpincVector = Tuple[int, int, int, int]

# constant term of K^2 + s for three exceptional fibers
K2S_CONSTANT = 5


@dataclass(frozen=True)
class DInvariantTable:
    manifold: SeifertPresentation
    entries: Tuple[Tuple[tuple, Fraction], ...]
    negated: bool

    @property
    def values(self) -> List[Fraction]:
        return sorted(d for _, d in self.entries)

    @property
    def d_min(self) -> Fraction:
        return min(d for _, d in self.entries)

    @property
    def d_max(self) -> Fraction:
        return max(d for _, d in self.entries)

    def __len__(self):
        return len(self.entries)


def _scaled(inv: NemethiInvariants):
    """Common denominator L = prod(alpha) and the integer E = e * L (< 0)."""
    L = prod(a for a, _, _ in inv.fibers)
    E = inv.e * L
    assert E.denominator == 1
    return L, int(E)


def s_function(inv: NemethiInvariants, v: SpincVector, i: int) -> int:
    a0 = v[0]
    total = 1 + a0 + i * inv.e0
    for (alpha, omega, _), a in zip(inv.fibers, v[1:]):
        total += (i * omega + a) // alpha
    return total


def _is_solution(inv: NemethiInvariants, v: SpincVector, L: int, E: int) -> bool:
    # s(i) <= 1 + a0 + sum(a_l/alpha_l) + i*e, which is <= 0 once i >= A/|E|
    a0 = v[0]
    A = (1 + a0) * L + sum(a * (L // alpha) for (alpha, _, _), a in zip(inv.fibers, v[1:]))
    cutoff = -(-A // -E)
    e0 = inv.e0
    (al1, w1, _), (al2, w2, _), (al3, w3, _) = inv.fibers
    _, a1, a2, a3 = v
    for i in range(1, cutoff):
        if 1 + a0 + i * e0 + (i * w1 + a1) // al1 + (i * w2 + a2) // al2 + (i * w3 + a3) // al3 > 0:
            return False
    return True


def enumerate_spinc(inv: NemethiInvariants) -> List[SpincVector]:
    """All solutions of s(i) <= 0 for every i > 0, sorted lexicographically.

    The count must equal |H_1|; a mismatch raises :class:`ConsistencyError`.
    """
    if inv.e >= 0:
        raise InvalidArgumentError("enumerate_spinc needs e < 0")
    L, E = _scaled(inv)
    (al1, _, _), (al2, _, _), (al3, _, _) = inv.fibers
    # s(1) <= 0 with nonnegative floor terms forces a0 <= -1 - e0
    solutions = []
    for a0 in range(0, -inv.e0):
        for a1 in range(al1):
            for a2 in range(al2):
                for a3 in range(al3):
                    v = (a0, a1, a2, a3)
                    if _is_solution(inv, v, L, E):
                        solutions.append(v)
    expected = -E
    if len(solutions) != expected:
        raise ConsistencyError(
            f"found {len(solutions)} Spin^c vectors but |H_1| = {expected}",
            expected=expected,
            found=len(solutions),
        )
    return solutions


def k2s(inv: NemethiInvariants) -> Fraction:
    """K^2 + s = eps^2 e + e + 5 - 12 sum s(omega_l, alpha_l)."""
    dedekind = sum((dedekind_sum(w, a) for a, w, _ in inv.fibers), Fraction(0))
    return inv.eps**2 * inv.e + inv.e + K2S_CONSTANT - 12 * dedekind


def chi(inv: NemethiInvariants, v: SpincVector) -> Fraction:
    a0 = v[0]
    a_tilde = a0 + sum((Fraction(a, alpha) for (alpha, _, _), a in zip(inv.fibers, v[1:])), Fraction(0))
    minus_chi = Fraction(sum(v), 2) + inv.eps * a_tilde / 2 + a_tilde**2 / (2 * inv.e)
    for (alpha, _, omega_p), a in zip(inv.fibers, v[1:]):
        for i in range(1, a + 1):
            minus_chi -= frac(Fraction(i * omega_p, alpha))
    return -minus_chi


def tau_sequence(inv: NemethiInvariants, v: SpincVector, length: int) -> List[int]:
    """tau(0), ..., tau(length - 1)."""
    a0 = v[0]
    taus = [0]
    for i in range(length - 1):
        step = 1 + a0 - i * inv.e0
        for (alpha, omega, _), a in zip(inv.fibers, v[1:]):
            step += (-i * omega + a) // alpha
        taus.append(taus[-1] + step)
    return taus


def tau_min(inv: NemethiInvariants, v: SpincVector) -> int:
    # the tau increments are >= a0 - 2 + i|e|, positive once i > 2/|e|
    L, E = _scaled(inv)
    last = -(-2 * L // -E) + 1
    return min(tau_sequence(inv, v, last + 1))


def d_invariant(inv: NemethiInvariants, v: SpincVector) -> Fraction:
    return k2s(inv) / 4 - 2 * chi(inv, v) - 2 * tau_min(inv, v)


@lru_cache(maxsize=4096)
def _plumbing_entries(inv: NemethiInvariants):
    base = k2s(inv) / 4
    return tuple((v, base - 2 * chi(inv, v) - 2 * tau_min(inv, v)) for v in enumerate_spinc(inv))


def plumbing_table(p: SeifertPresentation) -> DInvariantTable:
    """d-invariants of any three-fiber presentation with finite H_1.

    If ``p`` is not negative definite the computation runs on ``-p`` and
    every value is negated, since d(Y, s) = -d(-Y, s).
    """
    p = seifert.normalize(p)
    if p.e == 0:
        raise InvalidArgumentError(f"{p} has infinite H_1")
    if p.e < 0:
        return DInvariantTable(p, _plumbing_entries(seifert.nemethi_form(p)), False)
    rev = seifert.reverse_orientation(p)
    entries = tuple((v, -d) for v, d in _plumbing_entries(seifert.nemethi_form(rev)))
    return DInvariantTable(p, entries, True)


def lens_table(p: SeifertPresentation) -> DInvariantTable:
    """d-invariants of a presentation with at most two fibers, via the lens recursion."""
    from .surgery import lens_d

    P, Q = seifert.lens_surgery_coefficient(p)
    if P == 0:
        raise InvalidArgumentError(f"{p} is S^1 x S^2, which has infinite H_1")
    sign = 1 if P > 0 else -1
    P = abs(P)
    q = Q % P if P > 1 else 1
    entries = tuple(((i,), sign * lens_d(P, q, i)) for i in range(P))
    return DInvariantTable(seifert.normalize(p), entries, sign < 0)


def dihedral_d_values(m: int, n: int) -> DInvariantTable:
    """d(Y_n, .) for any n with gcd(m, n) = 1, including even n."""
    p = seifert.dihedral_family(m, n)
    if len(p.fibers) < 3:
        return lens_table(p)
    return plumbing_table(p)


def d_table(m: int, n: int) -> DInvariantTable:
    """d-invariants of the dihedral manifold Y_n; needs gcd(2m, |n|) = 1."""
    if m < 1 or n == 0 or gcd(2 * m, abs(n)) != 1:
        raise InvalidArgumentError(f"d_table needs m >= 1 and gcd(2m, |n|) = 1, got m={m}, n={n}")
    return dihedral_d_values(m, n)


def eq2_solutions(m: int) -> List[SpincVector]:
    """Closed-form solution list for -Y_n when n > 2m."""
    sols = [(0, 0, 0, a) for a in range(2 * m)]
    sols += [(0, 0, 1, a) for a in range(m)]
    sols += [(0, 1, 0, a) for a in range(m)]
    return sorted(sols)
