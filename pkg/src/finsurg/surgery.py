"""d-invariants of lens spaces and integral L-space knot surgeries.

Also holds the Alexander-polynomial side of the obstruction (torsion sums
and their bounds) and Moser's torus-knot realizations of dihedral manifolds.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Optional, Tuple, Union

from .errors import InvalidArgumentError, ReducibleSurgeryError, UnsupportedSurgeryError
from .seifert import SeifertPresentation

# -4m + 7/4 is what the bound's derivation yields; the theorem statement
# prints -4m + 4/7, kept here for reference only.
LOWER_BOUND_OFFSET = Fraction(7, 4)
STATED_LOWER_BOUND_OFFSET = Fraction(4, 7)
UPPER_BOUND_OFFSET = Fraction(-1, 4)


@dataclass(frozen=True)
class AlexanderPoly:
    """Symmetrized Alexander polynomial a_0 + sum_j a_j (t^j + t^-j).

    ``coeffs`` is ``(a_0, a_1, ..., a_g)``.
    """

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            raise InvalidArgumentError("empty Alexander polynomial")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def genus(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> int:
        j = abs(j)
        return self.coeffs[j] if j < len(self.coeffs) else 0

    def full_sequence(self) -> List[int]:
        """Coefficients of t^g down to t^-g."""
        top = list(reversed(self.coeffs))
        return top + list(self.coeffs[1:])

    def __str__(self) -> str:
        return ",".join(str(c) for c in reversed(self.coeffs))

    @classmethod
    def parse(cls, text: str) -> "AlexanderPoly":
        """Parse "a_g,...,a_0"."""
        try:
            values = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise InvalidArgumentError(f"cannot parse Alexander polynomial {text!r}") from exc
        return cls(tuple(reversed(values)))


UNKNOT = AlexanderPoly((1,))


@dataclass(frozen=True)
class TorusKnot:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 2 or self.s < 2 or gcd(self.r, self.s) != 1:
            raise InvalidArgumentError(f"T({self.r},{self.s}) needs coprime r, s >= 2")

    def alexander(self) -> AlexanderPoly:
        return torus_alexander(self.r, self.s)

    def __str__(self) -> str:
        return f"T({self.r},{self.s})"


@dataclass(frozen=True)
class SurgerySpec:
    knot: Union[TorusKnot, AlexanderPoly]
    p: int
    q: int = 1

    def __post_init__(self):
        if self.q < 1 or gcd(self.p, self.q) != 1:
            raise InvalidArgumentError(f"surgery coefficient {self.p}/{self.q} needs q >= 1 and gcd 1")

    @property
    def alexander(self) -> AlexanderPoly:
        if isinstance(self.knot, TorusKnot):
            return self.knot.alexander()
        return self.knot

    def __str__(self) -> str:
        name = "U" if self.knot == UNKNOT else str(self.knot)
        return f"{name} {self.p}/{self.q}"


_SPEC_RE = re.compile(r"^T\((\d+),(\d+)\)(-?\d+)/(\d+)$")


def parse_surgery_spec(text: str) -> SurgerySpec:
    """Parse "T(r,s) p/q"."""
    match = _SPEC_RE.match("".join(text.split()))
    if not match:
        raise InvalidArgumentError(f"cannot parse surgery spec {text!r}")
    r, s, p, q = map(int, match.groups())
    return SurgerySpec(TorusKnot(r, s), p, q)


# -- lens spaces -----------------------------------------------------------

def _lens_d(p: int, q: int, i: int) -> Fraction:
    if p == 1:
        return Fraction(0)
    r = p % q
    j = i % q
    return -Fraction(p * q - (2 * i + 1 - p - q) ** 2, 4 * p * q) - _lens_d(q, r, j)


def lens_d(p: int, q: int, i: int) -> Fraction:
    """d(S^3_{p/q}(U), i) by the two-term recursion; q is taken mod p."""
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise InvalidArgumentError(f"lens_d needs p, q >= 1 coprime, got ({p}, {q})")
    if not 0 <= i < p:
        raise InvalidArgumentError(f"Spin^c label {i} out of range [0, {p})")
    if p > 1:
        q %= p
    return _lens_d(p, q, i)


def lens_d_closed_4m(m: int, i: int) -> Fraction:
    """d(S^3_{4m}(U), i) = -1/4 + (i - 2m)^2 / 4m for 0 <= i <= 2m."""
    if m < 1 or not 0 <= i <= 2 * m:
        raise InvalidArgumentError(f"closed form needs m >= 1 and 0 <= i <= 2m, got m={m}, i={i}")
    return Fraction(-1, 4) + Fraction((i - 2 * m) ** 2, 4 * m)


# -- Alexander polynomials ---------------------------------------------------

def _poly_divide(num: List[int], den: List[int]) -> List[int]:
    """Exact division of integer polynomials (lowest degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c, rem = divmod(num[k + len(den) - 1], lead)
        assert rem == 0
        out[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    assert not any(num), "division was not exact"
    return out


def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _t_power_minus_one(k: int) -> List[int]:
    return [-1] + [0] * (k - 1) + [1]


@lru_cache(maxsize=None)
def torus_alexander(r: int, s: int) -> AlexanderPoly:
    """(t^{rs} - 1)(t - 1) / ((t^r - 1)(t^s - 1)), symmetrized."""
    if r < 2 or s < 2 or gcd(r, s) != 1:
        raise InvalidArgumentError(f"T({r},{s}) needs coprime r, s >= 2")
    num = _poly_mul(_t_power_minus_one(r * s), _t_power_minus_one(1))
    den = _poly_mul(_t_power_minus_one(r), _t_power_minus_one(s))
    c = _poly_divide(num, den)
    g = (len(c) - 1) // 2
    return AlexanderPoly(tuple(c[g:]))


def validate_lspace(poly: AlexanderPoly) -> bool:
    """Nonzero coefficients are +-1, alternate, start at a_g = +1, and a_{g-1} = -1 if g > 1."""
    g = poly.genus
    if poly[g] != 1:
        return False
    if g > 1 and poly[g - 1] != -1:
        return False
    nonzero = [c for c in poly.full_sequence() if c]
    if any(abs(c) != 1 for c in nonzero):
        return False
    return all(x == -y for x, y in zip(nonzero, nonzero[1:]))


def torsion_sum(poly: AlexanderPoly, i: int) -> int:
    """t_i = sum_{j >= 1} j a_{i+j}."""
    if not validate_lspace(poly):
        raise InvalidArgumentError(f"Alexander polynomial {poly} is not L-space valid")
    if i < 0:
        raise InvalidArgumentError(f"torsion index must be >= 0, got {i}")
    return sum(j * poly[i + j] for j in range(1, poly.genus - i + 1))


def lspace_polynomials(g: int) -> List[AlexanderPoly]:
    """Every L-space-valid coefficient pattern of genus exactly g."""
    if g == 0:
        return [UNKNOT]
    if g == 1:
        return [AlexanderPoly((-1, 1))]
    free = g - 2  # positions 1..g-2 may be zero or not
    polys = []
    for mask in range(1 << free):
        coeffs = [0] * (g + 1)
        coeffs[g], coeffs[g - 1] = 1, -1
        sign = 1
        for j in range(g - 2, 0, -1):
            if mask >> (j - 1) & 1:
                coeffs[j] = sign
                sign = -sign
        # a_0 continues the alternation across the symmetric centre
        coeffs[0] = sign
        polys.append(AlexanderPoly(tuple(coeffs)))
    return polys


# -- surgeries ----------------------------------------------------------------

def lspace_condition(p: int, q: int, g: int) -> bool:
    """S^3_{p/q}(K) is an L-space iff p/q >= 2g - 1 (K with a positive L-space surgery)."""
    if q < 1 or gcd(p, q) != 1:
        raise InvalidArgumentError(f"{p}/{q} is not a reduced coefficient")
    return Fraction(p, q) >= 2 * g - 1


def max_lspace_genus(p: int, q: int = 1) -> int:
    """Largest genus g with p/q >= 2g - 1; equals 2m for p/q = 4m."""
    return (Fraction(p, q) + 1) // 2


def surgery_d(spec: SurgerySpec, i: int) -> Fraction:
    """d(S^3_p(K), i) = d(S^3_p(U), i) - 2 t_{min(i, p-i)} for integral L-space surgery."""
    if spec.q != 1:
        raise UnsupportedSurgeryError(f"only integral surgery is supported, got q={spec.q}")
    p = spec.p
    if p < 1:
        raise InvalidArgumentError(f"surgery_d needs p > 0, got {p}")
    if not 0 <= i < p:
        raise InvalidArgumentError(f"Spin^c label {i} out of range [0, {p})")
    poly = spec.alexander
    if not validate_lspace(poly):
        raise InvalidArgumentError(f"Alexander polynomial {poly} is not L-space valid")
    if not lspace_condition(p, 1, poly.genus):
        raise InvalidArgumentError(f"{p}-surgery on a genus {poly.genus} knot is not an L-space")
    return lens_d(p, 1, i) - 2 * torsion_sum(poly, min(i, p - i))


def surgery_d_values(spec: SurgerySpec) -> List[Fraction]:
    return [surgery_d(spec, i) for i in range(spec.p)]


def d_bounds(m: int) -> Tuple[Fraction, Fraction]:
    """Range containing every d(S^3_{4m}(K), i) for an L-space surgery."""
    if m < 1:
        raise InvalidArgumentError(f"m must be positive, got {m}")
    return -4 * m + LOWER_BOUND_OFFSET, m + UPPER_BOUND_OFFSET


# -- torus knots ------------------------------------------------------------------

def moser_multiplicities(r: int, s: int, p: int, q: int) -> Tuple[int, int, int]:
    """Sorted multiplicity triple (r, s, |rsq - p|) of S^3_{p/q}(T(r,s))."""
    if q < 1 or gcd(p, q) != 1:
        raise InvalidArgumentError(f"{p}/{q} is not a reduced coefficient")
    if p == r * s * q:
        raise ReducibleSurgeryError(f"{p}/{q} surgery on T({r},{s}) is reducible")
    return tuple(sorted((r, s, abs(r * s * q - p))))


def _fiber(alpha: int, omega: int):
    if alpha == 0:
        raise ReducibleSurgeryError("surgery slope equals the cabling slope")
    return (alpha, omega) if alpha > 0 else (-alpha, -omega)


def trefoil_surgery(p: int, q: int) -> SeifertPresentation:
    """S^3_{p/q}(T(3,2)) = (-1; (2,1), (3,1), (6q - p, q))."""
    if q < 1 or gcd(p, q) != 1:
        raise InvalidArgumentError(f"{p}/{q} is not a reduced coefficient")
    return SeifertPresentation(-1, ((2, 1), (3, 1), _fiber(6 * q - p, q)))


def torus_knot_surgery(r: int, p: int, q: int) -> SeifertPresentation:
    """S^3_{p/q}(T(r,2)) for odd r >= 1 (r = 1 is the unknot).

    (-1; (2,1), (r, (r-1)/2), (2rq - p, q)), which is the trefoil formula at r = 3.
    """
    if r < 1 or r % 2 == 0:
        raise InvalidArgumentError(f"T(r,2) needs odd r >= 1, got {r}")
    if q < 1 or gcd(p, q) != 1:
        raise InvalidArgumentError(f"{p}/{q} is not a reduced coefficient")
    return SeifertPresentation(-1, ((2, 1), (r, (r - 1) // 2), _fiber(2 * r * q - p, q)))


@dataclass(frozen=True)
class Realization:
    """p/q surgery on T(r,2) giving Y_target (r = 1 means the unknot)."""

    r: int
    p: int
    q: int
    target: int

    @property
    def knot_name(self) -> str:
        return "U" if self.r == 1 else f"T({self.r},2)"

    def presentation(self) -> SeifertPresentation:
        return torus_knot_surgery(self.r, self.p, self.q)

    def __str__(self) -> str:
        return f"{self.knot_name} {self.p}/{self.q}"


def dihedral_realizations(m: int, n: int) -> List[Realization]:
    """Torus-knot surgeries giving Y_n or Y_-n, for odd n > 0 with gcd(2m, n) = 1.

    When n divides 2m + e (e = +-1) the surgery is 4m/q on T(n,2) with
    q = (2m + e)/n. Which of Y_n, Y_-n it produces is read off by comparing
    normal forms, not assumed.
    """
    from .seifert import dihedral_family, equivalent

    if m < 1:
        raise InvalidArgumentError(f"m must be positive, got {m}")
    if n < 1 or n % 2 == 0 or gcd(2 * m, n) != 1:
        raise InvalidArgumentError(f"realization needs odd n > 0 coprime to 2m, got m={m}, n={n}")
    p = 4 * m
    found = []
    for k in (2 * m + 1, 2 * m - 1):
        if k % n:
            continue
        q = k // n
        pres = torus_knot_surgery(n, p, q)
        for target in (n, -n):
            if equivalent(pres, dihedral_family(m, target)):
                found.append(Realization(n, p, q, target))
                break
        else:
            raise AssertionError(f"T({n},2) {p}/{q} is not a dihedral family member")
    return found


def dihedral_realization(m: int, n: int) -> Optional[Realization]:
    found = dihedral_realizations(m, n)
    return found[0] if found else None
