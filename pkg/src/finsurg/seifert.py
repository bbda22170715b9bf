"""Seifert fibered presentations over S^2 with at most three exceptional fibers.

A presentation ``(b; (alpha_1, omega_1), ...)`` is stored with ``b`` the
Euler number of the base circle bundle and one ``(alpha, omega)`` pair per
fiber. The plumbing graph attached to it is star shaped with central weight
``b`` and legs given by the continued fractions of ``alpha/omega``; it is
negative definite exactly when ``e = b + sum(omega/alpha) < 0``.

The text format used on the command line writes each fiber as
``omega/alpha``, so ``"(-1; 1/2, 1/2, 3/5)"`` is ``(-1; (2,1), (2,1), (5,3))``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Optional, Tuple

from .errors import (
    InvalidArgumentError,
    InvalidPresentationError,
    NotNegativeDefiniteError,
    UnsupportedShapeError,
)
from .numtheory import mod_inverse

Fiber = Tuple[int, int]


@dataclass(frozen=True)
class SeifertPresentation:
    b: int
    fibers: Tuple[Fiber, ...] = ()

    def __post_init__(self):
        fibers = tuple((int(a), int(w)) for a, w in self.fibers)
        object.__setattr__(self, "fibers", fibers)
        if len(fibers) > 3:
            raise UnsupportedShapeError("at most three exceptional fibers are supported")
        for alpha, omega in fibers:
            if alpha < 1:
                raise InvalidPresentationError(f"fiber multiplicity must be >= 1, got {alpha}")
            if gcd(alpha, omega) != 1:
                raise InvalidPresentationError(f"fiber ({alpha},{omega}) is not coprime")

    @property
    def e(self) -> Fraction:
        """Orbifold Euler number b + sum(omega/alpha)."""
        return self.b + sum((Fraction(w, a) for a, w in self.fibers), Fraction(0))

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(sorted(a for a, _ in self.fibers))

    def is_normalized(self) -> bool:
        return all(a >= 2 and 0 < w < a for a, w in self.fibers)

    def __str__(self) -> str:
        return format_presentation(self)


class EllipticTag(enum.Enum):
    ICOSAHEDRAL = "Icosahedral"
    OCTAHEDRAL = "Octahedral"
    TETRAHEDRAL = "Tetrahedral"
    DIHEDRAL = "Dihedral"
    LENS = "Lens"
    NOT_ELLIPTIC = "NotElliptic"


@dataclass(frozen=True)
class EllipticType:
    tag: EllipticTag
    h1: Optional[int]
    cyclic_h1: bool


@dataclass(frozen=True)
class NemethiInvariants:
    """Invariants of a negative definite star-shaped plumbing with three legs.

    ``fibers`` holds ``(alpha, omega, omega_prime)`` with
    ``omega * omega_prime = 1 (mod alpha)``.
    """

    e0: int
    fibers: Tuple[Tuple[int, int, int], ...]
    e: Fraction
    eps: Fraction


def normalize(p: SeifertPresentation) -> SeifertPresentation:
    """Move every fiber into the range 0 < omega < alpha, absorbing alpha = 1 fibers into b."""
    b = p.b
    fibers = []
    for alpha, omega in p.fibers:
        k = omega // alpha
        b += k
        omega -= k * alpha
        if alpha == 1:
            continue
        fibers.append((alpha, omega))
    return SeifertPresentation(b, tuple(fibers))


def reverse_orientation(p: SeifertPresentation) -> SeifertPresentation:
    return normalize(SeifertPresentation(-p.b, tuple((a, -w) for a, w in p.fibers)))


def h1_order(p: SeifertPresentation) -> int:
    """|H_1| = alpha_1 alpha_2 alpha_3 |e|; zero means H_1 is infinite."""
    order = prod(a for a, _ in p.fibers) * abs(p.e)
    assert order.denominator == 1
    return int(order)


def classify_elliptic(p: SeifertPresentation) -> EllipticType:
    if not p.is_normalized():
        raise InvalidArgumentError(f"classify_elliptic needs a normalized presentation, got {p}")
    h1 = h1_order(p)
    mult = p.multiplicities
    if h1 == 0:
        return EllipticType(EllipticTag.NOT_ELLIPTIC, None, False)
    if len(mult) <= 2:
        return EllipticType(EllipticTag.LENS, h1, True)
    if mult[0] == 2 and mult[1] == 2:
        return EllipticType(EllipticTag.DIHEDRAL, h1, mult[2] % 2 == 1)
    tags = {
        (2, 3, 3): EllipticTag.TETRAHEDRAL,
        (2, 3, 4): EllipticTag.OCTAHEDRAL,
        (2, 3, 5): EllipticTag.ICOSAHEDRAL,
    }
    if mult in tags:
        return EllipticType(tags[mult], h1, True)
    return EllipticType(EllipticTag.NOT_ELLIPTIC, h1, False)


def dihedral_family(m: int, n: int) -> SeifertPresentation:
    """Y_n = (-1; (2,1), (2,1), (n,m)) in normal form; Y_{-n} is -Y_n."""
    if m < 1:
        raise InvalidArgumentError(f"m must be positive, got {m}")
    if n == 0:
        raise InvalidArgumentError("n must be nonzero")
    if gcd(m, abs(n)) != 1:
        raise InvalidArgumentError(f"gcd(m, n) must be 1, got m={m}, n={n}")
    if n < 0:
        return reverse_orientation(dihedral_family(m, -n))
    return normalize(SeifertPresentation(-1, ((2, 1), (2, 1), (n, m))))


def nemethi_form(p: SeifertPresentation) -> NemethiInvariants:
    p = normalize(p)
    if len(p.fibers) != 3:
        raise UnsupportedShapeError(
            f"the plumbing engine needs exactly three exceptional fibers, got {len(p.fibers)}"
        )
    e = p.e
    if e >= 0:
        raise NotNegativeDefiniteError(f"e = {e} >= 0 for {p}; reverse the orientation first")
    fibers = tuple((a, w, mod_inverse(w, a)) for a, w in p.fibers)
    eps = (2 - len(fibers) + sum(Fraction(1, a) for a, _ in p.fibers)) / e
    return NemethiInvariants(p.b, fibers, e, eps)


def hj_continued_fraction(alpha: int, omega: int) -> list:
    """Hirzebruch-Jung expansion alpha/omega = [k_1, k_2, ...] with every k_j >= 2."""
    ks = []
    while omega:
        k = -(-alpha // omega)
        ks.append(k)
        alpha, omega = omega, k * omega - alpha
    return ks


def lens_surgery_coefficient(p: SeifertPresentation) -> Tuple[int, int]:
    """Return (P, Q) with Q >= 0 so that a <= 2 fiber presentation is S^3_{P/Q}(U).

    The plumbing is then a linear chain; slam-dunking it down to a single
    unknot gives the coefficient. Q = 0 means S^3, P = 0 means S^1 x S^2.
    """
    p = normalize(p)
    if len(p.fibers) > 2:
        raise UnsupportedShapeError("a lens space has at most two exceptional fibers")
    legs = [[-k for k in hj_continued_fraction(a, w)] for a, w in p.fibers]
    chain = []
    if legs:
        chain.extend(reversed(legs[0]))
    chain.append(p.b)
    if len(legs) == 2:
        chain.extend(legs[1])
    # fold x_1 - 1/(x_2 - 1/(...)) as a projective pair to avoid dividing by 0
    num, den = chain[-1], 1
    for x in reversed(chain[:-1]):
        num, den = x * num - den, num
    if den < 0 or (den == 0 and num < 0):
        num, den = -num, -den
    g = gcd(num, den)
    return num // g, den // g


_PRESENTATION_RE = re.compile(r"^\(\s*(-?\d+)\s*(?:;(.*))?\)$")
_FIBER_RE = re.compile(r"^(-?\d+)/(\d+)$")


def parse_presentation(text: str) -> SeifertPresentation:
    """Parse "(b; w1/a1, w2/a2, w3/a3)"; whitespace is ignored."""
    compact = "".join(text.split())
    match = _PRESENTATION_RE.match(compact)
    if not match:
        raise InvalidArgumentError(f"cannot parse presentation {text!r}")
    b = int(match.group(1))
    fibers = []
    body = match.group(2)
    if body:
        for token in body.split(","):
            fm = _FIBER_RE.match(token)
            if not fm:
                raise InvalidArgumentError(f"cannot parse fiber {token!r} in {text!r}")
            fibers.append((int(fm.group(2)), int(fm.group(1))))
    return SeifertPresentation(b, tuple(fibers))


def format_presentation(p: SeifertPresentation) -> str:
    if not p.fibers:
        return f"({p.b})"
    return f"({p.b}; " + ", ".join(f"{w}/{a}" for a, w in p.fibers) + ")"


def equivalent(p: SeifertPresentation, q: SeifertPresentation) -> bool:
    """Orientation-preserving homeomorphism test for presentations over S^2.

    Three-fiber normal forms are unique up to fiber order. Lens spaces have
    several Seifert structures, so those are compared as L(P, Q) with
    Q defined up to inversion mod P.
    """
    p, q = normalize(p), normalize(q)
    if len(p.fibers) == 3 or len(q.fibers) == 3:
        return p.b == q.b and sorted(p.fibers) == sorted(q.fibers)
    P1, Q1 = _positive_lens(*lens_surgery_coefficient(p))
    P2, Q2 = _positive_lens(*lens_surgery_coefficient(q))
    if P1 != P2:
        return False
    if P1 <= 1:
        return True
    return Q1 in (Q2, pow(Q2, -1, P1))


def _positive_lens(P: int, Q: int) -> Tuple[int, int]:
    # S^3_{-P/Q}(U) = S^3_{P/(P-Q)}(U)
    if P < 0:
        return -P, (-Q) % -P
    return P, (Q % P if P else Q)
