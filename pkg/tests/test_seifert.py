from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from finsurg import seifert
from finsurg.errors import (
    InvalidArgumentError,
    InvalidPresentationError,
    NotNegativeDefiniteError,
    UnsupportedShapeError,
)
from finsurg.seifert import EllipticTag, SeifertPresentation as SP


@st.composite
def fibers(draw):
    alpha = draw(st.integers(1, 40))
    omega = draw(st.integers(-80, 80).filter(lambda w: gcd(alpha, w) == 1))
    return (alpha, omega)


presentations = st.builds(SP, st.integers(-5, 5), st.lists(fibers(), max_size=3).map(tuple))


def Yn(m, n):
    return SP(-1, ((2, 1), (2, 1), (n, m)))


def test_normalize_examples():
    m, n = 2, 7
    assert seifert.normalize(SP(1, ((2, -1), (2, -1), (n, -m)))) == SP(-2, ((2, 1), (2, 1), (n, n - m)))
    already = SP(-1, ((2, 1), (2, 1), (5, 3)))
    assert seifert.normalize(already) == already
    assert seifert.normalize(SP(-1, ((2, 1), (2, 1), (1, 1)))) == SP(0, ((2, 1), (2, 1)))


def test_invalid_fiber():
    with pytest.raises(InvalidPresentationError):
        SP(0, ((4, 2),))
    with pytest.raises(UnsupportedShapeError):
        SP(0, ((2, 1),) * 4)


def test_reverse_orientation_examples():
    assert seifert.reverse_orientation(Yn(3, 7)) == SP(-2, ((2, 1), (2, 1), (7, 4)))
    assert seifert.reverse_orientation(SP(0, ((2, 1), (2, 1)))) == SP(-2, ((2, 1), (2, 1)))


@given(presentations)
def test_normalize_idempotent_preserves_order(p):
    q = seifert.normalize(p)
    assert q.is_normalized()
    assert seifert.normalize(q) == q
    assert seifert.h1_order(q) == seifert.h1_order(p)
    assert q.e == p.e


@given(presentations)
def test_reverse_is_involution(p):
    q = seifert.reverse_orientation(p)
    assert seifert.h1_order(q) == seifert.h1_order(p)
    assert q.e == -p.e
    assert seifert.reverse_orientation(q) == seifert.normalize(p)


@pytest.mark.parametrize("m, n", [(1, 3), (2, 5), (3, 7), (5, 11)])
def test_h1_of_family(m, n):
    assert seifert.h1_order(Yn(m, n)) == 4 * m


@given(st.integers(-30, 30).filter(lambda p: p % 6), st.integers(1, 10))
def test_h1_trefoil_form(p, q):
    assume(gcd(p, q) == 1 and 6 * q != p)
    alpha = 6 * q - p
    pres = SP(-1, ((2, 1), (3, 1), (abs(alpha), q if alpha > 0 else -q)))
    assert seifert.h1_order(pres) == abs(p)


def test_h1_lens_form():
    assert seifert.h1_order(SP(0, ((2, 1), (2, 1)))) == 4


def test_h1_canonical_matches_display():
    # alpha1 alpha2 alpha3 (-1 + sum omega/alpha) on b = -1 forms
    for a3 in range(2, 30):
        for w3 in range(1, a3):
            if gcd(a3, w3) != 1:
                continue
            for a2, w2 in ((2, 1), (3, 1), (3, 2)):
                p = SP(-1, ((2, 1), (a2, w2), (a3, w3)))
                display = 2 * a2 * a3 * (-1 + Fraction(1, 2) + Fraction(w2, a2) + Fraction(w3, a3))
                assert seifert.h1_order(p) == abs(display)


def test_classify_examples():
    t = seifert.classify_elliptic(SP(-1, ((2, 1), (2, 1), (5, 3))))
    assert (t.tag, t.h1, t.cyclic_h1) == (EllipticTag.DIHEDRAL, 12, True)
    assert seifert.classify_elliptic(SP(-1, ((2, 1), (3, 1), (5, 4)))).tag is EllipticTag.ICOSAHEDRAL
    assert seifert.classify_elliptic(SP(-1, ((2, 1), (3, 1), (7, 6)))).tag is EllipticTag.NOT_ELLIPTIC
    assert seifert.classify_elliptic(SP(-1, ((2, 1), (3, 1), (4, 1)))).tag is EllipticTag.OCTAHEDRAL
    assert seifert.classify_elliptic(SP(-1, ((3, 1), (2, 1), (3, 1)))).tag is EllipticTag.TETRAHEDRAL
    assert seifert.classify_elliptic(SP(0, ((2, 1), (2, 1)))).tag is EllipticTag.LENS
    even = seifert.classify_elliptic(seifert.normalize(Yn(3, 4)))
    assert (even.tag, even.h1, even.cyclic_h1) == (EllipticTag.DIHEDRAL, 12, False)


def test_classify_needs_normal_form():
    with pytest.raises(InvalidArgumentError):
        seifert.classify_elliptic(SP(1, ((2, -1), (2, -1), (5, -3))))


def test_dihedral_family_examples():
    assert seifert.dihedral_family(1, 3) == SP(-1, ((2, 1), (2, 1), (3, 1)))
    assert seifert.dihedral_family(1, -3) == SP(-2, ((2, 1), (2, 1), (3, 2)))
    lens = seifert.dihedral_family(3, 1)
    assert len(lens.fibers) == 2 and seifert.h1_order(lens) == 12
    assert seifert.classify_elliptic(lens).tag is EllipticTag.LENS
    for bad in ((2, 4), (3, 0), (0, 3)):
        with pytest.raises(InvalidArgumentError):
            seifert.dihedral_family(*bad)


def test_family_is_dihedral_with_cyclic_h1():
    for m in range(1, 11):
        for n in range(3, 101, 2):
            if gcd(m, n) != 1:
                continue
            for sign in (1, -1):
                p = seifert.dihedral_family(m, sign * n)
                t = seifert.classify_elliptic(p)
                assert (t.tag, t.h1, t.cyclic_h1) == (EllipticTag.DIHEDRAL, 4 * m, True)
            inv = seifert.nemethi_form(seifert.reverse_orientation(seifert.dihedral_family(m, n)))
            assert inv.e == Fraction(-m, n)


@pytest.mark.parametrize("m, n", [(1, 3), (1, 7), (2, 5), (3, 11), (4, 13)])
def test_nemethi_form_of_minus_Yn(m, n):
    inv = seifert.nemethi_form(seifert.dihedral_family(m, -n))
    assert inv.e0 == -2
    assert inv.e == Fraction(-m, n) and inv.eps == Fraction(-1, m)
    assert inv.fibers[:2] == ((2, 1, 1), (2, 1, 1))
    alpha, omega, omega_p = inv.fibers[2]
    assert (alpha, omega) == (n, n - m)
    assert (omega_p * -m) % n == 1 % n  # omega' = -1/m mod n
    shifted = seifert.nemethi_form(seifert.dihedral_family(m, -(n + m)))
    assert shifted.e == Fraction(-m, n + m) and shifted.eps == Fraction(-1, m)
    assert (shifted.fibers[2][2] * -m) % (n + m) == 1


def test_nemethi_form_small_example():
    inv = seifert.nemethi_form(SP(-2, ((2, 1), (2, 1), (3, 2))))
    assert inv.fibers[2] == (3, 2, 2)
    assert (inv.e, inv.eps) == (Fraction(-1, 3), -1)


def test_nemethi_form_errors():
    with pytest.raises(NotNegativeDefiniteError):
        seifert.nemethi_form(seifert.dihedral_family(1, 3))
    with pytest.raises(UnsupportedShapeError):
        seifert.nemethi_form(SP(-3, ((2, 1), (2, 1))))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("(-1; 1/2, 1/2, 3/5)", SP(-1, ((2, 1), (2, 1), (5, 3)))),
        ("( -1 ;1/2,1/2 , 3/5 )", SP(-1, ((2, 1), (2, 1), (5, 3)))),
        ("(0)", SP(0, ())),
        ("(2; -1/3)", SP(2, ((3, -1),))),
    ],
)
def test_parse_presentation(text, expected):
    assert seifert.parse_presentation(text) == expected


@given(presentations)
def test_format_round_trip(p):
    assert seifert.parse_presentation(seifert.format_presentation(p)) == p


@pytest.mark.parametrize("bad", ["-1; 1/2", "(x; 1/2)", "(1; 1/2/3)", "(1; 2/4)"])
def test_parse_rejects(bad):
    with pytest.raises(InvalidArgumentError):
        seifert.parse_presentation(bad)


def test_hj_continued_fraction():
    assert seifert.hj_continued_fraction(3, 2) == [2, 2]
    assert seifert.hj_continued_fraction(7, 3) == [3, 2, 2]
    assert seifert.hj_continued_fraction(5, 1) == [5]


@pytest.mark.parametrize(
    "pres, expected",
    [
        (SP(0, ((2, 1), (2, 1))), (-4, 1)),  # Y_1 for m = 1
        (SP(-2, ((2, 1), (2, 1))), (-4, 3)),  # A3 chain
        (SP(5, ()), (5, 1)),
        (SP(-1, ()), (-1, 1)),
    ],
)
def test_lens_surgery_coefficient(pres, expected):
    assert seifert.lens_surgery_coefficient(pres) == expected


def test_lens_coefficient_tracks_h1():
    for m in range(1, 30):
        P, _ = seifert.lens_surgery_coefficient(seifert.dihedral_family(m, 1))
        assert abs(P) == 4 * m
        Pm, _ = seifert.lens_surgery_coefficient(seifert.dihedral_family(m, -1))
        assert abs(Pm) == 4 * m


def test_equivalent():
    assert seifert.equivalent(SP(-1, ((2, 1), (3, 1), (2, 1))), seifert.dihedral_family(1, 3))
    assert not seifert.equivalent(seifert.dihedral_family(1, 3), seifert.dihedral_family(1, -3))
    # -4/3 surgery on the unknot is +4 surgery
    assert seifert.equivalent(SP(4, ()), SP(-2, ((2, 1), (2, 1))))
    assert seifert.equivalent(SP(-4, ()), SP(0, ((2, 1), (2, 1))))
    assert not seifert.equivalent(SP(4, ()), SP(-4, ()))
    assert seifert.equivalent(SP(4, ()), seifert.reverse_orientation(SP(0, ((2, 1), (2, 1)))))
    # L(5,2) and L(5,3) agree since 2 * 3 = 1 mod 5
    assert seifert.equivalent(SP(-3, ((2, 1),)), SP(-2, ((3, 1),)))
