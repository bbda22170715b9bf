from fractions import Fraction
from math import floor, gcd

import pytest
from hypothesis import given, strategies as st

from finsurg.errors import InvalidArgumentError
from finsurg.numtheory import (
    dedekind_sum,
    frac,
    mod_inverse,
    parse_rational,
    reciprocity_rhs,
    render,
    sawtooth,
)


def dedekind_by_definition(p, q):
    """Oracle: the defining sum, term by term in Fractions."""
    return sum((sawtooth(Fraction(i, q)) * sawtooth(Fraction(p * i, q)) for i in range(1, q)), Fraction(0))


@pytest.mark.parametrize(
    "x, expected",
    [(3, 0), (Fraction(1, 4), Fraction(-1, 4)), (Fraction(1, 2), 0), (Fraction(-1, 4), Fraction(1, 4)), (-2, 0)],
)
def test_sawtooth(x, expected):
    assert sawtooth(x) == expected


def test_frac():
    assert frac(Fraction(-1, 3)) == Fraction(2, 3)
    assert frac(Fraction(7, 3)) == Fraction(1, 3)
    assert frac(4) == 0


@pytest.mark.parametrize(
    "p, q, expected",
    [(1, 1, 0), (1, 3, Fraction(1, 18)), (2, 3, Fraction(-1, 18)), (4, 5, Fraction(-1, 5)), (0, 7, 0)],
)
def test_dedekind_values(p, q, expected):
    assert dedekind_sum(p, q) == expected
    assert dedekind_by_definition(p, q) == expected


@pytest.mark.parametrize("q", [0, -3])
def test_dedekind_rejects_bad_q(q):
    with pytest.raises(InvalidArgumentError):
        dedekind_sum(1, q)


@given(st.integers(-300, 300), st.integers(1, 60))
def test_dedekind_matches_definition(p, q):
    assert dedekind_sum(p, q) == dedekind_by_definition(p, q)


@given(st.integers(-500, 500), st.integers(1, 120))
def test_dedekind_odd_and_periodic(p, q):
    assert dedekind_sum(-p, q) == -dedekind_sum(p, q)
    assert dedekind_sum(p, q) == dedekind_sum(p % q, q)


@pytest.mark.parametrize("a, b, expected", [(1, 1, 0), (1, 3, Fraction(1, 18)), (2, 3, Fraction(-1, 18))])
def test_reciprocity_rhs_values(a, b, expected):
    assert reciprocity_rhs(a, b) == expected
    assert dedekind_sum(a, b) + dedekind_sum(b, a) == expected


@given(st.integers(1, 300), st.integers(1, 300))
def test_reciprocity(a, b):
    if gcd(a, b) != 1:
        with pytest.raises(InvalidArgumentError):
            reciprocity_rhs(a, b)
    else:
        assert dedekind_sum(a, b) + dedekind_sum(b, a) == reciprocity_rhs(a, b)


def test_reciprocity_rejects_nonpositive():
    with pytest.raises(InvalidArgumentError):
        reciprocity_rhs(0, 1)


def test_vanishing_identity_small():
    for m in range(1, 21):
        for n in range(m + 1, 201, 2):
            if gcd(2 * m, n) == 1:
                assert dedekind_sum(n, n - m) + dedekind_sum(-m, n - m) == 0


@pytest.mark.parametrize("w, a, expected", [(1, 9, 1), (4, 5, 4), (3, 7, 5), (5, 1, 1), (-1, 5, 4)])
def test_mod_inverse_values(w, a, expected):
    assert mod_inverse(w, a) == expected


def test_mod_inverse_exhaustive():
    for a in range(1, 400):
        for w in range(a):
            if gcd(w, a) == 1:
                inv = mod_inverse(w, a)
                assert 0 < inv <= a and (w * inv) % a == 1 % a


@given(st.integers(-10**6, 10**6), st.integers(2, 10**4))
def test_mod_inverse_property(w, a):
    if gcd(w, a) == 1:
        assert (mod_inverse(w, a) * w) % a == 1
    else:
        with pytest.raises(InvalidArgumentError):
            mod_inverse(w, a)


@given(st.fractions())
def test_render_round_trip(x):
    text = render(x)
    assert "." not in text
    assert parse_rational(text) == x


def test_render_examples():
    assert render(Fraction(-5, 4)) == "-5/4"
    assert render(Fraction(6, 2)) == "3"
    with pytest.raises(InvalidArgumentError):
        parse_rational("0.25")
