import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from copatt.counting import binom
from copatt.errors import CapMismatchError
from copatt.series import (RationalGF, TruncatedSeries3, add, coeff, expand, invert_unit, mul,
                           poly, poly_mul, poly_pow)

CAPS = (8, 8, 8)

exponent = st.integers(0, 8)
terms = st.dictionaries(st.tuples(exponent, exponent, exponent), st.integers(-50, 50), max_size=10)


@st.composite
def series(draw, unit=False):
    t = draw(terms)
    if unit:
        t[0, 0, 0] = draw(st.sampled_from((1, -1)))
    return TruncatedSeries3.from_terms(t, CAPS, exact=False)


ONE = TruncatedSeries3.one(CAPS, exact=False)
ZERO = TruncatedSeries3.zero(CAPS)


@settings(max_examples=200, deadline=None)
@given(series(), series(), series())
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + ZERO == f
    assert f * ONE == f
    assert f - f == ZERO


@settings(max_examples=200, deadline=None)
@given(series(unit=True))
def test_invert_unit_is_two_sided(f):
    g = invert_unit(f)
    assert f * g == ONE
    assert g * f == ONE


@settings(max_examples=200, deadline=None)
@given(series(), series(), st.tuples(exponent, exponent, exponent))
def test_truncation_commutes_with_arithmetic(f, g, small):
    assert (f * g).restrict(small) == f.restrict(small) * g.restrict(small)
    assert (f + g).restrict(small) == f.restrict(small) + g.restrict(small)


@settings(max_examples=50, deadline=None)
@given(series(unit=True), st.tuples(exponent, exponent, exponent))
def test_inverse_truncates_coherently(f, small):
    assert invert_unit(f).restrict(small) == invert_unit(f.restrict(small))


def test_geometric_telescopes():
    one_minus_x = TruncatedSeries3.from_terms({(0, 0, 0): 1, (1, 0, 0): -1}, CAPS)
    assert mul(one_minus_x, TruncatedSeries3.geometric(CAPS)) == ONE
    assert invert_unit(one_minus_x) == TruncatedSeries3.geometric(CAPS)


def test_small_products():
    x = TruncatedSeries3.from_terms({(1, 0, 0): 1}, CAPS)
    y = TruncatedSeries3.from_terms({(0, 1, 0): 1}, CAPS)
    assert mul(x, y).terms() == [((1, 1, 0), 1)]
    assert add(x, ZERO) == x
    assert invert_unit(TruncatedSeries3.one(CAPS)) == ONE


def test_inverse_of_composition_frame():
    # 1/(1 - x - xy) = sum of (x(1 + y))^m
    f = TruncatedSeries3.from_terms({(0, 0, 0): 1, (1, 0, 0): -1, (1, 1, 0): -1}, CAPS)
    g = invert_unit(f)
    for n in range(1, 9):
        for l in range(9):
            assert g.coeff(n, l, 0) == binom(n, l)
    assert g.coeff(4, 2, 0) == 6


def test_invert_needs_a_unit():
    with pytest.raises(ValueError):
        invert_unit(TruncatedSeries3.from_terms({(0, 0, 0): 2}, CAPS))
    with pytest.raises(ValueError):
        invert_unit(TruncatedSeries3.from_terms({(1, 0, 0): 1}, CAPS))


def test_caps_must_match():
    with pytest.raises(CapMismatchError):
        ONE + TruncatedSeries3.one((4, 4, 4))
    with pytest.raises(CapMismatchError):
        ONE * TruncatedSeries3.one((4, 4, 4))


def test_out_of_cap_coefficient_is_an_error():
    with pytest.raises(IndexError):
        coeff(ZERO, 9, 0, 0)
    with pytest.raises(IndexError):
        ZERO.coeff(-1)
    assert coeff(ZERO, 3, 2, 1) == 0


def test_truncated_series_cannot_grow():
    with pytest.raises(CapMismatchError):
        TruncatedSeries3.geometric((3, 0, 0)).restrict((5, 0, 0))
    grown = poly({2: 1}).restrict((5, 1, 1))
    assert grown.coeff(2) == 1 and grown.exact


def test_expand_examples():
    x_over = RationalGF(poly({1: 1}), poly({0: 1, 1: -1}))
    assert coeff(expand(x_over, (5, 0, 0)), 5) == 1
    two = RationalGF(poly({2: 1}), poly_pow(poly({0: 1, 1: -1}), 2))
    assert expand(two, (6, 0, 0)).coeff(4) == 3
    empty = RationalGF(poly({0: 1}), poly({0: 1}))
    assert expand(empty, (6, 0, 0)).terms() == [((0, 0, 0), 1)]
    same = RationalGF(poly({0: 1, 1: -1}), poly({0: 1, 1: -1}))
    assert expand(same, (6, 0, 0)).terms() == [((0, 0, 0), 1)]


def test_rational_needs_unit_denominator():
    with pytest.raises(ValueError):
        RationalGF(poly({0: 1}), poly({0: 2, 1: 1}))


@pytest.mark.parametrize("l", range(0, 8))
def test_composition_generating_function(l):
    gf = RationalGF(poly({l: 1}), poly_pow(poly({0: 1, 1: -1}), l))
    s = expand(gf, (14, 0, 0))
    for n in range(15):
        want = 1 if n == l == 0 else binom(n - 1, l - 1)
        assert s.coeff(n) == want


def test_rational_arithmetic_and_specialize():
    a = RationalGF(poly({1: 1}), poly({0: 1, 1: -1}))
    b = RationalGF(poly({(1, 1, 0): 1}), poly({0: 1, 2: -1}))
    caps = (10, 2, 0)
    assert expand(a + b, caps) == expand(a, caps) + expand(b, caps)
    assert expand(a * b, caps) == expand(a, caps) * expand(b, caps)
    flat = b.specialize(y=1)
    assert expand(flat, (10, 0, 0)).coeff(5) == 1


def test_big_coefficients_stay_exact():
    f = poly_pow(poly({0: 1, 1: 1}), 90)
    assert f.coeff(45) == binom(90, 45)
    assert f.coeff(45) > np.iinfo(np.int64).max


def test_dump_format():
    p = poly({(1, 0, 2): 3, (0, 1, 0): -1})
    assert p.dump() == "0 1 0 -1\n1 0 2 3"
    assert poly_mul(p, poly({0: 1})).dump() == p.dump()
