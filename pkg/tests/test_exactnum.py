import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from weilcorr.errors import DivisionByZero, OrderMismatch
from weilcorr.exactnum import (CycExt, Cyclotomic, cycext_arith, cyclotomic_polynomial, root_of_unity,
                               sqrt_in_field, to_complex)

ORDERS = [1, 2, 3, 4, 5, 8, 12, 24]


def cyc(order):
    d = len(cyclotomic_polynomial(order)) - 1
    return st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=d, max_size=d).map(
        lambda c: Cyclotomic.from_coeffs(order, c))


@st.composite
def pair(draw):
    n = draw(st.sampled_from(ORDERS))
    return draw(cyc(n)), draw(cyc(n)), draw(cyc(n))


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)


def test_roots_of_unity():
    z = root_of_unity(1, 12)
    assert z ** 12 == 1
    assert z ** 3 == root_of_unity(3, 12)
    assert z ** 6 == -1
    assert root_of_unity(-1, 12) == z.conj()
    assert abs(root_of_unity(3, 12).to_complex() - 1j) < 1e-15


@given(pair())
def test_field_axioms(t):
    a, b, c = t
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert (a - a).is_zero()


@given(pair())
def test_inverse(t):
    a, _, _ = t
    assume(not a.is_zero())
    assert a * a.inverse() == 1
    assert (a / a) == 1


@given(pair())
def test_embedding_is_homomorphism(t):
    a, b, _ = t
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-8
    assert abs(a.conj().to_complex() - a.to_complex().conjugate()) < 1e-9


@given(pair())
def test_norm_multiplicative(t):
    a, b, _ = t
    assert (a * b).norm() == a.norm() * b.norm()


def test_inverse_of_zero_and_mismatch():
    with pytest.raises(DivisionByZero):
        Cyclotomic.rational(12, 0).inverse()
    with pytest.raises(OrderMismatch):
        _ = root_of_unity(1, 12) + root_of_unity(1, 8)


def test_sqrt_in_field():
    # sqrt(12) in Q(zeta_12), sqrt(5) in Q(zeta_5), sqrt(8) in Q(zeta_8)
    for r, n in [(12, 12), (5, 5), (8, 8), (3, 12), (13, 13), (4, 3)]:
        s = sqrt_in_field(r, n)
        assert s * s == r
        assert abs(s.to_complex() - math.sqrt(r)) < 1e-12
    assert sqrt_in_field(3, 5) is None


def test_cycext_collapse_equality():
    s = sqrt_in_field(12, 12)
    one_over_root = CycExt(Cyclotomic.rational(12, 0), 1, 12)
    same = CycExt(s * Fraction(1, 12), 0, 12)
    assert one_over_root == same
    assert hash(one_over_root) == hash(same)
    assert one_over_root * one_over_root == CycExt(Cyclotomic.rational(12, Fraction(1, 12)))


def test_cycext_inverse_both_routes():
    z = root_of_unity(1, 12)
    x = CycExt(z, 3, 12)
    assert x * x.inverse() == CycExt(Cyclotomic.rational(12, 1))
    # a - b/sqrt(R) vanishes here, forcing the collapsed route
    s = sqrt_in_field(12, 12)
    y = CycExt(s * Fraction(1, 12), 1, 12)
    assert y * y.inverse() == CycExt(Cyclotomic.rational(12, 1))
    assert cycext_arith(x, None, "inv") == x.inverse()


def test_cycext_json_round_trip_and_complex():
    x = CycExt(root_of_unity(5, 12), root_of_unity(2, 12) * Fraction(-3, 7), 12)
    assert CycExt.from_json(x.to_json()) == x
    want = cmath.exp(2j * cmath.pi * 5 / 12) - Fraction(3, 7) * cmath.exp(2j * cmath.pi * 2 / 12) / math.sqrt(12)
    assert abs(to_complex(x) - want) < 1e-13
    hi = to_complex(x, precision=40)
    assert abs(complex(hi) - want) < 1e-13
    with pytest.raises(ValueError):
        to_complex(x, precision=10)
