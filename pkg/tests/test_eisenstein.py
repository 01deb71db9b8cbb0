from fractions import Fraction

import pytest
import sympy

from oracles import chi12, gen_bernoulli2, legendre_brute
from weilcorr.chars import char_data, sign_vectors
from weilcorr.correspond import delta_condition_check
from weilcorr.eisenstein import (admissible_divisors, basis_independence_check, e_epsilon_star, eisenstein_m,
                                 eisenstein_rank, gen_bernoulli, l_value)
from weilcorr.errors import InvalidDivisor, PositiveArgument

C12 = char_data(3)


def trivial(n):
    return 1


def test_gen_bernoulli_examples():
    assert gen_bernoulli(2, trivial, 1) == Fraction(1, 6)
    assert gen_bernoulli(1, char_data(3).component(3)) == Fraction(-1, 3)
    assert gen_bernoulli(2, C12) == gen_bernoulli2(chi12, 12) == 4
    assert gen_bernoulli(2, char_data(5)) == gen_bernoulli2(lambda a: legendre_brute(a, 5), 5) == Fraction(4, 5)


def test_l_values():
    chi3 = char_data(3).component(3)
    assert l_value(0, chi3).value == -gen_bernoulli(1, chi3)
    assert l_value(-1, C12).value == -2
    assert l_value(-1, char_data(5)).value == Fraction(-2, 5)
    # zeta_K(-1) = zeta(-1) L(-1, chi_5) = 1/30 for K = Q(sqrt 5)
    assert Fraction(-1, 12) * l_value(-1, char_data(5)).value == Fraction(1, 30)
    with pytest.raises(PositiveArgument):
        l_value(1, C12)


def test_admissible_divisors():
    assert admissible_divisors(12) == [1, 3, 4, 12]
    assert admissible_divisors(5) == [1, 5]
    assert admissible_divisors(24) == [1, 3, 8, 24]


def test_eisenstein_m_examples():
    E1 = eisenstein_m(C12, 2, 1, 10)
    E12 = eisenstein_m(C12, 2, 12, 10)
    assert E1.coeff(1) == 2 and E12.coeff(1) == 2
    assert E1.coeff(0) == l_value(-1, C12).value
    for m in (3, 4, 12):
        assert eisenstein_m(C12, 2, m, 5).coeff(0) == 0
    with pytest.raises(InvalidDivisor):
        eisenstein_m(C12, 2, 2, 5)
    with pytest.raises(InvalidDivisor):
        eisenstein_m(C12, 2, 6, 5)


@pytest.mark.parametrize("m", [1, 3, 4, 12])
def test_eisenstein_m_coefficients_even_integers(m):
    E = eisenstein_m(C12, 2, m, 80)
    for n in range(1, 80):
        c = E.coeff(n)
        assert c.denominator == 1 and c.numerator % 2 == 0


def test_e_epsilon_star():
    E = e_epsilon_star(C12, 2, 200)
    assert E.coeff(0) == 1
    assert E.coeff(1) == Fraction(8) / l_value(-1, C12).value == -4
    _, star = sign_vectors(C12)
    assert delta_condition_check(E, star, C12)


@pytest.mark.parametrize("n1", [3, 5, 7, 13])
def test_e_epsilon_star_projection_identity(n1):
    # for (n, N) = 1: B(n) = L^-1 * A(n) * prod_p (1 + chi_p(n)), A the coefficients of E_1
    C = char_data(n1)
    L = l_value(-1, C).value
    E = e_epsilon_star(C, 2, 120)
    A = eisenstein_m(C, 2, 1, 120)
    _, star = sign_vectors(C)
    assert delta_condition_check(E, star, C)
    from math import gcd
    for n in range(1, 120):
        if gcd(n, C.N) == 1:
            prod = 1
            for c in C.components:
                prod *= 1 + c(n)
            assert E.coeff(n) == A.coeff(n) * prod / L


def test_rank_against_sympy():
    for n1, want in ((3, 4), (5, 2)):
        C = char_data(n1)
        rows = [[eisenstein_m(C, 2, m, 12).coeff(n) for n in range(12)] for m in admissible_divisors(C.N)]
        assert sympy.Matrix(rows).rank() == want
        assert eisenstein_rank(C, 2, 12) == want
        assert basis_independence_check(C, 2, 12)
    assert eisenstein_rank(C12, 2, 12, [4]) == 1


def test_weight_four():
    E = e_epsilon_star(C12, 4, 30)
    assert E.coeff(0) == 1
    _, star = sign_vectors(C12)
    assert delta_condition_check(E, star, C12)
    with pytest.raises(ValueError):
        eisenstein_m(C12, 3, 1, 5)
