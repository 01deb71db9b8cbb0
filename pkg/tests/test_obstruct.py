import time
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weilcorr.chars import char_data, sign_vectors
from weilcorr.correspond import SWeight, delta_condition_check
from weilcorr.eisenstein import e_epsilon_star
from weilcorr.errors import InsufficientPrecision, NonCuspidalBasis, UnsupportedCase
from weilcorr.obstruct import (PrincipalPart, admissible_level12, build_f1_level12, constant_term,
                               existence_check, level12_principal_part, obstruction_pairing,
                               validate_principal_part)
from weilcorr.qseries import QExpansion

C12 = char_data(3)
S12 = SWeight(12)
F1_LISTED = {-1: 1, 0: 1, 2: 2, 3: 1, 6: -2, 8: -2, 12: 4, 14: 4, 15: -1, 18: -6}


def test_validate_examples():
    assert validate_principal_part(PrincipalPart({-1: 1}, 12), C12)
    res = validate_principal_part(PrincipalPart({-2: 1}, 12), C12)
    assert not res and res.violations[0][0] == -2
    # m = 3 is -1 mod 4, so (1/2) q^-3 violates the condition at p = 2
    res = validate_principal_part(PrincipalPart({-3: Fraction(1, 2)}, 12), C12)
    assert not res and res.violations == ((-3, (2,)),)
    assert validate_principal_part(PrincipalPart({-4: Fraction(1, 2)}, 12), C12)
    assert validate_principal_part(PrincipalPart({-6: Fraction(1, 4)}, 12), C12)


def test_admissibility_up_to_30():
    for m in range(1, 31):
        ok = validate_principal_part(level12_principal_part(m), C12).ok
        assert ok == admissible_level12(m)
        if not admissible_level12(m):
            assert not validate_principal_part(PrincipalPart({-m: 1}, 12), C12)
    assert level12_principal_part(6).coeffs == {-6: Fraction(1, 4)}


def test_pairing_examples():
    E = e_epsilon_star(C12, 2, 40)
    P = PrincipalPart({-1: 1}, 12)
    assert obstruction_pairing(P, QExpansion({}, 10), S12) == 0
    assert obstruction_pairing(P, E, S12) == -4
    with pytest.raises(InsufficientPrecision):
        obstruction_pairing(PrincipalPart({-12: 1}, 12), QExpansion({}, 5), S12)


@given(st.dictionaries(st.integers(-15, -1), st.integers(-5, 5), max_size=4),
       st.dictionaries(st.integers(-15, -1), st.integers(-5, 5), max_size=4), st.integers(-3, 3))
def test_pairing_bilinear(a, b, k):
    g = e_epsilon_star(C12, 2, 20)
    P, Q = PrincipalPart(a, 12), PrincipalPart(b, 12)
    assert obstruction_pairing(P + Q.scale(k), g, S12) == \
        obstruction_pairing(P, g, S12) + k * obstruction_pairing(Q, g, S12)


def test_existence_check():
    P = PrincipalPart({-1: 1}, 12)
    assert existence_check(P, [])
    with pytest.raises(NonCuspidalBasis):
        existence_check(P, [e_epsilon_star(C12, 2, 10)])
    g = QExpansion({1: 1, 2: -5}, 10)
    assert not existence_check(P, [g])
    assert existence_check(P, [QExpansion({2: 1, 3: -5}, 10)])


def test_constant_term():
    assert constant_term(PrincipalPart({-1: 1}, 12), C12) == 1
    assert constant_term(PrincipalPart({}, 12), C12) == 0
    E = e_epsilon_star(C12, 2, 10)
    P3 = PrincipalPart({-3: Fraction(1, 2)}, 12)
    assert constant_term(P3, C12) == -Fraction(1, 4) * 2 * Fraction(1, 2) * E.coeff(3)
    with pytest.raises(UnsupportedCase):
        constant_term(PrincipalPart({-1: 1}, 8), char_data(2))


def test_f1_coefficients():
    t0 = time.perf_counter()
    f = build_f1_level12(200)
    assert time.perf_counter() - t0 < 10
    assert f.trunc == 200
    for n in range(-1, 19):
        assert f.coeff(n) == F1_LISTED.get(n, 0)
    assert f.principal_part() == {-1: 1}
    assert f.coeff(1) == 0
    assert all(c.denominator == 1 for c in f.coeffs.values())
    eps, _ = sign_vectors(C12)
    assert delta_condition_check(f, eps, C12)


def test_f1_shorter_truncation_agrees():
    assert build_f1_level12(20).agrees(build_f1_level12(120))
    with pytest.raises(ValueError):
        build_f1_level12(10)


def test_two_routes_agree():
    assert constant_term(PrincipalPart({-1: 1}, 12), C12) == build_f1_level12(50).coeff(0)
