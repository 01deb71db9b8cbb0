import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weilcorr.chars import SignVector, char_data, sign_vectors
from weilcorr.correspond import (SWeight, VectorForm, delta_condition_check, descend_phi, lift_psi,
                                 numeric_transform_check, project_coprime, realizable_coprime,
                                 transform_deviation)
from weilcorr.discform import build, count_norm_class
from weilcorr.eisenstein import e_epsilon_star
from weilcorr.errors import ConvergenceTooSlow, InconsistentComponents, OutOfRange, UnrealizedClass
from weilcorr.obstruct import build_f1_level12
from weilcorr.qseries import QExpansion
from weilcorr.weilrep import S_MAT, T_MAT, matmul2

C12 = char_data(3)
D12 = build(3)
EPS, STAR = sign_vectors(C12)


@pytest.fixture(scope="module")
def f1():
    return build_f1_level12(200)


@pytest.fixture(scope="module")
def F1(f1):
    return lift_psi(f1, D12)


def test_s_weight():
    s = SWeight(12)
    assert [s(m) for m in (0, 1, 2, 3, 4, 6, 11, -1, -3)] == [4, 1, 2, 2, 2, 4, 1, 1, 2]


def test_delta_condition_examples(f1):
    assert delta_condition_check(QExpansion({}, 10), EPS, C12)
    assert delta_condition_check(f1.truncate(19), EPS, C12)
    res = delta_condition_check(QExpansion({5: 1}, 10), EPS, C12)
    assert not res and res.violation == 5 and res.primes == (2,)


@pytest.mark.parametrize("n1", [2, 3, 5, 7])
def test_eps_condition_is_realizability_on_units(n1):
    C = char_data(n1)
    eps, _ = sign_vectors(C)
    for n, (realized, allowed) in realizable_coprime(build(n1), C, eps).items():
        assert realized == allowed, n


def test_lift_examples(f1, F1):
    assert lift_psi(QExpansion({}, 50), D12).components[11].is_zero()
    c11 = F1.components[11]
    assert (c11.coeff(-1), c11.coeff(11)) == (1, 0)
    c0 = F1.components[0]
    assert (c0.coeff(0), c0.coeff(12)) == (4, 16)
    for r, comp in F1.components.items():
        for n, c in comp.items():
            assert c == SWeight(12)(n) * f1.coeff(n)


def test_lift_rejects_unrealized_class():
    with pytest.raises(UnrealizedClass):
        lift_psi(QExpansion({1: 1}, 10), D12)


def test_descend_examples(f1, F1):
    assert descend_phi(F1) == f1
    assert descend_phi(lift_psi(QExpansion({}, 30), D12)).is_zero()
    comps = {r: QExpansion({}, 30, 12) for r in D12.norm_classes}
    comps[11] = QExpansion({-1: 1}, 30, 12)
    got = descend_phi(VectorForm(D12, comps))
    assert got.coeffs == {-1: 1}
    assert count_norm_class(D12, 11) * Fraction(1, 4) / SWeight(12)(11) == 1


def test_vector_form_validation():
    with pytest.raises(InconsistentComponents):
        VectorForm(D12, {11: QExpansion({0: 1}, 30, 12)})
    with pytest.raises(UnrealizedClass):
        VectorForm(D12, {1: QExpansion({}, 30, 12)})
    fam = {g: QExpansion({}, 10, 12) for g in D12.elements}
    fam[(0, 0, 1)] = QExpansion({-4: 1}, 10, 12)
    with pytest.raises(InconsistentComponents):
        VectorForm.from_family(D12, fam)


def test_family_and_json(F1):
    fam = F1.family()
    assert len(fam) == 12 and fam[(0, 0, 0)] is F1.components[0]
    assert VectorForm.from_family(D12, fam) == F1
    assert VectorForm.from_json(F1.to_json()) == F1


def random_member(draw, D, trunc=40):
    realized = set(D.norm_classes)
    ns = [n for n in range(-3, trunc) if n % D.N in realized]
    coeffs = draw(st.dictionaries(st.sampled_from(ns), st.fractions(min_value=-20, max_value=20,
                                                                        max_denominator=5), max_size=12))
    return QExpansion(coeffs, trunc)


@given(st.data(), st.sampled_from([2, 3, 5, 7]))
def test_round_trip_scalar(data, n1):
    D = build(n1)
    f = random_member(data.draw, D)
    eps, _ = sign_vectors(char_data(n1))
    assert delta_condition_check(f, eps, char_data(n1))
    assert descend_phi(lift_psi(f, D)) == f


@given(st.data())
def test_round_trip_vector(data):
    comps = {}
    for r in D12.norm_classes:
        ns = [n for n in range(-12, 60) if n % 12 == r]
        cs = data.draw(st.dictionaries(st.sampled_from(ns), st.integers(-30, 30), max_size=4))
        comps[r] = QExpansion(cs, 60, 12)
    F = VectorForm(D12, comps)
    assert lift_psi(descend_phi(F), D12) == F


def test_project_coprime():
    f = QExpansion({5: 1}, 10)
    assert project_coprime(f, STAR, C12).coeff(5) == 0
    g = QExpansion({-1: 3, 11: 2, 13: 1, 2: 7}, 20)
    p = project_coprime(g, EPS, C12)
    assert (p.coeff(-1), p.coeff(11), p.coeff(2)) == (3, 2, 7)
    assert p.uncertified
    assert not project_coprime(QExpansion({1: 1}, 5), STAR, C12).uncertified


@given(st.dictionaries(st.integers(-5, 40), st.integers(-9, 9), max_size=10))
def test_project_coprime_sign_sum(coeffs):
    f = QExpansion(coeffs, 41)
    total = project_coprime(f, EPS, C12) + project_coprime(f, -EPS, C12)
    mixed = SignVector.from_dict({2: -1, 3: 1})
    total = total + project_coprime(f, mixed, C12) + project_coprime(f, -mixed, C12)
    for n in range(-5, 41):
        if math.gcd(n, 12) == 1:
            assert total.coeff(n) == f.coeff(n)


def test_numeric_checks(F1):
    assert transform_deviation(F1, T_MAT, 1j, 200)[0] < 1e-12
    assert transform_deviation(F1, ((-1, 0), (0, -1)), 1j, 200)[0] == 0
    for M in (S_MAT, T_MAT, matmul2(S_MAT, T_MAT), matmul2(T_MAT, S_MAT)):
        for tau in (1j, 0.3 + 1.1j):
            assert numeric_transform_check(F1, M, tau, 200, 1e-6)


def test_numeric_check_detects_wrong_form(F1):
    comps = dict(F1.components)
    comps[0] = comps[0] + QExpansion({12: 1}, 200, 12)
    bad = VectorForm(D12, comps)
    assert not numeric_transform_check(bad, S_MAT, 1j, 200, 1e-6)


def test_numeric_check_errors(F1):
    with pytest.raises(OutOfRange):
        numeric_transform_check(F1, S_MAT, 0.5j, 200)
    with pytest.raises(ConvergenceTooSlow):
        numeric_transform_check(F1, S_MAT, 1j, 30, 1e-12)


def test_dual_lift_of_eisenstein_series():
    E = e_epsilon_star(C12, 2, 200)
    F = lift_psi(E, D12.negated(), 2)
    for M in (S_MAT, matmul2(S_MAT, T_MAT)):
        assert numeric_transform_check(F, M, 1j, 200, 1e-9)
