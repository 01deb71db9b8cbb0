"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line.

Run directly with ``python3 tests/test_acceptance.py`` for the summary alone.
"""
import math
import random
import time
from fractions import Fraction

import pytest

from weilcorr.chars import char_data, sign_vectors
from weilcorr.correspond import (VectorForm, delta_condition_check, descend_phi, lift_psi,
                                 numeric_transform_check)
from weilcorr.discform import automorphisms, build, find_norm_transporter
from weilcorr.eisenstein import admissible_divisors, e_epsilon_star, eisenstein_rank
from weilcorr.ntheory import omega
from weilcorr.obstruct import H2_SPEC, PrincipalPart, build_f1_level12, constant_term
from weilcorr.qseries import QExpansion, eta_cusp_orders
from weilcorr.weilrep import S_MAT, T_MAT, identity, matmul2, rho, rho_S, rho_T

F1_LISTED = {-1: 1, 0: 1, 2: 2, 3: 1, 6: -2, 8: -2, 12: 4, 14: 4, 15: -1, 18: -6}


@pytest.fixture
def report(capsys):
    def emit(name, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else ""))
        assert ok, f"{name}: {detail}"
    return emit


@pytest.fixture(scope="module")
def f1():
    return build_f1_level12(200)


def test_01_f1_reproduction(report):
    t0 = time.perf_counter()
    f = build_f1_level12(200)
    dt = time.perf_counter() - t0
    bad = [n for n in range(-1, 19) if f.coeff(n) != F1_LISTED.get(n, 0)]
    report("1 f1 coefficients -1..18", not bad and dt < 10, f"mismatches {bad}, {dt:.2f}s")


def test_02_epsilon_condition(report, f1):
    C = char_data(3)
    eps, _ = sign_vectors(C)
    res = delta_condition_check(f1, eps, C)
    integral = all(c.denominator == 1 for c in f1.coeffs.values())
    report("2 f1 epsilon-condition and integrality below q^200",
           eps.as_dict() == {2: -1, 3: -1} and res.ok and integral and f1.trunc == 200,
           f"violation {res.violation}, integral {integral}")


def test_03_constant_term_two_routes(report, f1):
    C = char_data(3)
    ct = constant_term(PrincipalPart({-1: 1}, 12), C)
    E = e_epsilon_star(C, 2, 10)
    report("3 constant term: Bernoulli route = eta route = 1",
           ct == f1.coeff(0) == 1 and E.coeff(1) == -4, f"{ct} vs {f1.coeff(0)}, B(1) = {E.coeff(1)}")


def test_04_eisenstein_structure(report):
    C = char_data(3)
    ms = admissible_divisors(12)
    rank = eisenstein_rank(C, 2, 60, ms)
    E = e_epsilon_star(C, 2, 200)
    _, star = sign_vectors(C)
    coprime = QExpansion({n: c for n, c in E.items() if math.gcd(n, 12) == 1}, 200)
    res = delta_condition_check(coprime, star, C)
    report("4 Eisenstein rank 4 and E^eps* structure",
           ms == [1, 3, 4, 12] and rank == 4 == 2 ** omega(12) and E.coeff(0) == 1 and res.ok,
           f"rank {rank}, B(0) = {E.coeff(0)}, violation {res.violation}")


def random_sl2(rng, bound=12):
    while True:
        a, c = rng.randint(-bound, bound), rng.randint(-bound, bound)
        g, x, y = _egcd(a, c)
        if g == 1:
            # a*x + c*y = 1, so (a, -y; c, x) has determinant 1
            k = rng.randint(-3, 3)
            return ((a, -y + k * a), (c, x + k * c))


def _egcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def test_05_weil_relations(report):
    t0 = time.perf_counter()
    rng = random.Random(20240512)
    failures = []
    for n1 in (2, 3, 5):
        D = build(n1)
        S, T = rho_S(D), rho_T(D)
        I = identity(D.N, D.size)
        checks = {"S^4": S ** 4 == I, "(ST)^3": (S @ T) ** 3 == S ** 2, "T^N": T ** D.N == I,
                  "unitary": S.is_unitary() and T.is_unitary()}
        for _ in range(20):
            A, B = random_sl2(rng), random_sl2(rng)
            if rho(D, matmul2(A, B)) != rho(D, A) @ rho(D, B):
                checks[f"hom {A} {B}"] = False
            if not rho(D, A).is_unitary():
                checks[f"unitary {A}"] = False
        failures += [f"N1={n1}: {k}" for k, ok in checks.items() if not ok]
    dt = time.perf_counter() - t0
    report("5 Weil representation relations for N1 = 2, 3, 5", not failures and dt < 30,
           f"{failures or 'none failed'}, {dt:.2f}s")


def test_06_norm_transitivity(report):
    problems = []
    for n1 in (2, 3, 5, 6, 7, 11, 13):
        D = build(n1)
        if len(automorphisms(D)) != 2 ** omega(D.N):
            problems.append(f"N1={n1}: |Aut| = {len(automorphisms(D))}")
        for b in D.elements:
            for g in D.elements:
                if D.norm_num(b) == D.norm_num(g):
                    sigma = find_norm_transporter(D, b, g)
                    if sigma(D, b) != g:
                        problems.append(f"N1={n1}: {b} -> {g}")
    report("6 norm transitivity and |Aut(D)| = 2^omega(N)", not problems, f"{problems[:3]}")


def test_07_round_trips(report, f1):
    D = build(3)
    ok = descend_phi(lift_psi(f1, D)) == f1
    rng = random.Random(7)
    for _ in range(5):
        comps = {}
        for r in D.norm_classes:
            ns = [n for n in range(-24, 120) if n % 12 == r]
            comps[r] = QExpansion({n: Fraction(rng.randint(-50, 50), rng.randint(1, 6))
                                   for n in rng.sample(ns, 4)}, 120, 12)
        F = VectorForm(D, comps)
        ok = ok and lift_psi(descend_phi(F), D) == F
    report("7 lift/descend round trips", ok)


def test_08_numeric_modularity(report, f1):
    F = lift_psi(f1, build(3))
    results = {name: numeric_transform_check(F, M, 1j, 200, 1e-6)
               for name, M in (("S", S_MAT), ("T", T_MAT), ("ST", matmul2(S_MAT, T_MAT)))}
    report("8 numeric transformation law for S, T, ST at tau = i", all(results.values()), f"{results}")


def test_09_eta_cusp_table(report):
    table = eta_cusp_orders(H2_SPEC, 12)
    want = {"oo": 1, "0": 1, "1/3": 0, "1/4": 1, "1/2": Fraction(1, 2), "1/6": Fraction(1, 2)}
    report("9 H2 cusp orders at level 12", table == want, f"{table}")


def test_10_local_norms(report):
    got = build(2).local_norms(2)
    want = {Fraction(v) % 1 for v in (0, Fraction(-1, 8), Fraction(1, 2), Fraction(1, 4),
                                      Fraction(1, 8), Fraction(3, 4))}
    report("10 2-adic local norms for N1 = 2", got == want, f"{sorted(got)}")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
