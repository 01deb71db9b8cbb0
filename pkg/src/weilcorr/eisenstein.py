"""Eisenstein series of character chi_D, and L-values at nonpositive integers."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .chars import CharData, chi_complement, chi_component
from .errors import InvalidDivisor, PositiveArgument, ZeroLValue
from .ntheory import bernoulli_poly, part, prime_divisors
from .qseries import DEFAULT_TRUNC, QExpansion


@dataclass(frozen=True)
class LValue:
    value: Fraction
    modulus: int
    s: int

    def __float__(self):
        return float(self.value)


def _modulus(chi) -> int:
    for attr in ("modulus", "N"):
        m = getattr(chi, attr, None)
        if m is not None:
            return m
    raise TypeError("character needs a modulus or N attribute")


def gen_bernoulli(n: int, chi, modulus: int | None = None) -> Fraction:
    """B_{n,chi} = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f) for a character of modulus f."""
    if n < 1:
        raise ValueError("n must be positive")
    f = modulus if modulus is not None else _modulus(chi)
    s = sum((chi(a) * bernoulli_poly(n, Fraction(a, f)) for a in range(1, f + 1)), Fraction(0))
    return f ** (n - 1) * s


def l_value(s: int, chi, modulus: int | None = None) -> LValue:
    """L(s, chi) for s = 1 - n <= 0, as -B_{n,chi}/n."""
    if s > 0:
        raise PositiveArgument(f"s = {s} is positive")
    n = 1 - s
    f = modulus if modulus is not None else _modulus(chi)
    return LValue(-gen_bernoulli(n, chi, f) / n, f, s)


def admissible_divisors(N: int) -> list[int]:
    """Divisors m of N with m = N_m, i.e. products of full prime-power parts."""
    pp = [part(N, p) for p in prime_divisors(N)]
    out = []
    for r in range(len(pp) + 1):
        for sub in combinations(pp, r):
            m = 1
            for q in sub:
                m *= q
            out.append(m)
    return sorted(out)


def _check_weight(w: int):
    if w < 2 or w % 2:
        raise ValueError(f"weight must be even and at least 2, got {w}")


def eisenstein_m(C: CharData, w: int, m: int, trunc: int = DEFAULT_TRUNC) -> QExpansion:
    """E_m of weight w: delta_{1,m} L(1-w, chi_D) + 2 sum_n sum_{d|n} chi_m(n/d) chi'_m(d) d^(w-1) q^n."""
    _check_weight(w)
    N = C.N
    if m < 1 or N % m or part(N, m) != m:
        raise InvalidDivisor(f"{m} is not a divisor of {N} with m = N_m")
    coeffs = [0] * trunc
    cm = [chi_component(C, m, r) for r in range(N)]
    cc = [chi_complement(C, m, r) for r in range(N)]
    for d in range(1, trunc):
        x = cc[d % N]
        if not x:
            continue
        dw = x * d ** (w - 1)
        for k in range(1, (trunc - 1) // d + 1):
            y = cm[k % N]
            if y:
                coeffs[k * d] += y * dw
    out = {n: 2 * c for n, c in enumerate(coeffs) if n and c}
    if m == 1 and trunc > 0:
        out[0] = l_value(1 - w, C).value
    return QExpansion(out, trunc)


def e_epsilon_star(C: CharData, w: int, trunc: int = DEFAULT_TRUNC) -> QExpansion:
    """L(1-w, chi_D)^{-1} sum_m E_m, normalized so the constant term is 1."""
    L = l_value(1 - w, C).value
    if L == 0:
        raise ZeroLValue(f"L({1 - w}, chi_{C.N}) vanishes")
    total = QExpansion({}, trunc)
    for m in admissible_divisors(C.N):
        total = total + eisenstein_m(C, w, m, trunc)
    return total.scale(1 / L)


def rational_rank(rows) -> int:
    """Rank of a rational matrix by fraction-exact Gaussian elimination."""
    mat = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        p = mat[rank][col]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col] / p
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def eisenstein_rank(C: CharData, w: int, trunc: int, divisors=None) -> int:
    ms = admissible_divisors(C.N) if divisors is None else divisors
    rows = []
    for m in ms:
        E = eisenstein_m(C, w, m, trunc)
        rows.append([E.coeff(n) for n in range(trunc)])
    return rational_rank(rows)


def basis_independence_check(C: CharData, w: int, trunc: int) -> bool:
    """True iff the E_m are linearly independent on q^0 .. q^(trunc-1)."""
    ms = admissible_divisors(C.N)
    return eisenstein_rank(C, w, trunc, ms) == len(ms)
