"""Existence criterion for weakly holomorphic forms with prescribed principal part.

A principal part P = sum_{n<0} a(n) q^n satisfying the epsilon-condition is
realized by a form of weight k <= 0 iff the pairing
sum_{n<0} s(n) a(n) b(-n) vanishes for every cusp form g = sum b(n) q^n of
weight 2 - k with the dual sign condition.  The constant term of the
realizing form is the same pairing taken against E^{eps*}, divided by -s(0).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chars import CharData, char_data, sign_vectors
from .correspond import ConditionResult, SWeight, delta_violations, s_weight
from .eisenstein import e_epsilon_star
from .errors import InsufficientPrecision, NonCuspidalBasis, UnsupportedCase
from .qseries import QExpansion, eta_quotient, frak_e2

H2_SPEC = ((1, 2), (3, -2), (4, 1), (6, 2), (12, 1))


@dataclass(frozen=True)
class PrincipalPart:
    coeffs: dict = field(hash=False)
    N: int
    weight: int = 0

    def __post_init__(self):
        for n in self.coeffs:
            if n >= 0:
                raise ValueError(f"principal part exponents must be negative, got {n}")
        if self.weight > 0 or self.weight % 2:
            raise ValueError("weight must be even and nonpositive")
        object.__setattr__(self, "coeffs", {int(n): Fraction(c) for n, c in self.coeffs.items() if c})

    @property
    def depth(self) -> int:
        """max |n| over the support (0 if empty)."""
        return max((-n for n in self.coeffs), default=0)

    def __add__(self, other: PrincipalPart) -> PrincipalPart:
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, 0) + c
        return PrincipalPart(out, self.N, self.weight)

    def scale(self, c) -> PrincipalPart:
        return PrincipalPart({n: c * v for n, v in self.coeffs.items()}, self.N, self.weight)

    @classmethod
    def parse(cls, text: str, N: int, weight: int = 0) -> PrincipalPart:
        """``"-1:1,-4:1/2"`` -> {-1: 1, -4: 1/2}.  Positive keys are read as q^(-n)."""
        out = {}
        for item in text.split(","):
            item = item.strip()
            if not item:
                continue
            n, c = item.split(":")
            n = int(n)
            out[-abs(n)] = out.get(-abs(n), 0) + Fraction(c)
        return cls(out, N, weight)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violations: tuple = ()

    def __bool__(self):
        return self.ok


def validate_principal_part(P: PrincipalPart, C: CharData) -> ValidationResult:
    """Every supported n must satisfy the epsilon-condition."""
    eps, _ = sign_vectors(C)
    bad = tuple((n, delta_violations(n, eps, C)) for n in sorted(P.coeffs) if delta_violations(n, eps, C))
    return ValidationResult(not bad, bad)


def obstruction_pairing(P: PrincipalPart, g: QExpansion, S: SWeight) -> Fraction:
    """sum_{n<0} s(n) a(n) b(-n)."""
    if g.den != 1:
        raise ValueError("g must have integral exponents")
    if any(n < 0 for n in g.coeffs):
        raise ValueError("g must be holomorphic at infinity")
    if P.coeffs and g.trunc <= P.depth:
        raise InsufficientPrecision(f"need b(n) for n <= {P.depth}, g known below {g.trunc}")
    return sum((S(n) * a * g.coeff(-n) for n, a in P.coeffs.items()), Fraction(0))


def existence_check(P: PrincipalPart, cusp_basis) -> bool:
    """True iff P pairs to zero with every supplied cusp form.

    The basis is trusted to span the relevant cusp space; only cuspidality
    (b(0) = 0) is verified.
    """
    S = s_weight(P.N)
    for g in cusp_basis:
        if g.trunc > 0 and g.coeff(0) != 0:
            raise NonCuspidalBasis("cusp basis element has a nonzero constant term")
    return all(obstruction_pairing(P, g, S) == 0 for g in cusp_basis)


def constant_term(P: PrincipalPart, C: CharData, trunc: int | None = None) -> Fraction:
    """a(0) = -(1/s(0)) sum_{n<0} s(n) a(n) B(-n), B the coefficients of E^{eps*}."""
    if C.N1 % 4 == 2:
        raise UnsupportedCase("the constant term is only determined for N1 = 1, 3 mod 4")
    if not P.coeffs:
        return Fraction(0)
    need = P.depth + 1
    E = e_epsilon_star(C, 2 - P.weight, max(need, trunc or 0))
    S = s_weight(C.N)
    return -obstruction_pairing(P, E, S) / S(0)


def build_f1_level12(trunc: int = 200) -> QExpansion:
    """The level-12 weight-0 form with principal part q^-1, as frak_E2 / H2.

    H2 starts at q^1, so both inputs are taken two terms deeper to certify
    the quotient through q^(trunc-1).
    """
    if trunc < 20:
        raise ValueError("trunc must be at least 20")
    h = eta_quotient(H2_SPEC, trunc + 2)
    e = frak_e2(trunc + 2)
    return (e / h).truncate(trunc)


def admissible_level12(m: int) -> bool:
    """m is not -1 mod 4 and not -1 mod 3."""
    return m % 4 != 3 and m % 3 != 2


def level12_principal_part(m: int) -> PrincipalPart:
    """2^-omega((m, 12)) q^-m."""
    S = s_weight(12)
    return PrincipalPart({-m: Fraction(1, S(m))}, 12, 0)


def level12_check(m: int) -> ConditionResult:
    C = char_data(3)
    res = validate_principal_part(level12_principal_part(m), C)
    return ConditionResult(res.ok, None if res.ok else -m)
