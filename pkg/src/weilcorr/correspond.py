"""Scalar forms with sign conditions versus Aut(D)-invariant vector-valued forms.

The dictionary is coefficientwise: the vector-valued component on the norm
class r = N q(gamma) carries ``s(n) a(n) q^(n/N)`` for every n = r mod N,
where ``s(n) = 2^omega(gcd(n, N))``.  Components are keyed by norm class;
for these discriminant forms Aut(D) acts transitively on each class, so an
invariant form is determined by one series per class.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .chars import CharData, SignVector
from .discform import DiscriminantForm, build
from .errors import ConvergenceTooSlow, InconsistentComponents, OutOfRange, UnrealizedClass
from .ntheory import omega
from .qseries import QExpansion
from .weilrep import as_matrix, rho


class SWeight:
    """s(m) = 2^omega(gcd(m, N)); s(0) = 2^omega(N)."""

    def __init__(self, N: int):
        self.N = N
        self._table = tuple(2 ** omega(math.gcd(r, N)) for r in range(N))

    def __call__(self, m: int) -> int:
        return self._table[m % self.N]

    def __repr__(self):
        return f"SWeight(N={self.N})"


@lru_cache(maxsize=None)
def s_weight(N: int) -> SWeight:
    return SWeight(N)


@dataclass(frozen=True)
class ConditionResult:
    ok: bool
    violation: int | None = None
    primes: tuple[int, ...] = ()

    def __bool__(self):
        return self.ok


def delta_violations(n: int, delta: SignVector, C: CharData) -> tuple[int, ...]:
    """Primes p | N with chi_p(n) = -delta_p."""
    return tuple(c.prime for c in C.components if c(n) == -delta[c.prime])


def delta_condition_check(f: QExpansion, delta: SignVector, C: CharData) -> ConditionResult:
    """a(n) = 0 whenever chi_p(n) = -delta_p for some p | N, over the stored window."""
    if f.den != 1:
        raise ValueError("sign conditions apply to integral exponents")
    for n, _ in f.items():
        bad = delta_violations(n, delta, C)
        if bad:
            return ConditionResult(False, n, bad)
    return ConditionResult(True)


@dataclass
class VectorForm:
    """An Aut(D)-invariant vector-valued form, one series (den N) per norm class."""
    D: DiscriminantForm
    components: dict[int, QExpansion]
    weight: int = 0
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        N = self.D.N
        for r, comp in self.components.items():
            if not self.D.is_realized(r):
                raise UnrealizedClass(f"class {r} is not a norm class of D")
            if comp.den != N:
                raise InconsistentComponents(f"component {r} has den {comp.den}, expected {N}")
            for n in comp.coeffs:
                if n % N != r:
                    raise InconsistentComponents(f"exponent {n}/{N} stored in class {r}")

    @property
    def trunc(self) -> int:
        return min((c.trunc for c in self.components.values()), default=0)

    def component(self, gamma) -> QExpansion:
        return self.components[self.D.norm_num(gamma)]

    def family(self) -> dict:
        """The full family gamma -> F_gamma."""
        return {g: self.components[self.D.norm_num(g)] for g in self.D.elements}

    @classmethod
    def from_family(cls, D: DiscriminantForm, family: dict, weight: int = 0) -> VectorForm:
        comps: dict[int, QExpansion] = {}
        for g, ser in family.items():
            r = D.norm_num(g)
            if r in comps and comps[r] != ser:
                raise InconsistentComponents(f"elements of norm class {r} carry different series")
            comps[r] = ser
        return cls(D, comps, weight)

    def evaluate(self, tau: complex) -> np.ndarray:
        vals = {r: c.evaluate(tau) for r, c in self.components.items()}
        return np.array([vals.get(self.D.norm_num(g), 0j) for g in self.D.elements])

    def __eq__(self, other):
        if not isinstance(other, VectorForm):
            return NotImplemented
        return (self.D == other.D and self.weight == other.weight
                and self.components == other.components)

    def to_json(self) -> dict:
        return {"n1": self.D.N1, "sign": self.D.sign, "weight": self.weight,
                "classes": {str(r): self.components[r].to_json() for r in sorted(self.components)}}

    @classmethod
    def from_json(cls, obj) -> VectorForm:
        D = build(int(obj["n1"]))
        if int(obj.get("sign", 1)) < 0:
            D = D.negated()
        comps = {int(r): QExpansion.from_json(s) for r, s in obj["classes"].items()}
        return cls(D, comps, int(obj.get("weight", 0)))


def lift_psi(f: QExpansion, D: DiscriminantForm, k: int = 0) -> VectorForm:
    """Component at class r: sum over n = r mod N of s(n) a(n) q^(n/N)."""
    if f.den != 1:
        raise ValueError("scalar input must have integral exponents")
    N = D.N
    s = s_weight(N)
    buckets: dict[int, dict[int, Fraction]] = {r: {} for r in D.norm_classes}
    for n, a in f.items():
        r = n % N
        if r not in buckets:
            raise UnrealizedClass(f"a({n}) = {a} sits in class {r}, which D does not realize")
        buckets[r][n] = s(n) * a
    comps = {r: QExpansion(b, f.trunc, N, f.uncertified) for r, b in buckets.items()}
    return VectorForm(D, comps, k)


def descend_phi(F: VectorForm) -> QExpansion:
    """a(n) = c_r(n/N) / s(n), checked against 2^-omega(N) * sum over the class."""
    D = F.D
    N = D.N
    s = s_weight(N)
    total = 2 ** omega(N)
    out: dict[int, Fraction] = {}
    for r, comp in F.components.items():
        mult = D.norm_classes[r]
        for n, c in comp.items():
            a1 = c / s(n)
            a2 = Fraction(mult, total) * c
            if a1 != a2:
                raise InconsistentComponents(f"class {r}: {a1} != {a2} at n = {n}")
            out[n] = a1
    flag = any(c.uncertified for c in F.components.values())
    return QExpansion(out, F.trunc, 1, flag)


def project_coprime(f: QExpansion, delta: SignVector, C: CharData) -> QExpansion:
    """b(n) = 2^-omega(N) a(n) prod_p (1 + delta_p chi_p(n)) for (n, N) = 1.

    Coefficients with (n, N) > 1 pass through unchanged and mark the result
    uncertified, since their projection is not coefficient-local.
    """
    if f.den != 1:
        raise ValueError("projection applies to integral exponents")
    N = C.N
    scale = Fraction(1, 2 ** len(C.components))
    out = {}
    flag = f.uncertified
    for n, a in f.items():
        if math.gcd(n, N) == 1:
            prod = 1
            for c in C.components:
                prod *= 1 + delta[c.prime] * c(n)
            out[n] = scale * a * prod
        else:
            out[n] = a
            flag = True
    return QExpansion(out, f.trunc, 1, flag)


# -- numeric transformation check ---------------------------------------------

def moebius_action(M, tau: complex) -> complex:
    (a, b), (c, d) = M
    return (a * tau + b) / (c * tau + d)


def tail_estimate(F: VectorForm, y: float, trunc: int, window: int = 20) -> float:
    """Heuristic size of the omitted terms at Im(tau) = y.

    Takes the largest |coefficient| among the last ``window`` stored numerators
    of each component and sums the geometric tail exp(-2 pi y n / N) from the
    truncation on.
    """
    N = F.D.N
    x = math.exp(-2 * math.pi * y / N)
    worst = 0.0
    for comp in F.components.values():
        top = [abs(float(c)) for n, c in comp.coeffs.items() if trunc - window * N <= n < trunc]
        if not top:
            continue
        worst = max(worst, max(top) * x ** trunc / (1 - x))
    return worst


def transform_deviation(F: VectorForm, M, tau: complex, trunc: int | None = None):
    """max_gamma |F(M tau) - (c tau + d)^k rho(M) F(tau)| and the tail estimate."""
    M = as_matrix(M)
    trunc = F.trunc if trunc is None else min(trunc, F.trunc)
    Ft = VectorForm(F.D, {r: c.truncate(trunc) for r, c in F.components.items()}, F.weight)
    tau = complex(tau)
    mt = moebius_action(M, tau)
    (_, _), (c, d) = M
    lhs = Ft.evaluate(mt)
    rhs = (c * tau + d) ** F.weight * (rho(F.D, M).to_numpy() @ Ft.evaluate(tau))
    dev = float(np.max(np.abs(lhs - rhs))) if len(lhs) else 0.0
    tail = tail_estimate(Ft, min(tau.imag, mt.imag), trunc)
    return dev, tail


def numeric_transform_check(F: VectorForm, M, tau: complex, trunc: int | None = None,
                            tol: float = 1e-6) -> bool:
    tau = complex(tau)
    if tau.imag < 0.8:
        raise OutOfRange(f"Im(tau) = {tau.imag} is below 0.8")
    dev, tail = transform_deviation(F, M, tau, trunc)
    if tail > tol / 10:
        raise ConvergenceTooSlow(f"tail estimate {tail:.3g} exceeds tol/10")
    return dev < tol


def realizable_coprime(D: DiscriminantForm, C: CharData, eps: SignVector):
    """For each unit n mod N: (realized as a norm class, allowed by eps)."""
    N = D.N
    out = {}
    for n in range(N):
        if math.gcd(n, N) == 1:
            out[n] = (D.is_realized(n), not delta_violations(n, eps, C))
    return out


def phase(x: complex) -> float:
    return cmath.phase(x)
