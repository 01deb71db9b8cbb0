"""Truncated q-expansions with exact rational coefficients.

A :class:`QExpansion` is ``sum_n c(n) q^(n/den)`` with coefficients known for
every ``n < trunc`` (numerators, not exponents).  Every operation computes the
largest truncation it can certify from its inputs, and nothing is ever
extrapolated past it.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import reduce

from . import kernels
from .errors import DivisionByNonUnit, FractionalExponents, PrecisionError
from .ntheory import frac_str, sigma_table

DEFAULT_TRUNC = 200


def _lcm(a, b):
    return a * b // math.gcd(a, b)


class QExpansion:
    __slots__ = ("den", "coeffs", "trunc", "uncertified")

    def __init__(self, coeffs=None, trunc: int = DEFAULT_TRUNC, den: int = 1, uncertified: bool = False):
        if den < 1:
            raise ValueError("den must be positive")
        self.den = den
        self.trunc = trunc
        self.uncertified = uncertified
        clean = {}
        for n, c in (coeffs or {}).items():
            c = Fraction(c)
            if c and n < trunc:
                clean[int(n)] = c
        self.coeffs = clean

    # -- basic access -------------------------------------------------------

    @classmethod
    def from_exponents(cls, coeffs, trunc, den: int = 1) -> QExpansion:
        """Build from a map exponent -> coefficient, exponents given as rationals."""
        out = {}
        for e, c in coeffs.items():
            n = Fraction(e) * den
            if n.denominator != 1:
                raise FractionalExponents(f"exponent {e} not in (1/{den})Z")
            out[int(n)] = c
        t = Fraction(trunc) * den
        return cls(out, math.ceil(t), den)

    def coeff(self, n: int) -> Fraction:
        """Coefficient of q^(n/den); raises past the certified truncation."""
        if n >= self.trunc:
            raise PrecisionError(f"coefficient {n}/{self.den} requested, truncation is {self.trunc}/{self.den}")
        return self.coeffs.get(n, Fraction(0))

    __getitem__ = coeff

    def valuation(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def principal_part(self) -> dict[int, Fraction]:
        return {n: c for n, c in self.coeffs.items() if n < 0}

    def items(self):
        return sorted(self.coeffs.items())

    def with_den(self, den: int) -> QExpansion:
        """Same series written over a multiple of the current den."""
        if den % self.den:
            raise ValueError(f"{den} is not a multiple of {self.den}")
        k = den // self.den
        return QExpansion({n * k: c for n, c in self.coeffs.items()}, self.trunc * k, den, self.uncertified)

    def truncate(self, trunc: int) -> QExpansion:
        return QExpansion(self.coeffs, min(trunc, self.trunc), self.den, self.uncertified)

    def reduce_den(self) -> QExpansion:
        """Smallest den consistent with the stored exponents and truncation."""
        g = reduce(math.gcd, self.coeffs, self.den)
        if g == 1:
            return self
        return QExpansion({n // g: c for n, c in self.coeffs.items()}, -(-self.trunc // g), self.den // g,
                          self.uncertified)

    def __eq__(self, other):
        if not isinstance(other, QExpansion):
            return NotImplemented
        return (self.den, self.trunc, self.coeffs) == (other.den, other.trunc, other.coeffs)

    def agrees(self, other: QExpansion) -> bool:
        """Equal on the common certified window (after matching dens)."""
        a, b = _common(self, other)
        t = min(a.trunc, b.trunc)
        return a.truncate(t).coeffs == b.truncate(t).coeffs

    def __repr__(self):
        terms = []
        for n, c in self.items()[:8]:
            e = Fraction(n, self.den)
            terms.append(f"{c}*q^{e}")
        tail = " + ..." if len(self.coeffs) > 8 else ""
        return f"QExpansion({' + '.join(terms) or '0'}{tail} + O(q^{Fraction(self.trunc, self.den)}))"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QExpansion({0: other}, self.trunc if self.trunc > 0 else 1, self.den)
        a, b = _common(self, other)
        out = dict(a.coeffs)
        for n, c in b.coeffs.items():
            out[n] = out.get(n, 0) + c
        return QExpansion(out, min(a.trunc, b.trunc), a.den, a.uncertified or b.uncertified)

    __radd__ = __add__

    def __neg__(self):
        return QExpansion({n: -c for n, c in self.coeffs.items()}, self.trunc, self.den, self.uncertified)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> QExpansion:
        c = Fraction(c)
        return QExpansion({n: c * v for n, v in self.coeffs.items()}, self.trunc, self.den, self.uncertified)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return _div(self, other)

    def shift(self, k: int) -> QExpansion:
        """Multiply by q^(k/den)."""
        return QExpansion({n + k: c for n, c in self.coeffs.items()}, self.trunc + k, self.den, self.uncertified)

    # -- evaluation and io --------------------------------------------------

    def evaluate(self, tau: complex) -> complex:
        """Partial sum at tau (upper half plane) over the stored terms."""
        z = 2j * cmath.pi * tau / self.den
        return sum((float(c) * cmath.exp(z * n) for n, c in self.coeffs.items()), 0j)

    def to_json(self) -> dict:
        out = {"den": self.den, "trunc": self.trunc,
               "coeffs": [[n, frac_str(c)] for n, c in self.items()]}
        if self.uncertified:
            out["uncertified"] = True
        return out

    @classmethod
    def from_json(cls, obj) -> QExpansion:
        coeffs = {int(n): Fraction(c) for n, c in obj["coeffs"]}
        return cls(coeffs, int(obj["trunc"]), int(obj.get("den", 1)), bool(obj.get("uncertified", False)))


def _common(x: QExpansion, y: QExpansion):
    if x.den == y.den:
        return x, y
    L = _lcm(x.den, y.den)
    return x.with_den(L), y.with_den(L)


def _integer_dense(x: QExpansion, v: int, stride: int, length: int):
    """Integer vector of x's coefficients at v, v+stride, ... and the common denominator."""
    L = reduce(_lcm, (c.denominator for c in x.coeffs.values()), 1)
    out = [0] * length
    for n, c in x.coeffs.items():
        k = (n - v) // stride
        if k < length:
            out[k] = c.numerator * (L // c.denominator)
    return out, L


def _stride(*series) -> int:
    g = 0
    for s in series:
        v = s.valuation()
        for n in s.coeffs:
            g = math.gcd(g, n - v)
    return g or 1


def _mul(x: QExpansion, y: QExpansion) -> QExpansion:
    x, y = _common(x, y)
    flag = x.uncertified or y.uncertified
    vx, vy = x.valuation(), y.valuation()
    trunc = min(x.trunc + (vy if vy is not None else y.trunc), y.trunc + (vx if vx is not None else x.trunc))
    if vx is None or vy is None:
        return QExpansion({}, trunc, x.den, flag)
    g = _stride(x, y)
    length = max(0, -(-(trunc - vx - vy) // g))
    a, La = _integer_dense(x, vx, g, length)
    b, Lb = _integer_dense(y, vy, g, length)
    prod = kernels.mul_trunc(a, b, length)
    L = La * Lb
    return QExpansion({vx + vy + k * g: Fraction(c, L) for k, c in enumerate(prod) if c}, trunc, x.den, flag)


def _div(x: QExpansion, y: QExpansion) -> QExpansion:
    x, y = _common(x, y)
    vy = y.valuation()
    if vy is None:
        raise DivisionByNonUnit("divisor vanishes through its truncation")
    flag = x.uncertified or y.uncertified
    vx = x.valuation()
    if vx is None:
        return QExpansion({}, x.trunc - vy, x.den, flag)
    trunc = min(x.trunc, vx + y.trunc - vy) - vy
    g = _stride(x, y)
    length = max(0, -(-(trunc - vx + vy) // g))
    b0 = y.coeffs[vy]
    if all(c.denominator == 1 for c in y.coeffs.values()) and b0 in (1, -1):
        a, La = _integer_dense(x, vx, g, length)
        b, _ = _integer_dense(y, vy, g, length)
        q = kernels.div_trunc(a, b, length)
        coeffs = {vx - vy + k * g: Fraction(c, La) for k, c in enumerate(q) if c}
    else:
        coeffs = _div_fractions(x, y, vx, vy, g, length)
    return QExpansion(coeffs, trunc, x.den, flag)


def _div_fractions(x, y, vx, vy, g, length):
    a = [x.coeffs.get(vx + k * g, Fraction(0)) for k in range(length)]
    b = [y.coeffs.get(vy + k * g, Fraction(0)) for k in range(length)]
    inv0 = 1 / b[0]
    q = [Fraction(0)] * length
    for k in range(length):
        s = a[k]
        for j in range(1, k + 1):
            if b[j]:
                s -= b[j] * q[k - j]
        q[k] = s * inv0
    return {vx - vy + k * g: c for k, c in enumerate(q) if c}


def series_arith(x: QExpansion, y, op: str) -> QExpansion:
    """op in {"add", "sub", "mul", "div", "scale"}; for "scale" y is a rational."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "scale":
        return x.scale(y)
    raise ValueError(f"unknown op {op!r}")


def u_operator(f: QExpansion, m: int) -> QExpansion:
    """U(m): a(n) -> a(mn)."""
    if f.den != 1:
        raise FractionalExponents("U(m) needs integral exponents")
    if m < 1:
        raise ValueError("m must be positive")
    out = {n // m: c for n, c in f.coeffs.items() if n % m == 0}
    return QExpansion(out, -(-f.trunc // m), 1, f.uncertified)


def scale_exponents(f: QExpansion, m: int) -> QExpansion:
    """f(tau) -> f(m tau)."""
    if m < 1:
        raise ValueError("m must be positive")
    return QExpansion({m * n: c for n, c in f.coeffs.items()}, m * f.trunc, f.den, f.uncertified)


# -- eta products -------------------------------------------------------------

def euler_product(length: int, step: int = 1) -> list[int]:
    """Dense coefficients of prod_{n>=1} (1 - q^(step*n)) up to q^(length-1).

    Pentagonal number theorem: sum_k (-1)^k q^(k(3k-1)/2) over all integers k.
    """
    out = [0] * length
    k = 0
    while True:
        k += 1
        done = True
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if step * e < length:
                out[step * e] += -1 if k % 2 else 1
                done = False
        if done:
            break
    out[0] = 1
    return out


def _power(base: list[int], r: int, length: int) -> list[int]:
    out = [1] + [0] * (length - 1)
    while r:
        if r & 1:
            out = kernels.mul_trunc(out, base, length)
        r >>= 1
        if r:
            base = kernels.mul_trunc(base, base, length)
    return out


def eta_quotient(spec, trunc: int = DEFAULT_TRUNC) -> QExpansion:
    """prod_d eta(d tau)^(r_d) for ``spec`` a list of (d, r_d) pairs.

    The result has den = denominator of the leading exponent sum(d r_d)/24 and
    is known for all exponents below ``trunc``.
    """
    lead = Fraction(0)
    for d, r in spec:
        if d < 1:
            raise ValueError("eta quotient levels must be positive")
        lead += Fraction(d * r, 24)
    den = lead.denominator
    length = max(0, math.ceil(trunc - lead))
    num = [1] + [0] * (length - 1) if length else []
    dnm = list(num)
    for d, r in spec:
        if r == 0 or not length:
            continue
        base = euler_product(length, d)
        if r > 0:
            num = kernels.mul_trunc(num, _power(base, r, length), length)
        else:
            dnm = kernels.mul_trunc(dnm, _power(base, -r, length), length)
    body = kernels.div_trunc(num, dnm, length) if length else []
    v = int(lead * den)
    return QExpansion({v + k * den: c for k, c in enumerate(body) if c}, v + length * den, den)


def e2_series(trunc: int = DEFAULT_TRUNC) -> QExpansion:
    """E_2 = 1 - 24 sum sigma_1(n) q^n."""
    if trunc < 1:
        raise ValueError("trunc must be at least 1")
    sig = sigma_table(1, trunc)
    coeffs = {0: 1}
    coeffs.update({n: -24 * sig[n] for n in range(1, trunc)})
    return QExpansion(coeffs, trunc)


def frak_e2(trunc: int = DEFAULT_TRUNC) -> QExpansion:
    """(E2(tau) - 9 E2(3tau) - 4 E2(4tau) + 36 E2(12tau)) / 24, the weight-2 level-12 combination."""
    if trunc < 13:
        raise ValueError("trunc must be at least 13")
    out = e2_series(trunc)
    for m, w in ((3, -9), (4, -4), (12, 36)):
        out = out + scale_exponents(e2_series(-(-trunc // m)), m).scale(w)
    return out.scale(Fraction(1, 24)).truncate(trunc)


# -- cusps of Gamma_0(N) ------------------------------------------------------

def gamma0_cusps(N: int) -> list[Fraction | None]:
    """Inequivalent cusps a/c with c | N; None stands for infinity (c = N)."""
    out = []
    for c in sorted(_divisors(N)):
        if c == N:
            out.append(None)
            continue
        g = math.gcd(c, N // c)
        reps = []
        for a in range(1, N * c + 1):
            if math.gcd(a, c) != 1:
                continue
            if any(cusps_equivalent(Fraction(a, c), r, N) for r in reps):
                continue
            reps.append(Fraction(a, c))
            if len(reps) == _phi(g):
                break
        out.extend(reps if c > 1 else [Fraction(0)])
    return out


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _column(x: Fraction | None, N: int):
    if x is None:
        return (1 % N, 0)
    return (x.numerator % N, x.denominator % N)


def cusps_equivalent(x, y, N: int) -> bool:
    """Gamma_0(N)-equivalence of cusps (None = infinity).

    Orbits of primitive columns (a, c) under Gamma_0(N) match the orbits of
    their reductions mod N under upper-triangular matrices [[u, b], [0, u^-1]].
    """
    a1, c1 = _column(x, N)
    a2, c2 = _column(y, N)
    for u in range(1, N + 1):
        if math.gcd(u, N) != 1:
            continue
        ui = pow(u, -1, N) if N > 1 else 0
        if (ui * c1 - c2) % N:
            continue
        for b in range(N):
            if (u * a1 + b * c1 - a2) % N == 0:
                return True
    return False


def cusp_label(x: Fraction | None) -> str:
    if x is None:
        return "oo"
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def eta_cusp_orders(spec, level: int) -> dict[str, Fraction]:
    """Order of prod eta(d tau)^(r_d) at each cusp of Gamma_0(level).

    Ligozat: at a cusp with denominator c | N the order in the local
    uniformizer is (N/24) sum_d gcd(c, d)^2 r_d / (gcd(c, N/c) c d).
    """
    N = level
    for d, _ in spec:
        if N % d:
            raise ValueError(f"{d} does not divide the level {N}")
    out = {}
    for x in gamma0_cusps(N):
        c = N if x is None else x.denominator
        total = sum((Fraction(math.gcd(c, d) ** 2 * r, d) for d, r in spec), Fraction(0))
        out[cusp_label(x)] = Fraction(N, 24) * total / (math.gcd(c, N // c) * c)
    return out


def parse_eta_spec(text: str) -> list[tuple[int, int]]:
    """Parse ``"1:2,3:-2"`` into [(1, 2), (3, -2)]."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        d, r = part.split(":")
        out.append((int(d), int(r)))
    return out
