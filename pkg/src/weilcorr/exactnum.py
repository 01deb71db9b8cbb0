"""Exact arithmetic in Q(zeta_N) and in Q(zeta_N)[1/sqrt(R)].

A :class:`Cyclotomic` stores an integer coefficient vector over the power
basis ``1, z, ..., z^(phi(N)-1)`` together with one positive denominator,
always fully reduced modulo the N-th cyclotomic polynomial and by the gcd, so
equality is plain tuple comparison.

A :class:`CycExt` is ``a + b/sqrt(R)``.  When ``sqrt(R)`` already lies in
``Q(zeta_N)`` (the case for a fundamental discriminant ``R`` dividing ``N``)
the pair is redundant; equality and hashing then go through the collapsed
value ``a + b*sqrt(R)/R``, computed from a quadratic Gauss sum.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache, reduce

import mpmath

from . import kernels
from .errors import DivisionByZero, OrderMismatch
from .ntheory import divisors, factorize, frac_str, kronecker, moebius


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polydiv_exact(num, den):
    """Exact quotient of integer polynomials (den monic up to sign)."""
    num = list(num)
    lead = den[-1]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        c //= lead
        q[i] = c
        if c:
            for j, y in enumerate(den):
                num[i + j] -= c * y
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of Phi_n = prod_{d|n} (x^d - 1)^mu(n/d)."""
    if n < 1:
        raise ValueError("order must be positive")
    num, den = [1], [1]
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 0:
            continue
        f = [-1] + [0] * (d - 1) + [1]
        if mu == 1:
            num = _polymul(num, f)
        else:
            den = _polymul(den, f)
    return tuple(_polydiv_exact(num, den))


class _Context:
    """Per-order data: Phi_N and the reduced powers of zeta."""

    def __init__(self, n: int):
        self.order = n
        self.phi = cyclotomic_polynomial(n)
        self.degree = len(self.phi) - 1
        d = self.degree
        powers = []
        vec = [1] + [0] * (d - 1)
        for _ in range(n):
            powers.append(tuple(vec))
            # multiply by x, reduce with monic phi
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for j in range(d):
                    vec[j] -= top * self.phi[j]
        self.powers = tuple(powers)


@lru_cache(maxsize=None)
def context(n: int) -> _Context:
    return _Context(n)


def _normalize(num, den):
    if den < 0:
        num = [-x for x in num]
        den = -den
    g = reduce(math.gcd, num, den)
    if g > 1:
        num = [x // g for x in num]
        den //= g
    return tuple(num), den


def _lcm(a, b):
    return a * b // math.gcd(a, b)


class Cyclotomic:
    """An element of the N-th cyclotomic field, in canonical reduced form."""

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, num=(), den: int = 1):
        if den == 0:
            raise DivisionByZero("zero denominator")
        ctx = context(order)
        d = ctx.degree
        num = [int(x) for x in num]
        if len(num) > d:
            full = num
            num = [0] * d
            for k, c in enumerate(full):
                if c:
                    p = ctx.powers[k % order]
                    for j in range(d):
                        num[j] += c * p[j]
        else:
            num = num + [0] * (d - len(num))
        self.order = order
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, order, num, den):
        obj = object.__new__(cls)
        obj.order = order
        obj.num, obj.den = _normalize(num, den)
        return obj

    @classmethod
    def from_coeffs(cls, order: int, coeffs) -> Cyclotomic:
        """Build from rational coefficients of 1, z, z^2, ... (any length)."""
        fr = [Fraction(c) for c in coeffs]
        den = reduce(_lcm, (f.denominator for f in fr), 1)
        return cls(order, [f.numerator * (den // f.denominator) for f in fr], den)

    @classmethod
    def rational(cls, order: int, value) -> Cyclotomic:
        value = Fraction(value)
        return cls(order, [value.numerator], value.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise OrderMismatch(f"orders {self.order} and {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = _lcm(self.den, other.den)
        fa, fb = den // self.den, den // other.den
        return Cyclotomic._raw(self.order, [x * fa + y * fb for x, y in zip(self.num, other.num)], den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, [-x for x in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        phi = context(self.order).phi
        return Cyclotomic._raw(self.order, kernels.cyc_mulmod(list(self.num), list(other.num), list(phi)),
                               self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(self.order, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.order, self.num, self.den))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        return f"Cyclotomic({self.order}: {' + '.join(terms) or '0'})"

    def galois(self, a: int) -> Cyclotomic:
        """Image under the automorphism z -> z^a, gcd(a, N) = 1."""
        n = self.order
        if math.gcd(a, n) != 1:
            raise ValueError("a must be a unit mod the order")
        ctx = context(n)
        d = ctx.degree
        out = [0] * d
        for j, c in enumerate(self.num):
            if c:
                p = ctx.powers[(a * j) % n]
                for t in range(d):
                    if p[t]:
                        out[t] += c * p[t]
        return Cyclotomic._raw(n, out, self.den)

    def conj(self) -> Cyclotomic:
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        prod = self._conjugate_product()
        val = self * prod
        return val.coeffs[0]

    def _conjugate_product(self):
        n = self.order
        out = Cyclotomic.rational(n, 1)
        for a in range(2, n + 1):
            if math.gcd(a, n) == 1 and a % n != 1:
                out = out * self.galois(a)
        return out

    def inverse(self) -> Cyclotomic:
        """Norm-based inverse: x^-1 = (prod of non-trivial conjugates) / N(x)."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        prod = self._conjugate_product()
        nrm = (self * prod).coeffs[0]
        return prod * (1 / nrm)

    def to_complex(self, precision: int = 15):
        return _embed(self, precision)

    def to_json(self):
        return {"order": self.order, "coeffs": [frac_str(c) for c in self.coeffs]}


def _embed(x: Cyclotomic, precision: int):
    if precision <= 15:
        n = x.order
        s = sum((float(c) * cmath.exp(2j * math.pi * k / n) for k, c in enumerate(x.coeffs) if c), 0j)
        return s
    with mpmath.workdps(precision + 5):
        z = mpmath.exp(2j * mpmath.pi / x.order)
        s = mpmath.mpc(0)
        for k, c in enumerate(x.coeffs):
            if c:
                s += mpmath.mpf(c.numerator) / c.denominator * z**k
        return s


def root_of_unity(k: int, N: int) -> Cyclotomic:
    """Reduced form of zeta_N^k; k is taken mod N."""
    if N < 1:
        raise ValueError("N must be positive")
    return Cyclotomic._raw(N, list(context(N).powers[k % N]), 1)


@lru_cache(maxsize=None)
def sqrt_in_field(radicand: int, order: int) -> Cyclotomic | None:
    """The positive square root of ``radicand`` inside Q(zeta_order), or None.

    Writes radicand = f^2 * D0 with D0 squarefree; sqrt(D0) lies in the field
    iff the discriminant d0 of Q(sqrt(D0)) divides the order, and then equals
    the quadratic Gauss sum sum_{a mod d0} (d0/a) zeta_d0^a (divided by 2 when
    d0 = 4*D0).
    """
    if radicand <= 0:
        raise ValueError("radicand must be positive")
    f, d0sq = 1, 1
    for p, e in factorize(radicand).items():
        f *= p ** (e // 2)
        if e % 2:
            d0sq *= p
    if d0sq == 1:
        return Cyclotomic.rational(order, f)
    disc = d0sq if d0sq % 4 == 1 else 4 * d0sq
    if order % disc:
        return None
    step = order // disc
    ctx = context(order)
    num = [0] * ctx.degree
    for a in range(1, disc):
        chi = kronecker(disc, a)
        if chi:
            p = ctx.powers[(a * step) % order]
            for j in range(ctx.degree):
                num[j] += chi * p[j]
    g = Cyclotomic._raw(order, num, 1)
    root = g if disc == d0sq else g * Fraction(1, 2)
    return root * f


class CycExt:
    """``a + b/sqrt(radicand)`` with ``a, b`` in Q(zeta_order)."""

    __slots__ = ("a", "b", "radicand")

    def __init__(self, a, b=0, radicand: int | None = None):
        if isinstance(a, Cyclotomic):
            order = a.order
        elif isinstance(b, Cyclotomic):
            order = b.order
        else:
            raise TypeError("need at least one Cyclotomic component to fix the order")
        a = a if isinstance(a, Cyclotomic) else Cyclotomic.rational(order, a)
        b = b if isinstance(b, Cyclotomic) else Cyclotomic.rational(order, b)
        if a.order != b.order:
            raise OrderMismatch("components of different order")
        self.a = a
        self.b = b
        self.radicand = order if radicand is None else radicand

    @property
    def order(self) -> int:
        return self.a.order

    def _check(self, other):
        if not isinstance(other, CycExt):
            if isinstance(other, (int, Fraction, Cyclotomic)):
                return CycExt(other if isinstance(other, Cyclotomic) else Cyclotomic.rational(self.order, other),
                              0, self.radicand)
            return NotImplemented
        if other.order != self.order or other.radicand != self.radicand:
            raise OrderMismatch("mixed CycExt contexts")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycExt(self.a + other.a, self.b + other.b, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return CycExt(-self.a, -self.b, self.radicand)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        r = self.radicand
        a = self.a * other.a + self.b * other.b * Fraction(1, r)
        b = self.a * other.b + self.b * other.a
        return CycExt(a, b, r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def conj(self) -> CycExt:
        return CycExt(self.a.conj(), self.b.conj(), self.radicand)

    def collapsed(self) -> Cyclotomic | None:
        """The value as a plain Cyclotomic when sqrt(radicand) is in the field."""
        s = sqrt_in_field(self.radicand, self.order)
        if s is None:
            return None
        return self.a + self.b * s * Fraction(1, self.radicand)

    def is_zero(self) -> bool:
        c = self.collapsed()
        if c is not None:
            return c.is_zero()
        return self.a.is_zero() and self.b.is_zero()

    def inverse(self) -> CycExt:
        """Rationalize by ``a - b/sqrt(R)``; collapse first if that conjugate vanishes."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        r = self.radicand
        denom = self.a * self.a - self.b * self.b * Fraction(1, r)
        if not denom.is_zero():
            inv = denom.inverse()
            return CycExt(self.a * inv, -self.b * inv, r)
        c = self.collapsed()
        return CycExt(c.inverse(), 0, r)

    def canonical(self):
        c = self.collapsed()
        if c is not None:
            return (c.num, c.den)
        return (self.a.num, self.a.den, self.b.num, self.b.den)

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.order, self.radicand, self.canonical()))

    def __repr__(self):
        return f"CycExt({self.a!r} + ({self.b!r})/sqrt({self.radicand}))"

    def to_complex(self, precision: int = 15):
        a = self.a.to_complex(precision)
        b = self.b.to_complex(precision)
        if precision <= 15:
            return a + b / math.sqrt(self.radicand)
        with mpmath.workdps(precision + 5):
            return a + b / mpmath.sqrt(self.radicand)

    def to_json(self):
        out = {"order": self.order,
               "a": [frac_str(c) for c in self.a.coeffs],
               "b": [frac_str(c) for c in self.b.coeffs]}
        if self.radicand != self.order:
            out["radicand"] = self.radicand
        return out

    @classmethod
    def from_json(cls, obj) -> CycExt:
        n = int(obj["order"])
        a = Cyclotomic.from_coeffs(n, [Fraction(s) for s in obj["a"]])
        b = Cyclotomic.from_coeffs(n, [Fraction(s) for s in obj["b"]])
        return cls(a, b, int(obj.get("radicand", n)))


def cycext_arith(x: CycExt, y: CycExt | None, op: str) -> CycExt:
    """Functional front end: op in {"add", "mul", "inv", "conj"}."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inverse()
    if op == "conj":
        return x.conj()
    raise ValueError(f"unknown op {op!r}")


def to_complex(x, precision: int = 15):
    """Complex embedding with zeta_N -> exp(2 pi i / N).

    Returns a Python complex for precision <= 15 and an mpmath mpc otherwise.
    """
    if precision < 15:
        raise ValueError("precision must be at least 15 digits")
    return x.to_complex(precision)
