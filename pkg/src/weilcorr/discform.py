"""The discriminant form D = d^{-1}/O_F of a real quadratic field F = Q(sqrt(N1)).

D is stored as a product of cyclic groups with explicit, pairwise orthogonal
generators, so an element is a coordinate tuple and every norm is an integer
``N*q(gamma) mod N``.  The generators are:

* N1 = 1 mod 4: a single generator sqrt(N1)/N1 of order N1;
* N1 = 3 mod 4: 1/2, sqrt(N1)/2 (order 2 each) and sqrt(N1)/N1 (order N1);
* N1 = 2 mod 4: 1/2 (order 2), sqrt(N1)/4 (order 4) and 2 sqrt(N1)/N1
  (order N1/2, omitted when N1 = 2).

:func:`verify_generators` recomputes everything from field arithmetic in
Q(sqrt(N1)) as an independent cross-check.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import gcd, prod

from .errors import NormMismatch, NotSquarefree, OutOfRange, TransporterNotFound
from .ntheory import crt_unit, fundamental_discriminant, is_squarefree, kronecker, omega, prime_divisors

DElement = tuple  # coordinates against the generator list


@dataclass(frozen=True)
class QuadField:
    N1: int

    def __post_init__(self):
        if self.N1 <= 1:
            raise OutOfRange(f"N1 must exceed 1, got {self.N1}")
        if not is_squarefree(self.N1):
            raise NotSquarefree(f"N1 = {self.N1} is not squarefree")

    @property
    def N(self) -> int:
        return fundamental_discriminant(self.N1)


@dataclass(frozen=True)
class JordanSymbol:
    """One Jordan constituent q^{sign*rank}, with oddity for odd 2-adic parts.

    Rendered as ``3^+1``, ``2_2^+2``, ``4_-1^+1`` etc.
    """
    prime: int
    exponent: int
    rank: int
    sign: int
    oddity: int | None = None

    def __str__(self):
        q = self.prime ** self.exponent
        odd = f"_{self.oddity}" if self.oddity is not None else ""
        return f"{q}{odd}^{'+' if self.sign > 0 else '-'}{self.rank}"


@dataclass(frozen=True)
class DiscriminantForm:
    field: QuadField
    orders: tuple[int, ...]
    norms: tuple[int, ...]          # N*q(g_i) mod N for each generator
    gen_values: tuple[tuple[Fraction, Fraction], ...] = field(compare=False)
    labels: tuple[str, ...] = field(compare=False)
    sign: int = 1                    # -1 for the form D[-1] with negated norm

    @property
    def N(self) -> int:
        return self.field.N

    @property
    def N1(self) -> int:
        return self.field.N1

    @property
    def size(self) -> int:
        out = 1
        for n in self.orders:
            out *= n
        return out

    @cached_property
    def elements(self) -> tuple[DElement, ...]:
        """All elements in the fixed basis order used by Weil matrices."""
        return tuple(product(*(range(n) for n in self.orders)))

    @cached_property
    def _index(self) -> dict:
        return {g: i for i, g in enumerate(self.elements)}

    def index(self, gamma: DElement) -> int:
        return self._index[self.reduce(gamma)]

    @property
    def zero(self) -> DElement:
        return tuple(0 for _ in self.orders)

    def reduce(self, gamma) -> DElement:
        return tuple(x % n for x, n in zip(gamma, self.orders))

    def add(self, a: DElement, b: DElement) -> DElement:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def neg(self, a: DElement) -> DElement:
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def scale(self, k: int, a: DElement) -> DElement:
        return tuple((k * x) % n for x, n in zip(a, self.orders))

    def element_order(self, a: DElement) -> int:
        out = 1
        for x, n in zip(a, self.orders):
            o = n // gcd(x, n)
            out = out * o // gcd(out, o)
        return out

    def norm_num(self, gamma: DElement) -> int:
        """N*q(gamma) mod N, in [0, N)."""
        return sum(x * x * Q for x, Q in zip(gamma, self.norms)) % self.N

    def norm(self, gamma: DElement) -> Fraction:
        """q(gamma) mod 1 in [0, 1)."""
        return Fraction(self.norm_num(gamma), self.N)

    def bilinear_num(self, a: DElement, b: DElement) -> int:
        """N*(a, b) mod N; generators are orthogonal."""
        return sum(2 * x * y * Q for x, y, Q in zip(a, b, self.norms)) % self.N

    def negated(self) -> DiscriminantForm:
        """D[-1]: same group, norm -q."""
        return DiscriminantForm(self.field, self.orders, tuple((-Q) % self.N for Q in self.norms),
                                self.gen_values, self.labels, -self.sign)

    @cached_property
    def norm_classes(self) -> Counter:
        return Counter(self.norm_num(g) for g in self.elements)

    def is_realized(self, r: int) -> bool:
        return self.norm_classes.get(r % self.N, 0) > 0

    # -- prime parts --------------------------------------------------------

    def odd_generator(self) -> int | None:
        """Index of the generator spanning the odd part, if any."""
        for i, n in enumerate(self.orders):
            if n % 2:
                return i
        return None

    def p_part(self, p: int) -> list[DElement]:
        """Elements whose order is a power of p."""
        out = []
        for g in self.elements:
            o = self.element_order(g)
            while o % p == 0:
                o //= p
            if o == 1:
                out.append(g)
        return out

    def local_norms(self, p: int) -> set[Fraction]:
        return {self.norm(g) for g in self.p_part(p)}


def build(n1: int) -> DiscriminantForm:
    """The discriminant form of Z^2 + O_F with q(a, b, x) = N(x) - ab."""
    F = QuadField(n1)
    N = F.N
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    if n1 % 4 == 1:
        gens = [((Fraction(0), Fraction(1, n1)), n1, "sqrt(N1)/N1")]
    elif n1 % 4 == 3:
        gens = [((half, Fraction(0)), 2, "1/2"),
                ((Fraction(0), half), 2, "sqrt(N1)/2"),
                ((Fraction(0), Fraction(1, n1)), n1, "sqrt(N1)/N1")]
    else:
        gens = [((half, Fraction(0)), 2, "1/2"),
                ((Fraction(0), quarter), 4, "sqrt(N1)/4")]
        if n1 // 2 > 1:
            gens.append(((Fraction(0), Fraction(2, n1)), n1 // 2, "2sqrt(N1)/N1"))
    norms = []
    for (u, v), _, _ in gens:
        nq = N * (u * u - n1 * v * v)
        assert nq.denominator == 1
        norms.append(int(nq) % N)
    if prod(o for _, o, _ in gens) != N:
        raise AssertionError(f"|D| should equal N = {N}")
    return DiscriminantForm(F, tuple(o for _, o, _ in gens), tuple(norms),
                            tuple(g for g, _, _ in gens), tuple(lbl for _, _, lbl in gens))


# -- field cross-check --------------------------------------------------------

def _in_ring_of_integers(n1: int, u: Fraction, v: Fraction) -> bool:
    if n1 % 4 == 1:
        # O_F = Z[(1+sqrt(N1))/2]: u, v in (1/2)Z with 2u = 2v mod 2
        return (2 * u).denominator == 1 and (2 * v).denominator == 1 and (2 * u - 2 * v) % 2 == 0
    return u.denominator == 1 and v.denominator == 1


def field_value(D: DiscriminantForm, gamma: DElement) -> tuple[Fraction, Fraction]:
    """A representative u + v sqrt(N1) in d^{-1} of the class gamma."""
    u = sum((x * g[0] for x, g in zip(gamma, D.gen_values)), Fraction(0))
    v = sum((x * g[1] for x, g in zip(gamma, D.gen_values)), Fraction(0))
    return u, v


def verify_generators(D: DiscriminantForm) -> bool:
    """Recompute norms, bilinear forms and group structure in Q(sqrt(N1)).

    Checks that every element class is distinct modulo O_F, that each
    generator's order is as stored, and that N*q and N*(.,.) computed from
    u^2 - N1 v^2 and Tr(x conj(y)) agree with the integer tables.
    """
    n1, N = D.N1, D.N
    sgn = D.sign
    for (u, v), order in zip(D.gen_values, D.orders):
        if not _in_ring_of_integers(n1, order * u, order * v):
            return False
        for k in range(1, order):
            if _in_ring_of_integers(n1, k * u, k * v):
                return False
    seen = set()
    for g in D.elements:
        u, v = field_value(D, g)
        # canonical residue mod O_F: shift into a fundamental domain
        key = _residue(n1, u, v)
        if key in seen:
            return False
        seen.add(key)
        nq = sgn * N * (u * u - n1 * v * v)
        if nq.denominator != 1 or int(nq) % N != D.norm_num(g):
            return False
    if len(seen) != N:
        return False
    for a in D.elements:
        ua, va = field_value(D, a)
        for b in D.elements:
            ub, vb = field_value(D, b)
            tr = sgn * N * 2 * (ua * ub - n1 * va * vb)
            if tr.denominator != 1 or int(tr) % N != D.bilinear_num(a, b):
                return False
    return True


def _residue(n1, u, v):
    if n1 % 4 == 1:
        # basis 1, w = (1+sqrt(N1))/2: u + v sqrt = (u - v) + 2v * w
        a, b = u - v, 2 * v
        return (a % 1, b % 1)
    return (u % 1, v % 1)


# -- Jordan decomposition -----------------------------------------------------

def jordan(D: DiscriminantForm) -> list[JordanSymbol]:
    """Jordan constituents, sorted by prime then exponent.

    Odd p: p^{+-1} with sign the Legendre symbol of 2a where q = a/p on the
    p-part generator.  The 2-adic part for N1 = 3 mod 4 is 2_2^{+2}; for
    N1 = 2 mod 4 it has the two constituents 2_1^{+1} and 4_t^{+-1} with
    t = -N1/2 and sign (2/t).
    """
    out = []
    n1, N = D.N1, D.N
    oi = D.odd_generator()
    for p in prime_divisors(N):
        if p == 2:
            # D[-1] negates the oddities
            s = D.sign
            if n1 % 4 == 3:
                out.append(JordanSymbol(2, 1, 2, 1, 2 * s))
            else:
                t = (-n1 // 2) * s
                out.append(JordanSymbol(2, 1, 1, kronecker(2, s), s))
                out.append(JordanSymbol(2, 2, 1, kronecker(2, t), t))
            continue
        n = D.orders[oi]
        gen = [0] * len(D.orders)
        gen[oi] = n // p
        q = D.norm(tuple(gen)) * p      # = a mod p
        assert q.denominator == 1
        a = int(q) % p
        out.append(JordanSymbol(p, 1, 1, kronecker(2 * a, p)))
    return out


# -- automorphisms ------------------------------------------------------------

@dataclass(frozen=True)
class Automorphism:
    """An element of Aut(D) as the product of sigma_p over ``primes``."""
    primes: frozenset
    perm: tuple[int, ...]  # image index of each element index

    def __call__(self, D: DiscriminantForm, gamma: DElement) -> DElement:
        return D.elements[self.perm[D.index(gamma)]]

    def compose(self, other: Automorphism) -> tuple[int, ...]:
        """Permutation of self after other."""
        return tuple(self.perm[i] for i in other.perm)


def _sigma(D: DiscriminantForm, p: int, gamma: DElement) -> DElement:
    g = list(gamma)
    if p == 2:
        if D.N1 % 4 == 3:
            g[0], g[1] = g[1], g[0]
        else:
            g[0] = (-g[0]) % D.orders[0]
            g[1] = (-g[1]) % D.orders[1]
        return tuple(g)
    oi = D.odd_generator()
    u = crt_unit(D.orders[oi], p, -1)
    g[oi] = (u * g[oi]) % D.orders[oi]
    return tuple(g)


def automorphisms(D: DiscriminantForm) -> list[Automorphism]:
    """All 2^omega(N) products of the per-prime involutions sigma_p."""
    primes = prime_divisors(D.N)
    out = []
    for mask in range(1 << len(primes)):
        chosen = [p for i, p in enumerate(primes) if mask >> i & 1]
        perm = []
        for g in D.elements:
            h = g
            for p in chosen:
                h = _sigma(D, p, h)
            perm.append(D.index(h))
        out.append(Automorphism(frozenset(chosen), tuple(perm)))
    return out


def preserves_form(D: DiscriminantForm, sigma: Automorphism) -> bool:
    els = D.elements
    for i, g in enumerate(els):
        if D.norm_num(els[sigma.perm[i]]) != D.norm_num(g):
            return False
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            s = D.index(D.add(a, b))
            if sigma.perm[s] != D.index(D.add(els[sigma.perm[i]], els[sigma.perm[j]])):
                return False
    return True


def find_norm_transporter(D: DiscriminantForm, beta: DElement, gamma: DElement) -> Automorphism:
    """Some sigma in Aut(D) with sigma(beta) = gamma, given q(beta) = q(gamma)."""
    if D.norm_num(beta) != D.norm_num(gamma):
        raise NormMismatch("elements have different norms")
    ib, ig = D.index(beta), D.index(gamma)
    for sigma in automorphisms(D):
        if sigma.perm[ib] == ig:
            return sigma
    raise TransporterNotFound(f"no automorphism maps {beta} to {gamma}")


def count_norm_class(D: DiscriminantForm, n: int) -> int:
    """#{gamma : N q(gamma) = n mod N}."""
    return D.norm_classes.get(n % D.N, 0)


def expected_class_size(N: int, n: int) -> int:
    """2^omega(N/(N_n, N)): one factor 2 per prime of N not dividing n."""
    return 2 ** sum(1 for p in prime_divisors(N) if n % p)


def aut_order(D: DiscriminantForm) -> int:
    return 2 ** omega(D.N)
