"""The quadratic character chi_D = (N/.) of a real quadratic field, split into
its prime-power components, plus Gauss-sum data and the two sign vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidDivisor, NotSquarefree, OutOfRange
from .exactnum import Cyclotomic, root_of_unity
from .ntheory import fundamental_discriminant, is_squarefree, kronecker, prime_divisors

__all__ = [
    "CharComponent", "CharData", "SignVector", "char_data", "kronecker",
    "chi_component", "sign_vectors", "gauss_sum", "gauss_sum_check",
]

# 2-adic tags, keyed by N1 mod 8; the modulus of chi_2 and the Kronecker
# discriminant realizing it
_TWO_ADIC = {
    3: ("minus4", 4, -4), 7: ("minus4", 4, -4),
    2: ("plus8", 8, 8),
    6: ("minus8", 8, -8),
}


@dataclass(frozen=True)
class CharComponent:
    """chi_p: a primitive quadratic character of modulus N_p."""
    prime: int
    modulus: int
    tag: str           # "legendre", "minus4", "plus8", "minus8"
    kron: int          # chi_p(n) = kronecker(kron, n)
    gauss_unit: str    # "1" or "i": W(chi_p) = unit * sqrt(N_p)

    def __call__(self, n: int) -> int:
        return kronecker(self.kron, n)


@dataclass(frozen=True)
class CharData:
    N1: int
    N: int
    components: tuple[CharComponent, ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(c.prime for c in self.components)

    def component(self, p: int) -> CharComponent:
        for c in self.components:
            if c.prime == p:
                return c
        raise InvalidDivisor(f"{p} does not divide {self.N}")

    def __call__(self, n: int) -> int:
        """chi_D(n) = (N/n)."""
        return kronecker(self.N, n)


@dataclass(frozen=True)
class SignVector:
    """A choice of sign delta_p in {+1, -1} for each prime p | N."""
    signs: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> SignVector:
        for v in d.values():
            if v not in (1, -1):
                raise ValueError("signs must be +1 or -1")
        return cls(tuple(sorted(d.items())))

    def __getitem__(self, p: int) -> int:
        return dict(self.signs)[p]

    def __neg__(self) -> SignVector:
        return SignVector(tuple((p, -s) for p, s in self.signs))

    def as_dict(self) -> dict[int, int]:
        return dict(self.signs)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.signs)


def char_data(n1: int) -> CharData:
    """Character data for F = Q(sqrt(n1))."""
    if n1 <= 1:
        raise OutOfRange(f"N1 must exceed 1, got {n1}")
    if not is_squarefree(n1):
        raise NotSquarefree(f"N1 = {n1} is not squarefree")
    N = fundamental_discriminant(n1)
    comps = []
    for p in prime_divisors(N):
        if p == 2:
            tag, mod, kron = _TWO_ADIC[n1 % 8]
            unit = "1" if kron > 0 else "i"
        else:
            # (./p) = (p*/.) with p* = (-1)^((p-1)/2) p
            mod, tag = p, "legendre"
            kron = p if p % 4 == 1 else -p
            unit = "1" if p % 4 == 1 else "i"
        comps.append(CharComponent(p, mod, tag, kron, unit))
    return CharData(n1, N, tuple(comps))


def chi_component(C: CharData, m: int, n: int) -> int:
    """chi_m(n) = prod_{p | m} chi_p(n) for a divisor m of N."""
    if m <= 0 or C.N % m:
        raise InvalidDivisor(f"{m} does not divide {C.N}")
    out = 1
    for c in C.components:
        if m % c.prime == 0:
            out *= c(n)
            if not out:
                return 0
    return out


def chi_complement(C: CharData, m: int, n: int) -> int:
    """chi'_m(n): product over the primes of N not dividing m."""
    if m <= 0 or C.N % m:
        raise InvalidDivisor(f"{m} does not divide {C.N}")
    out = 1
    for c in C.components:
        if m % c.prime:
            out *= c(n)
    return out


def sign_vectors(C: CharData) -> tuple[SignVector, SignVector]:
    """(epsilon, epsilon_star).

    epsilon_p = chi_p(-1) for odd p; at 2 it is -1 when N1 = 3 mod 4 and
    chi_{N1/2}(-1) when N1 = 2 mod 4.  epsilon_star is identically +1.
    """
    eps = {}
    for c in C.components:
        if c.prime != 2:
            eps[c.prime] = c(-1)
        elif C.N1 % 4 == 3:
            eps[2] = -1
        else:
            eps[2] = chi_component(C, C.N1 // 2, -1)
    star = {p: 1 for p in C.primes}
    return SignVector.from_dict(eps), SignVector.from_dict(star)


def gauss_sum(C: CharData, p: int) -> Cyclotomic:
    """W(chi_p) = sum_{a mod N_p} chi_p(a) zeta_{N_p}^a, exactly."""
    c = C.component(p)
    out = Cyclotomic.rational(c.modulus, 0)
    for a in range(1, c.modulus):
        v = c(a)
        if v:
            out = out + root_of_unity(a, c.modulus) * v
    return out


def gauss_sum_check(C: CharData, p: int) -> bool:
    """Confirm W(chi_p)^2 = chi_p(-1) N_p exactly and W ~ unit*sqrt(N_p) numerically."""
    c = C.component(p)
    w = gauss_sum(C, p)
    square_ok = w * w == Cyclotomic.rational(c.modulus, c(-1) * c.modulus)
    z = w.to_complex()
    unit = 1 if c.gauss_unit == "1" else 1j
    root = unit * c.modulus ** 0.5
    embed_ok = abs(z - root) < 1e-9
    return square_ok and embed_ok


def is_primitive(C: CharData) -> bool:
    """chi_D is not induced from any proper divisor of N."""
    N = C.N
    for d in range(1, N):
        if N % d:
            continue
        if all(C(n) == 1 for n in range(1, N, d) if gcd(n, N) == 1):
            return False
    return True

