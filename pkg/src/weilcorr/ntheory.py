"""Small elementary number theory helpers (trial division sized)."""
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` as ``{p: e}``; empty for 0 and 1."""
    n = abs(n)
    out: dict[int, int] = {}
    if n < 2:
        return out
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


def omega(n: int) -> int:
    """Number of distinct prime divisors of ``n`` (0 for n = 0 by convention of gcd use)."""
    return len(factorize(n))


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factorize(n).values())


def part(N: int, m: int) -> int:
    """The m-part N_m of N: the largest divisor of N built from primes dividing m.

    For m = 0 every prime divides m, so N_0 = N.
    """
    out = 1
    for p, e in factorize(N).items():
        if m % p == 0:
            out *= p**e
    return out


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), fully multiplicative in n.

    Conventions: (a/0) = 1 if a = +-1 else 0; (a/-1) = sign(a) (with
    (0/-1) = 1); (a/2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * jacobi(a, n)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via Euler's criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sigma_table(k: int, n: int) -> list[int]:
    """``[sigma_k(0)=0, sigma_k(1), ..., sigma_k(n-1)]`` by a divisor sieve."""
    out = [0] * n
    for d in range(1, n):
        dk = d**k
        for m in range(d, n, d):
            out[m] += dk
    return out


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    s = sum(comb(n + 1, k) * bernoulli(k) for k in range(n))
    return -s / (n + 1)


def bernoulli_poly(n: int, x: Fraction) -> Fraction:
    return sum((comb(n, k) * bernoulli(k) * x ** (n - k) for k in range(n + 1)), Fraction(0))


def fundamental_discriminant(n1: int) -> int:
    """Discriminant of Q(sqrt(n1)) for squarefree n1."""
    return n1 if n1 % 4 == 1 else 4 * n1


def crt_unit(n: int, p: int, at_p: int) -> int:
    """The residue u mod n with u = at_p mod p and u = 1 mod n/p (p exactly divides n)."""
    m = n // p
    if gcd(m, p) != 1:
        raise ValueError("p must divide n exactly once")
    # u = 1 + m*t, need 1 + m*t = at_p mod p
    t = ((at_p - 1) * pow(m, -1, p)) % p
    return (1 + m * t) % n


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s) -> Fraction:
    return Fraction(s)
