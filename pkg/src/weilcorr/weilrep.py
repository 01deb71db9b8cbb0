"""Exact Weil representation rho_D of SL2(Z) on C[D].

A :class:`WeilMatrix` stores all |D|^2 entries as one flat integer tensor over
the power basis of Q(zeta_N), with a shared denominator and a flag for one
factor of 1/sqrt(N).  Two such factors are folded into the denominator
immediately, so products never grow a radical tower.

Conventions: column gamma of rho(M) is rho(M) e_gamma, so rho(M1 M2) =
rho(M1) @ rho(M2).  The lattice has signature (2, 2), so no eighth-root
phase enters rho(S).
"""
from __future__ import annotations

import math
from functools import lru_cache, reduce

import numpy as np

from . import kernels
from .discform import DiscriminantForm
from .errors import NotUnimodular
from .exactnum import Cyclotomic, CycExt, context, sqrt_in_field

S_MAT = ((0, -1), (1, 0))
T_MAT = ((1, 1), (0, 1))


def matmul2(A, B):
    (a, b), (c, d) = A
    (e, f), (g, h) = B
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def as_matrix(M):
    """Normalize a 2x2 integer matrix (nested or flat ``a,b,c,d``) and check det 1."""
    if len(M) == 4:
        a, b, c, d = (int(x) for x in M)
    else:
        (a, b), (c, d) = ((int(x) for x in row) for row in M)
    if a * d - b * c != 1:
        raise NotUnimodular(f"det of {[[a, b], [c, d]]} is {a * d - b * c}, not 1")
    return ((a, b), (c, d))


class WeilMatrix:
    """An |D| x |D| matrix over Q(zeta_N)[1/sqrt(N)]."""

    __slots__ = ("N", "n", "data", "den", "sqrt_power")

    def __init__(self, N: int, n: int, data, den: int = 1, sqrt_power: int = 0):
        self.N = N
        self.n = n
        data = list(data)
        while sqrt_power >= 2:
            sqrt_power -= 2
            den *= N
        g = reduce(math.gcd, data, den)
        if g > 1:
            data = [x // g for x in data]
            den //= g
        self.data = data
        self.den = den
        self.sqrt_power = sqrt_power

    @property
    def degree(self) -> int:
        return context(self.N).degree

    def _cyc(self, i: int, j: int) -> Cyclotomic:
        d = self.degree
        off = (i * self.n + j) * d
        return Cyclotomic(self.N, self.data[off:off + d], self.den)

    def entry(self, i: int, j: int) -> CycExt:
        c = self._cyc(i, j)
        if self.sqrt_power:
            return CycExt(Cyclotomic.rational(self.N, 0), c, self.N)
        return CycExt(c, 0, self.N)

    def __matmul__(self, other: WeilMatrix) -> WeilMatrix:
        if (self.N, self.n) != (other.N, other.n):
            raise ValueError("shape or field mismatch")
        phi = list(context(self.N).phi)
        data = kernels.cyc_matmul(self.data, other.data, self.n, phi)
        return WeilMatrix(self.N, self.n, data, self.den * other.den,
                          self.sqrt_power + other.sqrt_power)

    def __pow__(self, k: int) -> WeilMatrix:
        if k < 0:
            return self.adjoint() ** (-k)
        out = identity(self.N, self.n)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def _collapsed(self):
        """(data, den) of the same matrix with 1/sqrt(N) absorbed into Q(zeta_N)."""
        if not self.sqrt_power:
            return tuple(self.data), self.den
        root = sqrt_in_field(self.N, self.N)
        d = self.degree
        rden = root.den
        out = []
        for k in range(self.n * self.n):
            c = Cyclotomic._raw(self.N, self.data[k * d:(k + 1) * d], 1) * Cyclotomic._raw(self.N, root.num, 1)
            out.extend(c.num)
        den = self.den * self.N * rden
        g = reduce(math.gcd, out, den)
        return tuple(x // g for x in out), den // g

    def __eq__(self, other):
        if not isinstance(other, WeilMatrix):
            return NotImplemented
        if (self.N, self.n) != (other.N, other.n):
            return False
        if self.sqrt_power == other.sqrt_power:
            return self.den == other.den and self.data == other.data
        return self._collapsed() == other._collapsed()

    def __hash__(self):
        return hash((self.N, self.n, self._collapsed()))

    def conj(self) -> WeilMatrix:
        """Entrywise complex conjugate (1/sqrt(N) is real)."""
        d = self.degree
        out = []
        for k in range(self.n * self.n):
            c = Cyclotomic._raw(self.N, self.data[k * d:(k + 1) * d], 1).conj()
            out.extend(c.num)
        return WeilMatrix(self.N, self.n, out, self.den, self.sqrt_power)

    def transpose(self) -> WeilMatrix:
        d, n = self.degree, self.n
        out = []
        for i in range(n):
            for j in range(n):
                off = (j * n + i) * d
                out.extend(self.data[off:off + d])
        return WeilMatrix(self.N, n, out, self.den, self.sqrt_power)

    def adjoint(self) -> WeilMatrix:
        return self.conj().transpose()

    def is_identity(self) -> bool:
        return self == identity(self.N, self.n)

    def is_unitary(self) -> bool:
        return (self @ self.adjoint()).is_identity()

    def is_diagonal(self) -> bool:
        d, n = self.degree, self.n
        for i in range(n):
            for j in range(n):
                if i != j and any(self.data[(i * n + j) * d:(i * n + j + 1) * d]):
                    return False
        return True

    def to_numpy(self) -> np.ndarray:
        d, n = self.degree, self.n
        z = np.exp(2j * np.pi * np.arange(d) / self.N)
        vals = np.asarray(self.data, dtype=float).reshape(n, n, d) @ z
        scale = 1.0 / self.den
        if self.sqrt_power:
            scale /= math.sqrt(self.N)
        return vals * scale

    def to_json(self, D: DiscriminantForm | None = None) -> dict:
        out = {"N": self.N, "dim": self.n,
               "entries": [[self.entry(i, j).to_json() for j in range(self.n)] for i in range(self.n)]}
        if D is not None:
            out["n1"] = D.N1
            out["basis"] = [list(g) for g in D.elements]
        return out

    def __repr__(self):
        return f"WeilMatrix(N={self.N}, dim={self.n})"


def identity(N: int, n: int) -> WeilMatrix:
    d = context(N).degree
    data = [0] * (n * n * d)
    for i in range(n):
        data[(i * n + i) * d] = 1
    return WeilMatrix(N, n, data)


def rho_T(D: DiscriminantForm, k: int = 1) -> WeilMatrix:
    """rho(T^k) = diag(e(k q(gamma)))."""
    N, n = D.N, D.size
    ctx = context(N)
    d = ctx.degree
    data = [0] * (n * n * d)
    for i, g in enumerate(D.elements):
        off = (i * n + i) * d
        data[off:off + d] = ctx.powers[(k * D.norm_num(g)) % N]
    return WeilMatrix(N, n, data)


@lru_cache(maxsize=64)
def rho_S(D: DiscriminantForm) -> WeilMatrix:
    """Entry (delta, gamma) = e(-(gamma, delta)) / sqrt(N)."""
    N, n = D.N, D.size
    ctx = context(N)
    d = ctx.degree
    els = D.elements
    data = [0] * (n * n * d)
    for i, delta in enumerate(els):
        for j, gamma in enumerate(els):
            off = (i * n + j) * d
            data[off:off + d] = ctx.powers[(-D.bilinear_num(gamma, delta)) % N]
    return WeilMatrix(N, n, data, 1, 1)


def decompose_word(M) -> list[tuple[str, int]]:
    """Write M in SL2(Z) as a product of S and T^k tokens, left to right.

    Nearest-integer continued fraction on the first column; each S step at
    least halves |c|.
    """
    (a, b), (c, d) = as_matrix(M)
    word: list[tuple[str, int]] = []
    while c != 0:
        q = _nearest(a, c)
        if q:
            word.append(("T", q))
            a, b = a - q * c, b - q * d
        word.append(("S", 1))
        a, b, c, d = c, d, -a, -b
    if a == 1:
        if b:
            word.append(("T", b))
    else:
        word.extend([("S", 1), ("S", 1)])
        if b:
            word.append(("T", -b))
    return word


def _nearest(a: int, c: int) -> int:
    """floor(a/c + 1/2), exact for either sign of c."""
    return (2 * a + c) // (2 * c)


def word_to_matrix(word) -> tuple:
    out = ((1, 0), (0, 1))
    for tok, k in word:
        if tok == "S":
            for _ in range(k % 4):
                out = matmul2(out, S_MAT)
        else:
            out = matmul2(out, ((1, k), (0, 1)))
    return out


def word_rho(D: DiscriminantForm, word) -> WeilMatrix:
    out = identity(D.N, D.size)
    for tok, k in word:
        g = rho_S(D) ** (k % 4) if tok == "S" else rho_T(D, k)
        out = out @ g
    return out


def rho(D: DiscriminantForm, M) -> WeilMatrix:
    return word_rho(D, decompose_word(M))


def dual_rho(D: DiscriminantForm, M) -> WeilMatrix:
    """The dual representation: entrywise complex conjugate of rho(M)."""
    return rho(D, M).conj()


def apply(Mx: WeilMatrix, vec) -> list:
    """Numerically apply ``Mx`` to a complex vector indexed like D.elements."""
    return list(Mx.to_numpy() @ np.asarray(vec, dtype=complex))

