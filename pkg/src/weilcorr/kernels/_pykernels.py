"""Reference implementations of the integer kernels.

Every function takes and returns plain lists of Python ints, so results are
exact for arbitrarily large coefficients.  The Cython module mirrors these
signatures and returns ``None`` when its int64 arithmetic would overflow.
"""


def mul_trunc(a, b, n):
    """First ``n`` coefficients of the product of two dense series."""
    out = [0] * n
    lb = min(len(b), n)
    for i in range(min(len(a), n)):
        ai = a[i]
        if not ai:
            continue
        for j in range(min(lb, n - i)):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def div_trunc(a, b, n):
    """First ``n`` coefficients of ``a / b`` for ``b[0] in (1, -1)``."""
    b0 = b[0]
    if b0 not in (1, -1):
        raise ValueError("leading coefficient of divisor must be a unit")
    lb = len(b)
    la = len(a)
    out = [0] * n
    for k in range(n):
        s = a[k] if k < la else 0
        for j in range(1, min(k, lb - 1) + 1):
            bj = b[j]
            if bj:
                s -= bj * out[k - j]
        out[k] = s * b0
    return out


def _reduce(prod, phi):
    d = len(phi) - 1
    for i in range(len(prod) - 1, d - 1, -1):
        c = prod[i]
        if c:
            base = i - d
            for j in range(d):
                if phi[j]:
                    prod[base + j] -= c * phi[j]
            prod[i] = 0
    return prod[:d]


def cyc_mulmod(a, b, phi):
    """Product of two length-``d`` vectors modulo the monic ``phi``."""
    d = len(phi) - 1
    prod = [0] * (2 * d - 1)
    for i in range(d):
        ai = a[i]
        if ai:
            for j in range(d):
                if b[j]:
                    prod[i + j] += ai * b[j]
    return _reduce(prod, phi)


def cyc_matmul(A, B, n, phi):
    """Matrix product over Z[x]/(phi).

    ``A`` and ``B`` are flattened row-major ``n x n`` arrays whose entries are
    length-``d`` coefficient vectors (``d = len(phi) - 1``).
    """
    d = len(phi) - 1
    w = 2 * d - 1
    out = []
    for i in range(n):
        acc = [[0] * w for _ in range(n)]
        for k in range(n):
            off = (i * n + k) * d
            aik = A[off:off + d]
            if not any(aik):
                continue
            for j in range(n):
                boff = (k * n + j) * d
                bkj = B[boff:boff + d]
                row = acc[j]
                for s in range(d):
                    x = aik[s]
                    if x:
                        for t in range(d):
                            y = bkj[t]
                            if y:
                                row[s + t] += x * y
        for j in range(n):
            out.extend(_reduce(acc[j], phi))
    return out
