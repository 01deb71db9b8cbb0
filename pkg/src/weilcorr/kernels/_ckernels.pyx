# cython: boundscheck=False, wraparound=False, cdivision=True
"""int64 versions of the integer kernels.

Each function returns ``None`` if an input does not fit in int64 or if any
intermediate product or sum would overflow; the caller then reruns the
pure-Python kernel.  Results that are returned are therefore exact.
"""
from libc.stdlib cimport calloc, free

cdef extern from *:
    """
    static int wc_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int wc_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static int wc_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int wc_mul_ovf(long long a, long long b, long long *r) nogil
    int wc_add_ovf(long long a, long long b, long long *r) nogil
    int wc_sub_ovf(long long a, long long b, long long *r) nogil


cdef long long* _alloc(Py_ssize_t n) except NULL:
    cdef long long* p = <long long*> calloc(n if n > 0 else 1, sizeof(long long))
    if p == NULL:
        raise MemoryError()
    return p


cdef int _load(object xs, long long* buf, Py_ssize_t n) except -1:
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = xs[i]
    return 0


cdef list _dump(long long* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    return [buf[i] for i in range(n)]


cdef int _fma(long long* acc, long long x, long long y) nogil:
    # acc += x * y; returns 1 on overflow
    cdef long long t
    if wc_mul_ovf(x, y, &t):
        return 1
    return wc_add_ovf(acc[0], t, acc)


cdef int _fms(long long* acc, long long x, long long y) nogil:
    # acc -= x * y; returns 1 on overflow
    cdef long long t
    if wc_mul_ovf(x, y, &t):
        return 1
    return wc_sub_ovf(acc[0], t, acc)


def mul_trunc(a, b, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n), lb = min(len(b), n), i, j, lim
    cdef long long *pa = NULL
    cdef long long *pb = NULL
    cdef long long *out = NULL
    cdef long long ai
    try:
        pa = _alloc(la)
        pb = _alloc(lb)
        out = _alloc(n)
        try:
            _load(a, pa, la)
            _load(b, pb, lb)
        except OverflowError:
            return None
        for i in range(la):
            ai = pa[i]
            if ai == 0:
                continue
            lim = n - i
            if lb < lim:
                lim = lb
            for j in range(lim):
                if pb[j] != 0 and _fma(&out[i + j], ai, pb[j]):
                    return None
        return _dump(out, n)
    finally:
        free(pa)
        free(pb)
        free(out)


def div_trunc(a, b, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n), lb = min(len(b), n), k, j, top
    cdef long long *pa = NULL
    cdef long long *pb = NULL
    cdef long long *out = NULL
    cdef long long s, b0
    if b[0] not in (1, -1):
        raise ValueError("leading coefficient of divisor must be a unit")
    try:
        pa = _alloc(la)
        pb = _alloc(lb)
        out = _alloc(n)
        try:
            _load(a, pa, la)
            _load(b, pb, lb)
        except OverflowError:
            return None
        b0 = pb[0]
        for k in range(n):
            s = pa[k] if k < la else 0
            top = k if k < lb - 1 else lb - 1
            for j in range(1, top + 1):
                if pb[j] != 0 and _fms(&s, pb[j], out[k - j]):
                    return None
            if _fma(&out[k], s, b0):
                return None
        return _dump(out, n)
    finally:
        free(pa)
        free(pb)
        free(out)


cdef int _reduce(long long* prod, Py_ssize_t w, long long* phi, Py_ssize_t d) nogil:
    cdef Py_ssize_t i, j, base
    cdef long long c
    for i in range(w - 1, d - 1, -1):
        c = prod[i]
        if c != 0:
            base = i - d
            for j in range(d):
                if phi[j] != 0 and _fms(&prod[base + j], c, phi[j]):
                    return 1
            prod[i] = 0
    return 0


def cyc_mulmod(a, b, phi):
    cdef Py_ssize_t d = len(phi) - 1, w = 2 * d - 1, i, j
    cdef long long *pa = NULL
    cdef long long *pb = NULL
    cdef long long *pphi = NULL
    cdef long long *prod = NULL
    try:
        pa = _alloc(d)
        pb = _alloc(d)
        pphi = _alloc(d + 1)
        prod = _alloc(w)
        try:
            _load(a, pa, d)
            _load(b, pb, d)
            _load(phi, pphi, d + 1)
        except OverflowError:
            return None
        for i in range(d):
            if pa[i] == 0:
                continue
            for j in range(d):
                if pb[j] != 0 and _fma(&prod[i + j], pa[i], pb[j]):
                    return None
        if _reduce(prod, w, pphi, d):
            return None
        return _dump(prod, d)
    finally:
        free(pa)
        free(pb)
        free(pphi)
        free(prod)


def cyc_matmul(A, B, Py_ssize_t n, phi):
    cdef Py_ssize_t d = len(phi) - 1, w = 2 * d - 1
    cdef Py_ssize_t size = n * n * d, i, j, k, s, t, aoff, boff
    cdef long long *pA = NULL
    cdef long long *pB = NULL
    cdef long long *pphi = NULL
    cdef long long *acc = NULL
    cdef long long *out = NULL
    cdef long long x
    cdef bint nz
    try:
        pA = _alloc(size)
        pB = _alloc(size)
        pphi = _alloc(d + 1)
        acc = _alloc(n * w)
        out = _alloc(size)
        try:
            _load(A, pA, size)
            _load(B, pB, size)
            _load(phi, pphi, d + 1)
        except OverflowError:
            return None
        for i in range(n):
            for j in range(n * w):
                acc[j] = 0
            for k in range(n):
                aoff = (i * n + k) * d
                nz = False
                for s in range(d):
                    if pA[aoff + s] != 0:
                        nz = True
                        break
                if not nz:
                    continue
                for j in range(n):
                    boff = (k * n + j) * d
                    for s in range(d):
                        x = pA[aoff + s]
                        if x == 0:
                            continue
                        for t in range(d):
                            if pB[boff + t] != 0 and _fma(&acc[j * w + s + t], x, pB[boff + t]):
                                return None
            for j in range(n):
                if _reduce(&acc[j * w], w, pphi, d):
                    return None
                for s in range(d):
                    out[(i * n + j) * d + s] = acc[j * w + s]
        return _dump(out, size)
    finally:
        free(pA)
        free(pB)
        free(pphi)
        free(acc)
        free(out)
