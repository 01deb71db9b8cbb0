from hypothesis import given, strategies as st

from weilcorr import kernels
from weilcorr.exactnum import cyclotomic_polynomial
from weilcorr.kernels import _pykernels

small = st.lists(st.integers(-50, 50), min_size=1, max_size=30)
huge = st.lists(st.integers(-2**70, 2**70), min_size=1, max_size=12)


@given(small, small, st.integers(0, 40))
def test_mul_trunc_matches_reference(a, b, n):
    assert kernels.mul_trunc(a, b, n) == _pykernels.mul_trunc(a, b, n)


@given(huge, huge, st.integers(0, 15))
def test_mul_trunc_overflow_falls_back_exactly(a, b, n):
    assert kernels.mul_trunc(a, b, n) == _pykernels.mul_trunc(a, b, n)


@given(small, small, st.sampled_from([1, -1]), st.integers(1, 30))
def test_div_trunc_inverts_mul(a, b, b0, n):
    b = [b0] + b
    q = kernels.div_trunc(a, b, n)
    assert q == _pykernels.div_trunc(a, b, n)
    back = kernels.mul_trunc(q, b, n)
    assert back == (a + [0] * n)[:n]


def test_div_trunc_rejects_nonunit():
    import pytest
    with pytest.raises(ValueError):
        _pykernels.div_trunc([1], [2, 1], 3)


@given(st.sampled_from([5, 8, 12, 24, 28]), st.data())
def test_cyc_mulmod_and_matmul_match(N, data):
    phi = list(cyclotomic_polynomial(N))
    d = len(phi) - 1
    vec = st.lists(st.integers(-30, 30), min_size=d, max_size=d)
    a, b = data.draw(vec), data.draw(vec)
    assert kernels.cyc_mulmod(a, b, phi) == _pykernels.cyc_mulmod(a, b, phi)
    n = data.draw(st.integers(1, 3))
    mat = st.lists(st.integers(-5, 5), min_size=n * n * d, max_size=n * n * d)
    A, B = data.draw(mat), data.draw(mat)
    assert kernels.cyc_matmul(A, B, n, phi) == _pykernels.cyc_matmul(A, B, n, phi)


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")
