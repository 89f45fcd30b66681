import time

import numpy as np
import pytest

from levyfp.toeplitz import (
    PreparedToeplitz,
    SymmetricToeplitzKernel,
    matvec_fft,
    matvec_naive,
)


def test_identity_kernel():
    k = SymmetricToeplitzKernel(np.array([1.0, 0.0, 0.0]))
    v = np.array([3.0, -1.0, 2.0])
    assert np.allclose(matvec_naive(k, v), v)
    assert np.allclose(matvec_fft(k, v), v, atol=1e-12)


def test_tridiagonal_kernel():
    k = SymmetricToeplitzKernel(np.array([2.0, 1.0, 0.0, 0.0]))
    v = np.array([1.0, 0.0, 0.0, 1.0])
    expected = np.array([2.0, 1.0, 1.0, 2.0])
    assert np.allclose(matvec_naive(k, v), expected)
    assert np.allclose(matvec_fft(k, v), expected, atol=1e-12)


def test_single_entry_kernel():
    k = SymmetricToeplitzKernel(np.array([4.0]))
    assert np.allclose(matvec_fft(k, np.array([2.5])), [10.0])


def test_fft_matches_naive_random():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(1, 513))
        k = SymmetricToeplitzKernel(rng.standard_normal(n))
        v = rng.standard_normal(n)
        a = matvec_naive(k, v)
        b = matvec_fft(k, v)
        assert np.max(np.abs(a - b)) < 1e-10 * max(1.0, np.max(np.abs(a)))


def test_matches_dense_matrix():
    rng = np.random.default_rng(3)
    c = rng.standard_normal(17)
    dense = np.array([[c[abs(i - j)] for j in range(17)] for i in range(17)])
    v = rng.standard_normal(17)
    assert np.allclose(matvec_naive(SymmetricToeplitzKernel(c), v), dense @ v, atol=1e-12)


def test_linearity():
    rng = np.random.default_rng(11)
    k = SymmetricToeplitzKernel(rng.standard_normal(64)).prepare()
    u, v = rng.standard_normal(64), rng.standard_normal(64)
    lhs = k.matvec(2.0 * u - 3.0 * v)
    rhs = 2.0 * k.matvec(u) - 3.0 * k.matvec(v)
    assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_prepared_reuse_consistent():
    rng = np.random.default_rng(2)
    k = SymmetricToeplitzKernel(rng.standard_normal(100))
    prep = k.prepare()
    for _ in range(5):
        v = rng.standard_normal(100)
        assert np.allclose(prep.matvec(v), matvec_naive(k, v), atol=1e-10)


def test_embedding_size_is_power_of_two():
    prep = PreparedToeplitz(SymmetricToeplitzKernel(np.ones(1000)))
    assert prep.m >= 2 * 1000 - 1
    assert prep.m & (prep.m - 1) == 0


def test_rejects_bad_kernel_and_vector():
    with pytest.raises(ValueError):
        SymmetricToeplitzKernel(np.array([]))
    with pytest.raises(ValueError):
        SymmetricToeplitzKernel(np.array([1.0, np.inf]))
    k = SymmetricToeplitzKernel(np.ones(4))
    with pytest.raises(ValueError):
        matvec_naive(k, np.ones(5))
    with pytest.raises(ValueError):
        k.prepare().matvec(np.ones(5))


def test_fft_path_is_fast_at_scale():
    n = 1 << 16
    rng = np.random.default_rng(1)
    k = SymmetricToeplitzKernel(rng.standard_normal(n))
    v = rng.standard_normal(n)
    prep = k.prepare()
    prep.matvec(v)  # warm up
    t0 = time.perf_counter()
    prep.matvec(v)
    fast = time.perf_counter() - t0

    # dense cost scales quadratically; time a slice and extrapolate
    rows = 256
    t0 = time.perf_counter()
    c = k.first_col
    rc = c[::-1].copy()
    for i in range(rows):
        np.dot(rc[n - 1 - i : n - 1], v[:i])
        np.dot(c[: n - i], v[i:])
    dense_est = (time.perf_counter() - t0) * (n / rows)
    assert dense_est > 10.0 * fast
