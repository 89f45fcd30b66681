"""Symmetric Toeplitz matrix application, dense and FFT-based.

The jump-sum of the semi-discrete operator is a symmetric Toeplitz
matvec. The fast path embeds the kernel in a circulant of power-of-two
size and multiplies in Fourier space; the dense path is the literal
row-by-row evaluation and doubles as the correctness oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.fft

__all__ = [
    "SymmetricToeplitzKernel",
    "PreparedToeplitz",
    "matvec_naive",
    "matvec_fft",
]


@dataclass(frozen=True, eq=False)
class SymmetricToeplitzKernel:
    """First column c_0..c_{N-1} of a symmetric Toeplitz matrix, T_ij = c_|i-j|."""

    first_col: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.first_col, dtype=np.float64)
        if c.ndim != 1 or c.size < 1:
            raise ValueError("kernel needs a nonempty 1-d first column")
        if not np.all(np.isfinite(c)):
            raise ValueError("kernel entries must be finite")
        object.__setattr__(self, "first_col", c)

    @property
    def n(self) -> int:
        return self.first_col.size

    def prepare(self) -> "PreparedToeplitz":
        return PreparedToeplitz(self)


class PreparedToeplitz:
    """Circulant embedding of a kernel with its transform precomputed.

    The transform of the embedded column is taken once here; matvec
    then costs two real FFTs of fixed power-of-two size, so one
    prepared object is meant to be reused across every step of a run.
    """

    def __init__(self, kernel: SymmetricToeplitzKernel) -> None:
        c = kernel.first_col
        n = c.size
        m = 1 << (2 * n - 1).bit_length() if n > 1 else 1
        col = np.zeros(m)
        col[:n] = c
        if n > 1:
            col[m - n + 1 :] = c[1:][::-1]
        self.n = n
        self.m = m
        self._kernel_hat = scipy.fft.rfft(col)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.float64)
        if v.shape != (self.n,):
            raise ValueError(f"vector length {v.shape} does not match kernel size {self.n}")
        prod = scipy.fft.rfft(v, n=self.m) * self._kernel_hat
        return scipy.fft.irfft(prod, n=self.m)[: self.n]


def matvec_naive(kernel: SymmetricToeplitzKernel, v: np.ndarray) -> np.ndarray:
    """Dense evaluation of T v, one exact inner product per row."""
    c = kernel.first_col
    n = c.size
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (n,):
        raise ValueError(f"vector length {v.shape} does not match kernel size {n}")
    rc = c[::-1].copy()  # rc[m] = c[n-1-m], contiguous for the reversed segment
    out = np.empty(n)
    for i in range(n):
        # row i is (c_i, c_{i-1}, ..., c_1, c_0, c_1, ..., c_{n-1-i})
        out[i] = np.dot(rc[n - 1 - i : n - 1], v[:i]) + np.dot(c[: n - i], v[i:])
    return out


def matvec_fft(kernel: SymmetricToeplitzKernel, v: np.ndarray) -> np.ndarray:
    """One-shot fast T v; prepare the kernel yourself when applying it repeatedly."""
    return kernel.prepare().matvec(v)
