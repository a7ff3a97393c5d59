"""Ground-truth transforms evaluated straight from their definitions.

The DCT here uses the ``(4/sqrt(N)) * alpha_k`` normalisation, under which the
8-point DC and k=4 rows need no multiplications. Because the matrix equals
``2*sqrt(2)`` times the orthonormal DCT-II for every N, its inverse is
``C.T / 8``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from sbpdct.numerics import trig_constants


class KernelId(enum.Enum):
    DFT = "dft"
    DHT = "dht"
    DCT2 = "dct2"
    DST4 = "dst4"


@dataclass
class Spectrum:
    """Transform-domain vector.

    When ``scaled`` is set, ``values * scale`` gives the true coefficients.
    """

    values: np.ndarray
    scaled: bool = False
    scale: np.ndarray | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.values)

    def descaled(self) -> np.ndarray:
        if not self.scaled:
            return np.asarray(self.values)
        return np.asarray(self.values) * np.asarray(self.scale)


def _signal(x, min_len: int = 2) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or len(x) < min_len:
        raise ValueError(f"expected a 1-D signal of length >= {min_len}, got shape {x.shape}")
    return x


def dct_matrix(N: int) -> np.ndarray:
    if N < 2:
        raise ValueError(f"DCT size must be >= 2, got {N}")
    n = np.arange(N)
    k = n[:, None]
    alpha = np.where(k == 0, 1.0 / math.sqrt(2.0), 1.0)
    return (4.0 / math.sqrt(N)) * alpha * np.cos(np.pi * (2 * n + 1) * k / (2 * N))


def dct_forward(x) -> Spectrum:
    x = _signal(x)
    return Spectrum(dct_matrix(len(x)) @ x)


def dct_inverse(X: Spectrum | np.ndarray) -> np.ndarray:
    if isinstance(X, Spectrum):
        if X.scaled:
            raise ValueError("dct_inverse needs exact coefficients; apply the scale vector first")
        X = X.values
    X = _signal(X)
    return dct_matrix(len(X)).T @ X / 8.0


def kernel_value(kid: KernelId, N: int, n: int, k: int):
    if not (0 <= n < N and 0 <= k < N):
        raise IndexError(f"kernel index (n={n}, k={k}) out of range for N={N}")
    if kid is KernelId.DFT:
        return complex(math.cos(2 * math.pi * n * k / N), -math.sin(2 * math.pi * n * k / N))
    if kid is KernelId.DHT:
        t = 2 * math.pi * n * k / N
        return math.cos(t) + math.sin(t)
    if kid is KernelId.DCT2:
        return math.cos(math.pi * (2 * n + 1) * k / (2 * N))
    if kid is KernelId.DST4:
        return math.sin(math.pi / N * (k + 0.5) * (n + 0.5))
    raise ValueError(f"unknown kernel {kid!r}")


def kernel_matrix(kid: KernelId, N: int) -> np.ndarray:
    """``K[n, k] = ker[n, k]``; complex dtype for the DFT only."""
    n = np.arange(N)[:, None]
    k = np.arange(N)[None, :]
    if kid is KernelId.DFT:
        return np.exp(-2j * np.pi * n * k / N)
    if kid is KernelId.DHT:
        t = 2 * np.pi * n * k / N
        return np.cos(t) + np.sin(t)
    if kid is KernelId.DCT2:
        return np.cos(np.pi * (2 * n + 1) * k / (2 * N))
    if kid is KernelId.DST4:
        return np.sin(np.pi / N * (k + 0.5) * (n + 0.5))
    raise ValueError(f"unknown kernel {kid!r}")


def direct_transform(x, kid: KernelId) -> Spectrum:
    """Bare kernel sum ``X[k] = sum_n x[n] ker[n, k]``, no normalisation."""
    x = _signal(x)
    return Spectrum(x @ kernel_matrix(kid, len(x)))


def product_form_ctilde() -> np.ndarray:
    """The 7x7 null-mean DCT matrix, written entry by entry as sine products.

    Row k (k = 1..7) acts on the accumulated samples z[0..6] and yields X[k].
    Built independently of the fast factorisation so it can serve as its oracle.
    """
    s = trig_constants().s
    s1, s2, s3, s4, s5, s6, s7 = s[1:]
    rows = [
        [s1 * s2, s1 * s4, s1 * s6, s1, s1 * s6, s1 * s4, s1 * s2],
        [s2 * s4, s2, s2 * s4, 0.0, -s2 * s4, -s2, -s2 * s4],
        [s3 * s6, s3 * s4, -s3 * s2, -s3, -s3 * s2, s3 * s4, s3 * s6],
        [s4, 0.0, -s4, 0.0, s4, 0.0, -s4],
        [s5 * s6, -s5 * s4, -s5 * s2, s5, -s5 * s2, -s5 * s4, s5 * s6],
        [s6 * s4, -s6, s6 * s4, 0.0, -s6 * s4, s6, -s6 * s4],
        [s7 * s2, -s7 * s4, s7 * s6, -s7, s7 * s6, -s7 * s4, s7 * s2],
    ]
    return 2.0 * math.sqrt(2.0) * np.array(rows)
