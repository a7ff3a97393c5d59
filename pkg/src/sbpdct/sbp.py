"""Summation by parts: accumulation, DC removal and the truncated transform sum.

For a null-mean signal the prefix sums ``z`` vanish at ``N-1``, so any
transform ``X[k] = sum_n x[n] ker[n, k]`` can be rewritten as

    X[k] = -sum_{n=0}^{N-2} z[n] * (ker[n+1, k] - ker[n, k])

which needs only the first ``N-1`` accumulated samples. The pre-processing
helpers here are written as straight-line code so they can be run on
:class:`~sbpdct.numerics.CountingScalar` values for operation counts.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from sbpdct.numerics import cyclic_forward_diff, pack, plain_vector
from sbpdct.reference import KernelId, Spectrum, dct_matrix, kernel_matrix

NULL_MEAN_TOL = 1e-12


class NotNullMeanError(ValueError):
    """Raised when an operation that assumes a zero-mean signal is given one that is not."""


class Scenario(enum.Enum):
    ARBITRARY = "arbitrary"
    NULL_MEAN = "null-mean"
    ACCUMULATED = "accumulated"
    NULL_MEAN_ACCUMULATED = "null-mean-accumulated"

    @property
    def roman(self) -> str:
        return _ROMAN[self]

    @property
    def null_mean(self) -> bool:
        return self in (Scenario.NULL_MEAN, Scenario.NULL_MEAN_ACCUMULATED)

    @property
    def accumulated(self) -> bool:
        return self in (Scenario.ACCUMULATED, Scenario.NULL_MEAN_ACCUMULATED)

    @classmethod
    def parse(cls, text: str) -> "Scenario":
        key = text.strip().lower()
        for sc, roman in _ROMAN.items():
            if key in (sc.value, roman, sc.name.lower()):
                return sc
        raise ValueError(
            f"unknown scenario {text!r}; use arbitrary|null-mean|accumulated|"
            "null-mean-accumulated or i|ii|iii|iv"
        )


_ROMAN = {
    Scenario.ARBITRARY: "i",
    Scenario.NULL_MEAN: "ii",
    Scenario.ACCUMULATED: "iii",
    Scenario.NULL_MEAN_ACCUMULATED: "iv",
}


def _is_pow2(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _require_pow2(n: int, what: str) -> None:
    if not _is_pow2(n):
        raise ValueError(f"{what} needs a power-of-two length so the mean is a shift, got {n}")


def is_null_mean(x, tol: float = NULL_MEAN_TOL) -> bool:
    v = plain_vector(x)
    if len(v) == 0:
        return True
    return abs(v.mean()) <= tol * float(np.max(np.abs(v)))


def require_null_mean(x, what: str = "signal") -> None:
    if not is_null_mean(x):
        v = plain_vector(x)
        raise NotNullMeanError(
            f"{what} must have zero mean (|mean| <= {NULL_MEAN_TOL:g} * max|x|); "
            f"got mean {v.mean():.3e}; route arbitrary signals through remove_dc"
        )


def accumulate(x) -> np.ndarray:
    """Inclusive prefix sums ``z[n] = x[0] + ... + x[n]`` (N-1 additions)."""
    x = list(x)
    if not x:
        return pack([])
    z = [x[0]]
    for v in x[1:]:
        z.append(z[-1] + v)
    return pack(z)


def forward_difference_signal(u) -> np.ndarray:
    """Inverse of :func:`accumulate`: ``x[0] = u[0]``, ``x[n] = u[n] - u[n-1]``."""
    u = list(u)
    if len(u) < 2:
        raise ValueError(f"difference system needs length >= 2, got {len(u)}")
    return pack([u[0]] + [u[n] - u[n - 1] for n in range(1, len(u))])


def sum_and_center(x):
    """Return ``(sum(x), x[0..N-2] - mean)``.

    The last centred sample is never consumed by the SBP pipeline (its prefix
    sum is zero by construction), so it is not computed: N-1 additions for the
    sum, one shift for the mean and N-1 subtractions.
    """
    x = list(x)
    N = len(x)
    _require_pow2(N, "DC removal")
    total = x[0]
    for v in x[1:]:
        total = total + v
    mean = total * (1.0 / N)
    return total, [x[n] - mean for n in range(N - 1)]


def remove_dc(x, full: bool = True) -> np.ndarray:
    """Subtract the mean. With ``full=False`` only the first N-1 samples are returned."""
    x = list(x)
    total, head = sum_and_center(x)
    if full:
        head.append(x[-1] - total * (1.0 / len(x)))
    return pack(head)


def _multiples(m, top, N: int) -> list:
    """``[1*m, 2*m, ..., (N-1)*m]`` by shifts and additions; ``top`` is ``N*m``.

    Powers of two are shifts, ``(N-1)*m`` is ``top - m``, everything else is
    the sum of its highest power of two and an already built multiple.
    """
    mult = {1: m}
    for j in range(2, N):
        if _is_pow2(j):
            mult[j] = m * float(j)
        elif j == N - 1:
            mult[j] = top - m
        else:
            hi = 1 << (j.bit_length() - 1)
            mult[j] = mult[hi] + mult[j - hi]
    return [mult[j] for j in range(1, N)]


def remove_dc_accumulated(u) -> np.ndarray:
    """DC removal carried out directly on accumulated input.

    ``z[n] = u[n] - (n+1) * u[N-1] / N`` for n < N-1 and ``z[N-1] = 0``, which
    equals ``accumulate(remove_dc(x))`` for ``u = accumulate(x)``. No
    non-trivial multiplications are used.
    """
    u = list(u)
    N = len(u)
    _require_pow2(N, "DC removal")
    if N == 1:
        return pack([0.0])
    top = u[-1]
    m = top * (1.0 / N)
    mults = _multiples(m, top, N)
    return pack([u[n] - mults[n] for n in range(N - 1)] + [0.0])


def sbp_transform(x, kid: KernelId) -> Spectrum:
    """Any kernel transform of a null-mean signal via the truncated SBP sum."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or len(x) < 2:
        raise ValueError(f"expected a 1-D signal of length >= 2, got shape {x.shape}")
    require_null_mean(x)
    z = np.cumsum(x)[:-1]
    K = kernel_matrix(kid, len(x))
    dK = K[1:, :] - K[:-1, :]
    return Spectrum(-(z @ dK))


def dct_delta_kernel(N: int, n: int, k: int) -> float:
    """Forward difference of the bare DCT-II kernel in closed form.

    ``cos(pi(2n+3)k/2N) - cos(pi(2n+1)k/2N) = -2 sin(k pi/2N) sin(k pi (n+1)/N)``.
    """
    if not (0 <= n <= N - 2 and 1 <= k <= N - 1):
        raise IndexError(f"need 0 <= n <= N-2 and 1 <= k <= N-1, got n={n}, k={k}, N={N}")
    return -2.0 * math.sin(k * math.pi / (2 * N)) * math.sin(k * math.pi * (n + 1) / N)


def sbp_diagonal(N: int) -> np.ndarray:
    """Post-multiplication factors ``(4/sqrt N) alpha_k 2 sin(k pi / 2N)``; zero at k=0."""
    k = np.arange(N)
    alpha = np.where(k == 0, 1.0 / math.sqrt(2.0), 1.0)
    return (4.0 / math.sqrt(N)) * alpha * 2.0 * np.sin(k * np.pi / (2 * N))


def sine_matrix(N: int) -> np.ndarray:
    """``(N x (N-1))`` matrix ``sin(k pi (n+1) / N)``; row 0 is zero."""
    k = np.arange(N)[:, None]
    n = np.arange(N - 1)[None, :]
    return np.sin(k * np.pi * (n + 1) / N)


def sbp_dct_general(x, scaled: bool = False) -> Spectrum:
    """N-point DCT of a null-mean signal from its accumulated samples.

    With ``scaled=True`` the bare sine-matrix product is returned and the
    diagonal factor is left in ``Spectrum.scale``.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or len(x) < 2:
        raise ValueError(f"expected a 1-D signal of length >= 2, got shape {x.shape}")
    require_null_mean(x)
    N = len(x)
    z = np.cumsum(x)[:-1]
    bare = sine_matrix(N) @ z
    d = sbp_diagonal(N)
    if scaled:
        return Spectrum(bare, scaled=True, scale=d)
    return Spectrum(d * bare)


def sbp_matrix(N: int) -> np.ndarray:
    """Negated forward difference of the DCT matrix: rows 1..N-1, columns 0..N-2.

    Applied to ``z[0..N-2]`` this gives X[1..N-1] for null-mean input.
    """
    return -cyclic_forward_diff(dct_matrix(N))[1:, : N - 1]
