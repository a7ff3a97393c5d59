"""Baseline 8-point DCTs for comparison: naive matrix product, Loeffler and Arai.

Both fast baselines follow their usual published flow graphs, adapted to the
``(4/sqrt 8) alpha_k`` normalisation used throughout this package. With that
normalisation X[0] and X[4] come out of the butterflies with no multiplication.

``null_mean=True`` drops the DC path: with a zero-sum input the second even
partial sum is the negative of the first, so X[4] becomes a shift and three
additions disappear.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from sbpdct.numerics import mat_vec, pack, trig_constants
from sbpdct.reference import Spectrum, dct_matrix

_T = trig_constants()
_SQRT2 = math.sqrt(2.0)


class AlgorithmId(enum.Enum):
    NAIVE = "naive"
    PROPOSED = "proposed"
    LOEFFLER = "loeffler"
    ARAI = "arai"

    @classmethod
    def parse(cls, text: str) -> "AlgorithmId":
        try:
            return cls(text.strip().lower())
        except ValueError:
            names = "|".join(a.value for a in cls)
            raise ValueError(f"unknown algorithm {text!r}; use {names}") from None


def _eight(x) -> list:
    x = list(x)
    if len(x) != 8:
        raise ValueError(f"8-point transform needs exactly 8 samples, got {len(x)}")
    return x


def _rotate(x, y, c: float, s: float):
    """``(c*x + s*y, c*y - s*x)`` with three multiplications and three additions."""
    k = c * (x + y)
    return k + (s - c) * y, k - (c + s) * x


def naive8(x) -> Spectrum:
    return Spectrum(mat_vec(dct_matrix(8), _eight(x)))


# Loeffler constants
_C = _T.c
_L_EVEN = (_SQRT2 * _C[6], _SQRT2 * _C[2])  # rotation by sqrt2*c6
_L_ROT3 = (_C[3], _C[5])
_L_ROT1 = (_C[1], _C[7])


def loeffler8(x, null_mean: bool = False) -> Spectrum:
    """Exact 8-point DCT: 11 multiplications, 29 additions (26 with ``null_mean``)."""
    x0, x1, x2, x3, x4, x5, x6, x7 = _eight(x)
    # stage 1
    a0 = x0 + x7
    a1 = x1 + x6
    a2 = x2 + x5
    a3 = x3 + x4
    b0 = x0 - x7
    b1 = x1 - x6
    b2 = x2 - x5
    b3 = x3 - x4
    # even half
    e0 = a0 + a3
    e3 = a0 - a3
    e2 = a1 - a2
    if null_mean:
        X0 = 0.0
        X4 = e0 * 2.0
    else:
        e1 = a1 + a2
        X0 = e0 + e1
        X4 = e0 - e1
    X2, X6 = _rotate(e2, e3, *_L_EVEN)
    # odd half: two rotations, a butterfly pair, then sqrt2 on the middle outputs
    p, q = _rotate(b3, b0, *_L_ROT3)
    r, t = _rotate(b2, b1, *_L_ROT1)
    u = q + r
    v = q - r
    w = p + t
    h = p - t
    X1 = u + w
    X7 = u - w
    X3 = _SQRT2 * v
    X5 = _SQRT2 * h
    return Spectrum(pack([X0, X1, X2, X3, X4, X5, X6, X7]))


_A1 = _T.c[4]  # cos(pi/4)
_A2 = _T.c[2] - _T.c[6]
_A3 = _T.c[4]
_A4 = _T.c[2] + _T.c[6]
_A5 = _T.c[6]


def arai_scale() -> np.ndarray:
    """Per-coefficient factors turning Arai outputs into exact coefficients.

    Output k comes out multiplied by ``sqrt2 c_k`` (k >= 1), so the scale is
    ``1 / (sqrt2 c_k)``; slots 0 and 4 are exactly 1.
    """
    v = np.array([1.0] + [1.0 / (_SQRT2 * _T.c[k]) for k in range(1, 8)])
    v[4] = 1.0
    return v


def arai8(x, null_mean: bool = False) -> Spectrum:
    """Scaled 8-point DCT: 5 multiplications, 29 additions (26 with ``null_mean``)."""
    d0, d1, d2, d3, d4, d5, d6, d7 = _eight(x)
    t0 = d0 + d7
    t7 = d0 - d7
    t1 = d1 + d6
    t6 = d1 - d6
    t2 = d2 + d5
    t5 = d2 - d5
    t3 = d3 + d4
    t4 = d3 - d4
    # even part
    t10 = t0 + t3
    t13 = t0 - t3
    t12 = t1 - t2
    if null_mean:
        y0 = 0.0
        y4 = t10 * 2.0
    else:
        t11 = t1 + t2
        y0 = t10 + t11
        y4 = t10 - t11
    z1 = (t12 + t13) * _A1
    y2 = t13 + z1
    y6 = t13 - z1
    # odd part
    o10 = t4 + t5
    o11 = t5 + t6
    o12 = t6 + t7
    z5 = (o10 - o12) * _A5
    z2 = _A2 * o10 + z5
    z4 = _A4 * o12 + z5
    z3 = o11 * _A3
    z11 = t7 + z3
    z13 = t7 - z3
    y5 = z13 + z2
    y3 = z13 - z2
    y1 = z11 + z4
    y7 = z11 - z4
    return Spectrum(pack([y0, y1, y2, y3, y4, y5, y6, y7]), scaled=True, scale=arai_scale())
