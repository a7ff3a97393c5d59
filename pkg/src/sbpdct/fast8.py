"""Scaled 8-point DCT built on summation by parts.

The seven AC coefficients of a null-mean signal are ``C~ z`` where ``z`` holds
the first seven prefix sums. ``C~`` factors as

    S . P . M1 . R1 . R2 . R3 . M3 . M4 . A

with ``S`` diagonal (absorbable scaling) and everything to its right costing
5 non-trivial multiplications and 19 additions. :func:`fast8_core` is that
chain written out as straight-line code; :func:`stage_matrices` holds the same
stages as dense arrays for verification only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from sbpdct.numerics import pack, plain_vector, trig_constants
from sbpdct.reference import Spectrum
from sbpdct.sbp import (
    Scenario,
    accumulate,
    remove_dc_accumulated,
    require_null_mean,
    sum_and_center,
)

_T = trig_constants()
_S2, _S4, _S6 = _T.s[2], _T.s[4], _T.s[6]
# rotation multiplicands: s6 - s2 = sqrt2*s2 and s2 + s6 = sqrt2*c2
_ROT_A = _S6 - _S2
_ROT_B = _S2 + _S6

# core output slot -> coefficient index; odd coefficients come out first
OUTPUT_ORDER = (1, 3, 5, 7, 2, 4, 6)


@dataclass(frozen=True)
class StageSet:
    A: np.ndarray
    M4: np.ndarray
    M3: np.ndarray
    R3: np.ndarray
    R2: np.ndarray
    R1: np.ndarray
    M1: np.ndarray
    P: np.ndarray
    S: np.ndarray

    def chain(self) -> list[np.ndarray]:
        """Left-to-right factor list whose product is ``C~``."""
        return [self.S, self.P, self.M1, self.R1, self.R2, self.R3, self.M3, self.M4, self.A]


def scale_vector() -> np.ndarray:
    """Diagonal of ``S`` in coefficient order X[1..7]. The X[4] slot is exactly 2."""
    s = _T.s
    v = np.array([2.0 * math.sqrt(2.0) * s[k] for k in range(1, 8)])
    v[3] = 2.0
    return v


def stage_matrices() -> StageSet:
    s2, s4 = _S2, _S4
    A = np.array([
        [1, 0, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, 0, 1, 0],
        [0, 0, 1, 0, 1, 0, 0],
        [0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, -1, 0, 0],
        [0, 1, 0, 0, 0, -1, 0],
        [1, 0, 0, 0, 0, 0, -1],
    ], dtype=float)
    M4 = np.eye(7)
    M4[4, 6] = 1.0
    M4[6, 4] = 1.0
    M4[6, 6] = -1.0
    M3 = np.zeros((7, 7))
    M3[0, 0] = 1.0
    M3[1, 2] = 1.0
    M3[2, 1] = s4
    M3[3, 3] = 1.0
    M3[4, 4] = s4
    M3[5, 5] = 1.0
    M3[6, 6] = 1.0
    R3 = np.array([
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 0, 0],
        [0, 0, 1, -1, 0, 0, 0],
        [0, 0, 0, 0, 1, 1, 0],
        [0, 0, 0, 0, 1, -1, 0],
        [0, 0, 0, 0, 0, 0, -1],
    ], dtype=float)
    R2 = np.diag([1.0, 1.0, s2, 1.0, 1.0, 1.0, 1.0, 1.0])
    R1 = np.zeros((7, 8))
    R1[0, 1] = _ROT_A
    R1[0, 2] = 1.0
    R1[1, 0] = _ROT_B
    R1[1, 2] = -1.0
    for i in range(2, 7):
        R1[i, i + 1] = 1.0
    M1 = np.array([
        [1, 0, 1, 0, 0, 0, 0],
        [0, 1, 0, 1, 0, 0, 0],
        [0, 1, 0, -1, 0, 0, 0],
        [1, 0, -1, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 1, 0],
    ], dtype=float)
    # gather slot i of the core output into coefficient OUTPUT_ORDER[i]
    P = np.zeros((7, 7))
    for slot, k in enumerate(OUTPUT_ORDER):
        P[k - 1, slot] = 1.0
    S = np.diag(scale_vector())
    return StageSet(A=A, M4=M4, M3=M3, R3=R3, R2=R2, R1=R1, M1=M1, P=P, S=S)


def materialize_ctilde() -> np.ndarray:
    out = np.eye(7)
    for m in stage_matrices().chain():
        out = out @ m
    return out


def fast8_core(z) -> np.ndarray:
    """Scaled AC coefficients X[1..7] / S from the first seven prefix sums.

    5 non-trivial multiplications (two by s4, one by s2, two rotation
    constants) and 19 additions; sign flips are free.
    """
    z = list(z)
    if len(z) != 7:
        raise ValueError(f"fast8_core takes the 7 leading accumulated samples, got {len(z)}")
    z0, z1, z2, z3, z4, z5, z6 = z
    # A: butterflies around the centre sample
    a0 = z0 + z6
    a1 = z1 + z5
    a2 = z2 + z4
    a4 = z2 - z4
    a5 = z1 - z5
    a6 = z0 - z6
    # M4
    b4 = a4 + a6
    b6 = a4 - a6
    # M3 (rows 1 and 2 swap)
    c1 = a2
    c2 = _S4 * a1
    c4 = _S4 * b4
    # R3, widening to 8 lines
    d2 = a0 + c1
    d3 = c2 + z3
    d4 = c2 - z3
    d5 = c4 + a5
    d6 = c4 - a5
    d7 = -b6
    # R2
    e2 = _S2 * d2
    # R1, back to 7 lines
    f0 = _ROT_A * c1 + e2
    f1 = _ROT_B * a0 - e2
    # M1
    g0 = f0 + d3
    g1 = f1 + d4
    g2 = f1 - d4
    g3 = f0 - d3
    # P: slots (g0, g1, g2, g3, d5, d7, d6) hold X1, X3, X5, X7, X2, X4, X6
    slots = (g0, g1, g2, g3, d5, d7, d6)
    out = [None] * 7
    for slot, k in enumerate(OUTPUT_ORDER):
        out[k - 1] = slots[slot]
    return pack(out)


@dataclass
class ScaledSpectrum8:
    """DC coefficient plus the seven AC coefficients before the ``S`` stage."""

    dc: object
    ac_scaled: np.ndarray
    scale: np.ndarray

    def exact(self) -> np.ndarray:
        return pack([self.dc] + [a * s for a, s in zip(self.ac_scaled, self.scale)])

    def full_scale(self) -> np.ndarray:
        """Eight-entry scale vector with 1 in the DC slot."""
        return np.concatenate([[1.0], self.scale])


def _prepare(data, scenario: Scenario):
    """Scenario pre-processing: returns ``(dc, z[0..6])``."""
    if scenario is Scenario.ARBITRARY:
        total, centred = sum_and_center(data)
        return total, list(accumulate(centred))
    if scenario is Scenario.NULL_MEAN:
        require_null_mean(data, "null-mean scenario input")
        return 0.0, list(accumulate(data[:7]))
    if scenario is Scenario.ACCUMULATED:
        return data[7], list(remove_dc_accumulated(data))[:7]
    if scenario is Scenario.NULL_MEAN_ACCUMULATED:
        require_null_mean(_raw_from_accumulated(data), "null-mean-accumulated scenario input")
        return 0.0, data[:7]
    raise ValueError(f"unknown scenario {scenario!r}")


def _raw_from_accumulated(u) -> np.ndarray:
    # precondition checks only; uses raw values so nothing reaches a tally
    return np.diff(plain_vector(u), prepend=0.0)


def fast8(data, scenario: Scenario = Scenario.ARBITRARY, scaled: bool = False):
    """8-point DCT via the SBP pipeline for the given input convention.

    ``data`` is the raw signal for the first two scenarios and its inclusive
    prefix sums for the accumulated ones. Returns a :class:`ScaledSpectrum8`
    when ``scaled`` is set, otherwise an exact :class:`Spectrum`.
    """
    data = list(data)
    if len(data) != 8:
        raise ValueError(f"fast8 needs exactly 8 samples, got {len(data)}")
    dc, z = _prepare(data, scenario)
    result = ScaledSpectrum8(dc=dc, ac_scaled=fast8_core(z), scale=scale_vector())
    if scaled:
        return result
    return Spectrum(result.exact())
