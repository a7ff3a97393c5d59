"""Summation-by-parts discrete transforms and a scaled 8-point DCT with 11 multiplications."""

from sbpdct.numerics import CountingScalar, OpTally, trig_constants
from sbpdct.reference import KernelId, Spectrum, dct_forward, dct_inverse, dct_matrix
from sbpdct.sbp import Scenario, accumulate, sbp_dct_general, sbp_transform
from sbpdct.fast8 import ScaledSpectrum8, fast8, fast8_core, materialize_ctilde, scale_vector
from sbpdct.rivals import AlgorithmId, arai8, loeffler8, naive8

__all__ = [
    "AlgorithmId",
    "CountingScalar",
    "KernelId",
    "OpTally",
    "Scenario",
    "ScaledSpectrum8",
    "Spectrum",
    "accumulate",
    "arai8",
    "dct_forward",
    "dct_inverse",
    "dct_matrix",
    "fast8",
    "fast8_core",
    "loeffler8",
    "materialize_ctilde",
    "naive8",
    "sbp_dct_general",
    "sbp_transform",
    "scale_vector",
    "trig_constants",
]

__version__ = "0.1.0"
