"""Shared numeric pieces: trig constants, matrix helpers and an op-counting scalar.

The counting scalar is how every operation count in this package is measured.
Straight-line algorithms are written against plain Python arithmetic, so they
run unchanged on floats or on :class:`CountingScalar` values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

TRIVIAL_TOL = 1e-12


@dataclass(frozen=True)
class TrigConstants:
    """``c[k] = cos(k*pi/16)`` and ``s[k] = sin(k*pi/16)`` for k = 0..7.

    Slot 0 is kept (c[0] = 1, s[0] = 0) so that indices read like the math.
    """

    c: tuple[float, ...]
    s: tuple[float, ...]


def trig_constants() -> TrigConstants:
    c = tuple(math.cos(k * math.pi / 16) for k in range(8))
    s = tuple(math.sin(k * math.pi / 16) for k in range(8))
    return TrigConstants(c=c, s=s)


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-D matrix, got shape {a.shape}")
    return a


def cyclic_forward_diff(m) -> np.ndarray:
    """Row-wise cyclic forward difference: ``out[i, j] = m[i, (j+1) % N] - m[i, j]``."""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"cyclic forward difference needs a square matrix, got {a.shape}")
    return np.roll(a, -1, axis=1) - a


def is_trivial_multiplicand(a: float) -> bool:
    """True for 0, +-1 and +-2**k: factors realisable by sign change or shift."""
    mag = abs(float(a))
    if mag <= TRIVIAL_TOL:
        return True
    k = round(math.log2(mag))
    return abs(mag / 2.0**k - 1.0) <= TRIVIAL_TOL


@dataclass
class OpTally:
    """Operation counts for one measurement session. Subtractions count as additions."""

    nontrivial_mults: int = 0
    trivial_mults: int = 0
    additions: int = 0

    def snapshot(self) -> "OpTally":
        return OpTally(self.nontrivial_mults, self.trivial_mults, self.additions)

    def __sub__(self, other: "OpTally") -> "OpTally":
        return OpTally(
            self.nontrivial_mults - other.nontrivial_mults,
            self.trivial_mults - other.trivial_mults,
            self.additions - other.additions,
        )


class CountingScalar:
    """A float that records its arithmetic into a shared :class:`OpTally`.

    Values are computed with ordinary float arithmetic, so results are
    bit-identical to an uninstrumented run. Only operations involving runtime
    data are counted; folding two plain constants never reaches this class.
    Negation is a sign change and is free. Adding a literal zero is free.
    """

    __slots__ = ("value", "tally")

    def __init__(self, value: float, tally: OpTally):
        self.value = float(value)
        self.tally = tally

    def __repr__(self) -> str:
        return f"CountingScalar({self.value!r})"

    def __float__(self) -> float:
        return self.value

    def _wrap(self, value: float) -> "CountingScalar":
        return CountingScalar(value, self.tally)

    def _operand(self, other) -> float | None:
        """Value of ``other``, or None when it is a literal zero (no work needed)."""
        if isinstance(other, CountingScalar):
            return other.value
        ov = float(other)
        return None if ov == 0.0 else ov

    def __add__(self, other):
        ov = self._operand(other)
        if ov is None:
            return self
        self.tally.additions += 1
        return self._wrap(self.value + ov)

    def __radd__(self, other):
        ov = self._operand(other)
        if ov is None:
            return self
        self.tally.additions += 1
        return self._wrap(ov + self.value)

    def __sub__(self, other):
        ov = self._operand(other)
        if ov is None:
            return self
        self.tally.additions += 1
        return self._wrap(self.value - ov)

    def __rsub__(self, other):
        ov = self._operand(other)
        if ov is None:
            return -self
        self.tally.additions += 1
        return self._wrap(ov - self.value)

    def __neg__(self):
        return self._wrap(-self.value)

    def __pos__(self):
        return self

    def _mul(self, factor: float, data_by_data: bool) -> None:
        if data_by_data or not is_trivial_multiplicand(factor):
            self.tally.nontrivial_mults += 1
        else:
            self.tally.trivial_mults += 1

    def __mul__(self, other):
        if isinstance(other, CountingScalar):
            self._mul(other.value, True)
            return self._wrap(self.value * other.value)
        other = float(other)
        self._mul(other, False)
        return self._wrap(self.value * other)

    def __rmul__(self, other):
        other = float(other)
        self._mul(other, False)
        return self._wrap(other * self.value)

    def __truediv__(self, other):
        if isinstance(other, CountingScalar):
            self._mul(other.value, True)
            return self._wrap(self.value / other.value)
        other = float(other)
        self._mul(1.0 / other, False)
        return self._wrap(self.value / other)


def counting_vector(values: Sequence[float], tally: OpTally) -> list[CountingScalar]:
    return [CountingScalar(v, tally) for v in values]


def plain(v) -> float:
    """Strip instrumentation; used for precondition checks that must not be tallied."""
    return v.value if isinstance(v, CountingScalar) else float(v)


def plain_vector(values) -> np.ndarray:
    return np.array([plain(v) for v in values], dtype=float)


def pack(values) -> np.ndarray:
    """Float array for plain inputs, object array when instrumented values are present."""
    values = list(values)
    if any(isinstance(v, CountingScalar) for v in values):
        out = np.empty(len(values), dtype=object)
        out[:] = values
        return out
    return np.array(values, dtype=float)


def mat_vec(m, v) -> np.ndarray:
    """Matrix-vector product with a fixed left-to-right summation order.

    Works for float vectors and for vectors of :class:`CountingScalar`; each
    row costs ``cols`` multiplications and ``cols - 1`` additions.
    """
    a = as_matrix(m)
    v = list(v)
    if a.shape[1] != len(v):
        raise ValueError(f"dimension mismatch: matrix has {a.shape[1]} columns, vector has {len(v)}")
    rows = []
    for row in a:
        acc = float(row[0]) * v[0]
        for coef, x in zip(row[1:], v[1:]):
            acc = acc + float(coef) * x
        rows.append(acc)
    return pack(rows)
