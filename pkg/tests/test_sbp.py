import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import null_mean
from sbpdct.numerics import OpTally, counting_vector, plain_vector
from sbpdct.reference import KernelId, dct_forward, direct_transform, kernel_value
from sbpdct.sbp import (
    NotNullMeanError,
    Scenario,
    accumulate,
    dct_delta_kernel,
    forward_difference_signal,
    is_null_mean,
    remove_dc,
    remove_dc_accumulated,
    sbp_dct_general,
    sbp_diagonal,
    sbp_matrix,
    sbp_transform,
)

finite = st.floats(-1e3, 1e3, allow_nan=False)


def test_accumulate_examples():
    np.testing.assert_array_equal(accumulate([1, 2, 3, 4]), [1, 3, 6, 10])
    np.testing.assert_array_equal(accumulate([1, -1, 1, -1]), [1, 0, 1, 0])
    np.testing.assert_array_equal(accumulate([5]), [5])
    assert len(accumulate([])) == 0


def test_accumulate_cost():
    t = OpTally()
    accumulate(counting_vector(np.arange(8.0), t))
    assert t.additions == 7


@given(st.lists(finite, min_size=2, max_size=32))
def test_difference_inverts_accumulate(xs):
    np.testing.assert_allclose(forward_difference_signal(accumulate(xs)), xs, atol=1e-9)


def test_forward_difference_needs_two():
    with pytest.raises(ValueError):
        forward_difference_signal([1.0])


def test_remove_dc_examples():
    np.testing.assert_allclose(remove_dc([1, 2, 3, 4, 5, 6, 7, 8]),
                               [-3.5, -2.5, -1.5, -0.5, 0.5, 1.5, 2.5, 3.5])
    np.testing.assert_array_equal(remove_dc([4.0] * 8), np.zeros(8))
    np.testing.assert_allclose(remove_dc([1, 2, 3, 4, 5, 6, 7, 8], full=False),
                               [-3.5, -2.5, -1.5, -0.5, 0.5, 1.5, 2.5])


def test_remove_dc_cost():
    t = OpTally()
    remove_dc(counting_vector(np.arange(8.0), t), full=False)
    assert (t.additions, t.nontrivial_mults) == (14, 0)


def test_remove_dc_rejects_non_pow2():
    with pytest.raises(ValueError):
        remove_dc(np.ones(6))


@given(st.lists(finite, min_size=8, max_size=8))
def test_remove_dc_accumulated_matches_composition(xs):
    want = accumulate(remove_dc(xs))
    got = remove_dc_accumulated(accumulate(xs))
    np.testing.assert_allclose(got[:7], want[:7], atol=1e-9)
    assert got[7] == 0.0


def test_remove_dc_accumulated_cost():
    t = OpTally()
    remove_dc_accumulated(counting_vector(np.arange(1.0, 9.0), t))
    assert (t.additions, t.nontrivial_mults) == (11, 0)


def test_is_null_mean():
    assert is_null_mean([1, -1, 2, -2])
    assert not is_null_mean([1, 1, 1, 1])
    assert is_null_mean(np.zeros(8))


def test_sbp_transform_example():
    x = np.array([1, -1, 1, -1, 1, -1, 1, -1], dtype=float)
    got = sbp_transform(x, KernelId.DCT2).values
    np.testing.assert_allclose(got, direct_transform(x, KernelId.DCT2).values, atol=1e-12)
    assert got[0] == pytest.approx(0.0, abs=1e-12)


def test_sbp_transform_rejects_non_null_mean():
    with pytest.raises(NotNullMeanError):
        sbp_transform([1.0, 2.0, 3.0, 4.0], KernelId.DHT)


@pytest.mark.parametrize("kid", list(KernelId))
@pytest.mark.parametrize("N", [4, 8, 16])
def test_sbp_transform_matches_direct(rng, kid, N):
    for _ in range(20):
        x = null_mean(rng, N)
        want = direct_transform(x, kid).values
        got = sbp_transform(x, kid).values
        assert np.max(np.abs(got - want)) <= 1e-9 * np.max(np.abs(want))


def test_dct_delta_kernel_closed_form():
    for N in (4, 8, 16):
        for n in range(N - 1):
            for k in range(1, N):
                direct = kernel_value(KernelId.DCT2, N, n + 1, k) - kernel_value(KernelId.DCT2, N, n, k)
                assert dct_delta_kernel(N, n, k) == pytest.approx(direct, abs=1e-13)


def test_dct_delta_kernel_range():
    with pytest.raises(IndexError):
        dct_delta_kernel(8, 7, 1)
    with pytest.raises(IndexError):
        dct_delta_kernel(8, 0, 0)


def test_sbp_diagonal_values():
    d = sbp_diagonal(8)
    assert d[0] == 0.0
    assert d[4] == pytest.approx(4 / math.sqrt(8) * 2 * math.sin(math.pi / 4), abs=1e-15)
    assert d[4] == pytest.approx(2.0, abs=1e-14)


@pytest.mark.parametrize("N", [4, 8, 16, 32])
def test_sbp_dct_general(rng, N):
    x = null_mean(rng, N)
    want = dct_forward(x).values[1:]
    got = sbp_dct_general(x).values[1:]
    assert np.max(np.abs(got - want)) <= 1e-10 * np.max(np.abs(want))
    sc = sbp_dct_general(x, scaled=True)
    assert sc.scaled
    np.testing.assert_allclose(sc.descaled(), sbp_dct_general(x).values, atol=1e-12)


@pytest.mark.parametrize("N", [4, 8, 16])
def test_sbp_matrix_applies_to_prefix_sums(rng, N):
    x = null_mean(rng, N)
    z = np.cumsum(x)[:-1]
    np.testing.assert_allclose(sbp_matrix(N) @ z, dct_forward(x).values[1:], atol=1e-10)


@pytest.mark.parametrize("text, sc", [
    ("i", Scenario.ARBITRARY), ("null-mean", Scenario.NULL_MEAN), ("III", Scenario.ACCUMULATED),
    ("null_mean_accumulated", Scenario.NULL_MEAN_ACCUMULATED), ("iv", Scenario.NULL_MEAN_ACCUMULATED),
])
def test_scenario_parse(text, sc):
    assert Scenario.parse(text) is sc


def test_scenario_parse_rejects():
    with pytest.raises(ValueError):
        Scenario.parse("v")


def test_scenario_flags():
    assert [s.null_mean for s in Scenario] == [False, True, False, True]
    assert [s.accumulated for s in Scenario] == [False, False, True, True]
    assert [s.roman for s in Scenario] == ["i", "ii", "iii", "iv"]


def test_plain_vector_of_counted_accumulate():
    t = OpTally()
    np.testing.assert_array_equal(plain_vector(accumulate(counting_vector([1.0, 2.0], t))), [1.0, 3.0])
