"""Seeded self-check suite behind ``sbpdct verify``.

Every check compares a fast path against an independent oracle or a fixed
count. The report contains no timings, so equal seeds give identical text.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from sbpdct.fast8 import fast8, fast8_core, materialize_ctilde
from sbpdct.image2d import (
    JPEG_LUMA, dct2_block, near_tie, quantize, quantize_absorbed, transform_image,
)
from sbpdct.metrics import measure_ops, min_mults, scenario_input
from sbpdct.numerics import OpTally, counting_vector, cyclic_forward_diff
from sbpdct.reference import KernelId, dct_forward, dct_matrix, direct_transform, product_form_ctilde
from sbpdct.rivals import AlgorithmId, arai8, loeffler8
from sbpdct.sbp import Scenario, sbp_dct_general, sbp_diagonal, sbp_transform


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def _g(v: float) -> str:
    return f"{v:.12g}"


def rel_err(got, want) -> float:
    got = np.asarray(got, dtype=complex if np.iscomplexobj(want) else float)
    want = np.asarray(want)
    denom = max(float(np.max(np.abs(want))), 1e-300)
    return float(np.max(np.abs(got - want))) / denom


def check_factorization() -> CheckResult:
    err = float(np.max(np.abs(materialize_ctilde() - product_form_ctilde())))
    return CheckResult("factorization-identity", err <= 1e-12, f"max_abs_err={_g(err)} tol=1e-12")


def check_difference_matrix() -> CheckResult:
    cos_array = dct_matrix(8) / np.sqrt(2.0)
    derived = -np.sqrt(2.0) * cyclic_forward_diff(cos_array)[1:, :7]
    err = float(np.max(np.abs(derived - product_form_ctilde())))
    return CheckResult("difference-matrix", err <= 1e-12, f"max_abs_err={_g(err)} tol=1e-12")


def check_scenarios(rng: np.random.Generator, trials: int) -> list[CheckResult]:
    out = []
    for sc in Scenario:
        worst = 0.0
        for _ in range(trials):
            raw = rng.normal(size=8)
            data = scenario_input(raw, sc)
            want = dct_forward(raw - raw.mean() if sc.null_mean else raw).values
            worst = max(worst, rel_err(fast8(data, sc).values, want))
        out.append(CheckResult(f"oracle-equivalence[{sc.value}]", worst <= 1e-10,
                               f"trials={trials} max_rel_err={_g(worst)} tol=1e-10"))
    return out


def check_rivals(rng: np.random.Generator, trials: int) -> list[CheckResult]:
    worst_l = worst_a = 0.0
    for _ in range(trials):
        x = rng.normal(size=8)
        want = dct_forward(x).values
        worst_l = max(worst_l, rel_err(loeffler8(x).values, want))
        worst_a = max(worst_a, rel_err(arai8(x).descaled(), want))
    return [
        CheckResult("rival-oracle[loeffler]", worst_l <= 1e-10, f"max_rel_err={_g(worst_l)} tol=1e-10"),
        CheckResult("rival-oracle[arai]", worst_a <= 1e-10, f"max_rel_err={_g(worst_a)} tol=1e-10"),
    ]


def check_sbp_kernels(rng: np.random.Generator, trials: int) -> list[CheckResult]:
    out = []
    for kid in KernelId:
        worst = 0.0
        for N in (4, 8, 16):
            for _ in range(trials):
                x = rng.normal(size=N)
                x -= x.mean()
                worst = max(worst, rel_err(sbp_transform(x, kid).values, direct_transform(x, kid).values))
        out.append(CheckResult(f"sbp-kernel[{kid.value}]", worst <= 1e-9,
                               f"N=4,8,16 trials={trials} max_rel_err={_g(worst)} tol=1e-9"))
    return out


def check_general_n(rng: np.random.Generator, trials: int) -> list[CheckResult]:
    out = []
    for N in (4, 8, 16, 32):
        worst = 0.0
        for _ in range(trials):
            x = rng.normal(size=N)
            x -= x.mean()
            worst = max(worst, rel_err(sbp_dct_general(x).values[1:], dct_forward(x).values[1:]))
        k = np.arange(1, N)
        direct = (4.0 / np.sqrt(N)) * 2.0 * np.sin(k * np.pi / (2 * N))
        diag_err = float(np.max(np.abs(sbp_diagonal(N)[1:] - direct)))
        ok = worst <= 1e-10 and diag_err <= 1e-14
        out.append(CheckResult(f"general-n[{N}]", ok,
                               f"max_rel_err={_g(worst)} diag_err={_g(diag_err)}"))
    return out


def check_counts() -> list[CheckResult]:
    out = []
    tally = OpTally()
    fast8_core(counting_vector(np.arange(1.0, 8.0), tally))
    out.append(CheckResult("count[core]", (tally.nontrivial_mults, tally.additions) == (5, 19),
                           f"mults={tally.nontrivial_mults} adds={tally.additions} expected 5/19"))
    expected = {Scenario.ARBITRARY: (39, 39), Scenario.NULL_MEAN: (25, 25),
                Scenario.ACCUMULATED: (29, 31), Scenario.NULL_MEAN_ACCUMULATED: (19, 19)}
    for sc, (lo, hi) in expected.items():
        t = measure_ops(AlgorithmId.PROPOSED, sc, scaled=False)
        ok = lo <= t.additions <= hi and t.nontrivial_mults == min_mults(8)
        out.append(CheckResult(f"count[proposed,{sc.roman}]", ok,
                               f"mults={t.nontrivial_mults} adds={t.additions} expected {min_mults(8)}/"
                               + (f"{lo}" if lo == hi else f"{lo}..{hi}")))
    t = measure_ops(AlgorithmId.LOEFFLER, Scenario.ARBITRARY)
    out.append(CheckResult("count[loeffler]", (t.nontrivial_mults, t.additions) == (11, 29),
                           f"mults={t.nontrivial_mults} adds={t.additions} expected 11/29"))
    t = measure_ops(AlgorithmId.ARAI, Scenario.ARBITRARY, scaled=True)
    out.append(CheckResult("count[arai]", t.nontrivial_mults == 5 and 28 <= t.additions <= 29,
                           f"mults={t.nontrivial_mults} adds={t.additions} expected 5/28..29 (published 28)"))
    return out


def check_image(rng: np.random.Generator) -> list[CheckResult]:
    img = rng.integers(0, 256, size=(64, 64)).astype(np.uint8)
    rt = transform_image(img, AlgorithmId.PROPOSED)
    agree = total = 0
    shifted = img.astype(float) - 128.0
    for by in range(8):
        for bx in range(8):
            blk = shifted[by * 8:by * 8 + 8, bx * 8:bx * 8 + 8]
            c, s = dct2_block(blk, AlgorithmId.PROPOSED, scaled=True)
            exact, _ = dct2_block(blk, AlgorithmId.NAIVE)
            keep = ~near_tie(exact / JPEG_LUMA)
            same = quantize_absorbed(c, s, JPEG_LUMA) == quantize(exact, JPEG_LUMA)
            agree += int(np.sum(same & keep))
            total += int(np.sum(keep))
    frac = agree / total
    return [
        CheckResult("image-roundtrip", rt.psnr >= 100.0, f"psnr_db={_g(rt.psnr)} min=100"),
        CheckResult("image-absorbed-quantization", frac >= 0.999,
                    f"agreement={_g(frac)} compared={total} min=0.999"),
    ]


def run_verification(seed: int = 42, trials: int = 1000) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    small = max(1, trials // 5)
    steps: list[Callable[[], list[CheckResult] | CheckResult]] = [
        check_factorization,
        check_difference_matrix,
        lambda: check_scenarios(rng, trials),
        lambda: check_rivals(rng, trials),
        lambda: check_sbp_kernels(rng, small),
        lambda: check_general_n(rng, small),
        check_counts,
        lambda: check_image(rng),
    ]
    results: list[CheckResult] = []
    for step in steps:
        r = step()
        results.extend(r if isinstance(r, list) else [r])
    return results
