"""Operation counting and the comparison table for the 8-point algorithms."""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass

import numpy as np

from sbpdct.fast8 import ScaledSpectrum8, fast8
from sbpdct.numerics import OpTally, counting_vector, pack
from sbpdct.reference import Spectrum
from sbpdct.rivals import AlgorithmId, arai8, loeffler8, naive8
from sbpdct.sbp import Scenario, forward_difference_signal, require_null_mean

CSV_HEADER = (
    "algorithm", "scenario", "scaled_mults", "full_mults", "additions",
    "source", "paper_value", "match",
)

SCALED_ALGORITHMS = (AlgorithmId.PROPOSED, AlgorithmId.ARAI)
SCENARIOS = tuple(Scenario)

# Published counts: (scaled mults or None, full mults, additions) per scenario i..iv
PUBLISHED = {
    "loeffler": [(None, 11, 29), (None, 11, 26), (None, 11, 36), (None, 11, 33)],
    "lee": [(None, 12, 29), (None, 11, 26), (None, 12, 36), (None, 11, 33)],
    "chen": [(None, 13, 26), (None, 12, 23), (None, 13, 33), (None, 12, 30)],
    "arai": [(5, 13, 28), (5, 12, 25), (5, 13, 35), (5, 12, 32)],
    "proposed": [(5, 11, 39), (5, 11, 25), (5, 11, 30), (5, 11, 19)],
}
CITED_ONLY = ("chen", "lee")
# published statement for the accumulated-input DC removal block alone
PUBLISHED_ACC_DC_REMOVAL = 10
PROPOSED_CORE_ADDITIONS = 19


def min_mults(N: int) -> int:
    """Lower bound on non-trivial multiplications for an exact N-point DCT, N = 2**r."""
    if N < 2 or N & (N - 1):
        raise ValueError(f"bound is stated for powers of two >= 2, got {N}")
    r = N.bit_length() - 1
    return 2 ** (r + 1) - r - 2


def scenario_input(x, scenario: Scenario) -> np.ndarray:
    """Turn a raw signal into the input a scenario expects."""
    x = np.asarray(x, dtype=float)
    if scenario.null_mean:
        x = x - x.mean()
    if scenario.accumulated:
        return np.cumsum(x)
    return x


def run_algorithm(alg: AlgorithmId, data, scenario: Scenario = Scenario.ARBITRARY,
                  scaled: bool = False) -> Spectrum:
    """Run one 8-point algorithm under a scenario's input convention.

    Baselines see accumulated input through the difference system first, and
    skip their DC path when the scenario guarantees a zero-mean signal.
    """
    if scaled and alg not in SCALED_ALGORITHMS:
        raise ValueError(f"{alg.value} has no scaled form")
    if alg is AlgorithmId.PROPOSED:
        out = fast8(data, scenario, scaled=scaled)
        if isinstance(out, ScaledSpectrum8):
            return Spectrum(pack([out.dc] + list(out.ac_scaled)), scaled=True, scale=out.full_scale())
        return out

    x = list(data)
    if scenario.accumulated:
        x = list(forward_difference_signal(x))
    if scenario.null_mean:
        require_null_mean(x, f"{scenario.value} scenario input")
    if alg is AlgorithmId.NAIVE:
        return naive8(x)
    if alg is AlgorithmId.LOEFFLER:
        return loeffler8(x, null_mean=scenario.null_mean)
    if alg is AlgorithmId.ARAI:
        out = arai8(x, null_mean=scenario.null_mean)
        if scaled:
            return out
        return Spectrum(pack([v * s for v, s in zip(out.values, out.scale)]))
    raise ValueError(f"unknown algorithm {alg!r}")


def measure_ops(alg: AlgorithmId, scenario: Scenario, scaled: bool = False, seed: int = 0) -> OpTally:
    """Tally one run on instrumented input. The count does not depend on ``seed``."""
    if scaled and alg not in SCALED_ALGORITHMS:
        raise ValueError(f"{alg.value} does not admit a scaled computation")
    raw = np.random.default_rng(seed).normal(size=8)
    tally = OpTally()
    run_algorithm(alg, counting_vector(scenario_input(raw, scenario), tally), scenario, scaled)
    return tally


@dataclass
class ComplexityRow:
    algorithm: str
    scenario: str
    scaled_mults: int
    full_mults: int
    additions: int
    source: str
    paper_value: str = ""
    match: str = "n/a"


def _fmt_counts(scaled_mults, full_mults, additions) -> str:
    mults = f"{full_mults}" if scaled_mults is None else f"{scaled_mults} ({full_mults})"
    return f"{mults} / {additions}"


def complexity_report() -> list[ComplexityRow]:
    rows = []
    for alg in (AlgorithmId.NAIVE, AlgorithmId.PROPOSED, AlgorithmId.LOEFFLER, AlgorithmId.ARAI):
        for i, sc in enumerate(SCENARIOS):
            full = measure_ops(alg, sc, scaled=False)
            if alg in SCALED_ALGORITHMS:
                part = measure_ops(alg, sc, scaled=True)
                scaled_mults = part.nontrivial_mults
            else:
                scaled_mults = full.nontrivial_mults
            row = ComplexityRow(alg.value, sc.roman, scaled_mults, full.nontrivial_mults,
                                full.additions, "measured")
            pub = PUBLISHED.get(alg.value)
            if pub is not None:
                p_scaled, p_full, p_add = pub[i]
                row.paper_value = _fmt_counts(p_scaled, p_full, p_add)
                ok = (p_full == row.full_mults and p_add == row.additions
                      and (p_scaled is None or p_scaled == row.scaled_mults))
                row.match = "yes" if ok else "no"
            rows.append(row)
    for name in CITED_ONLY:
        for i, sc in enumerate(SCENARIOS):
            p_scaled, p_full, p_add = PUBLISHED[name][i]
            rows.append(ComplexityRow(name, sc.roman, p_full, p_full, p_add, "cited",
                                      _fmt_counts(p_scaled, p_full, p_add), "n/a"))
    return rows


def report_notes(rows: list[ComplexityRow]) -> list[str]:
    """Bound line and explicit notes for every count that differs from the published table."""
    notes = [f"minimum multiplicative complexity mu(8) = {min_mults(8)}"]
    by_key = {(r.algorithm, r.scenario, r.source): r for r in rows}
    acc = by_key[("proposed", "iii", "measured")]
    block = acc.additions - PROPOSED_CORE_ADDITIONS
    notes.append(
        f"proposed (iii): measured total {acc.additions} additions vs published table 30; "
        f"accumulated-input DC removal block measured at {block} additions while the published "
        f"text states {PUBLISHED_ACC_DC_REMOVAL} (the table total implies 11)"
    )
    scaled_names = {a.value for a in SCALED_ALGORITHMS}
    for r in rows:
        if r.source != "measured" or r.match != "no":
            continue
        scaled = r.scaled_mults if r.algorithm in scaled_names else None
        measured = _fmt_counts(scaled, r.full_mults, r.additions)
        notes.append(f"{r.algorithm} ({r.scenario}): measured {measured} vs published {r.paper_value}")
    if any(r.algorithm == "arai" and r.match == "no" for r in rows):
        notes.append(
            "arai: the standard flow graph used here has 29 additions; under the 4/sqrt(N) "
            "normalisation the X[0] and X[4] descale factors are 1, so descaling costs 6 "
            "multiplications instead of 8"
        )
    return notes


def render_table(rows: list[ComplexityRow]) -> str:
    head = ("algorithm", "scenario", "scaled", "full", "adds", "source", "published", "match")
    body = [(r.algorithm, r.scenario, str(r.scaled_mults), str(r.full_mults), str(r.additions),
             r.source, r.paper_value or "-", r.match) for r in rows]
    widths = [max(len(c) for c in col) for col in zip(head, *body)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in [head, *body]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    lines.append("")
    lines.extend(f"note: {n}" for n in report_notes(rows))
    return "\n".join(lines) + "\n"


def render_csv(rows: list[ComplexityRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow(asdict(r))
    return buf.getvalue()
