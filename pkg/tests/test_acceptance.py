"""Acceptance run: one check per exit criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import math
import time
from functools import lru_cache

import numpy as np
import pytest

import phi_checks
from glfrac import (
    FodeModel,
    IdentificationSpec,
    NoiseSpec,
    PhiContext,
    SampledSignal,
    add,
    crossover_check,
    differintegrate,
    find_mu_max,
    identify,
    phi,
    simulate,
    uniform_noise,
    unit_step,
)
from glfrac.cli import main as cli_main
from glfrac.experiment import noise_table

H = 1e-3
CTX = PhiContext(H)
TERMS = [(0.8, 2.23), (0.5, 0.88), (1.0, 0.0)]
TRUTH = [0.8, 0.5, 1.0]
ORDERS = [2.23, 0.88, 0.0]
SEEDS = list(range(1, 21))
NOISE = 0.05


@lru_cache(maxsize=None)
def bench_data():
    r = unit_step(10.0, H)
    return r, simulate(FodeModel(TERMS), r)


@lru_cache(maxsize=None)
def noisy_runs():
    """Worst and per-parameter errors (percent) per seed for both schemes."""
    r, c = bench_data()
    out = {"original": [], "transformed": []}
    for seed in SEEDS:
        y = add(c, uniform_noise(NoiseSpec(NOISE, seed, len(c)), H))
        out["original"].append(identify(r, y, IdentificationSpec(ORDERS, "original", [0, 1, 2]), TRUTH))
        out["transformed"].append(identify(r, y, IdentificationSpec(ORDERS, "transformed", [3, 4, 5]), TRUTH))
    return out


def c01_crossover():
    t = time.perf_counter()
    dev = crossover_check(10_000, CTX)
    dt = time.perf_counter() - t
    return dev <= 1e-9 and dt < 1.0, f"max|Phi_n(-1) - h| = {dev:.2e}, {dt:.3f} s"


def c02_degree_one():
    ex = find_mu_max(1, CTX)
    inv_g = 1 / CTX.gamma
    ok = abs(ex.mu_max - inv_g) <= 1e-8 and round(ex.mu_max, 7) == 0.1447648
    ok = ok and abs(ex.phi_at_max - 0.0532) <= 2e-4
    return ok, f"mu = {ex.mu_max:.10f} (1/gamma = {inv_g:.10f}), peak = {ex.phi_at_max:.6f}"


def c03_degree_two():
    g = CTX.gamma
    root = (-(g - 2) + math.sqrt((g - 2) ** 2 + 4 * g)) / (2 * g)
    mu = find_mu_max(2, CTX).mu_max
    ok = abs(mu - root) <= 1e-5 and abs(mu - 0.165297) <= 1e-5 and mu > 1 / g
    return ok, f"mu = {mu:.8f}, quadratic root = {root:.8f}"


def c04_large_n():
    ex = find_mu_max(1000, CTX)
    ok = abs(ex.phi_at_max - 2.80) <= 0.05 and abs(ex.mu_max - 10.5) <= 0.5
    ref = find_mu_max(10_000, CTX)
    return ok, (
        f"n=1000: peak {ex.phi_at_max:.6f} at mu = {ex.mu_max:.4f}; "
        f"(n=10000: peak {ref.phi_at_max:.4f} at mu = {ref.mu_max:.4f})"
    )


def c05_plateau():
    a, b = phi(6000, -4.0, H), phi(6100, -4.0, H)
    return abs(a - 0.0360) <= 5e-4 and abs(b - 0.0379) <= 5e-4, f"Phi_6000 = {a:.5f}, Phi_6100 = {b:.5f}"


def c06_analytic():
    exact = 2 / math.sqrt(math.pi)
    errs = {}
    for h in (0.002, 0.001):
        n = round(1 / h)
        f = SampledSignal(h, np.arange(n + 1) * h)
        errs[h] = abs(differintegrate(f, 0.5, n) - exact)
    ratio = errs[0.002] / errs[0.001]
    ok = errs[0.001] <= 3e-3 and abs(ratio - 2.0) <= 0.5
    return ok, f"error {errs[0.001]:.2e} at h=1e-3, ratio {ratio:.3f}"


def c07_monotonicity():
    failed = []
    for check in phi_checks.ALL_CHECKS:
        try:
            check()
        except AssertionError:
            failed.append(check.__name__)
    return not failed, f"{len(phi_checks.ALL_CHECKS) - len(failed)}/{len(phi_checks.ALL_CHECKS)} checks" + (
        f", failed: {failed}" if failed else ""
    )


def c08_table_structure():
    orders = [1.5, -0.3, -0.6, -0.9, -1.2, -1.5]
    tab = np.abs(noise_table(0.01, SEEDS, orders, 10.0, H))
    ratio = np.median(tab[:, 0]) / np.median(tab[:, 1])
    ok = ratio >= 1e3 and tab[:, 1:].max() <= 0.01 and tab[:, 0].min() >= 10
    return ok, f"median ratio {ratio:.3g}, max |neg-order| {tab[:, 1:].max():.2e}, min |D^1.5 e| {tab[:, 0].min():.1f}"


def c09_clean_identification():
    r, c = bench_data()
    res = identify(r, c, IdentificationSpec(ORDERS, "original", [0, 1, 2]), TRUTH)
    return bool(np.all(res.relative_errors_percent <= 2.0)), f"errors % {np.round(res.relative_errors_percent, 8).tolist()}"


def c10_original_breaks():
    worst = [res.worst_error_percent for res in noisy_runs()["original"]]
    med = float(np.median(worst))
    return med >= 10.0, f"median worst error {med:.2f}%"


def c11_transformed_robust():
    r, c = bench_data()
    clean = identify(r, c, IdentificationSpec(ORDERS, "transformed", [3, 4, 5]), TRUTH).worst_error_percent
    runs = noisy_runs()["transformed"]
    good = sum(bool(np.all(res.relative_errors_percent <= 2.0)) for res in runs)
    med = float(np.median([res.worst_error_percent for res in runs]))
    ok_count = good >= 18
    ok_ratio = med <= 10 * clean
    return ok_count and ok_ratio, (
        f"{good}/20 seeds within 2% [{'ok' if ok_count else 'FAIL'}]; "
        f"median worst {med:.4f}% vs 10x clean {10 * clean:.2e}% [{'ok' if ok_ratio else 'FAIL'}]"
    )


def c12_paired_ordering():
    runs = noisy_runs()
    wins = sum(
        t.worst_error_percent < o.worst_error_percent for o, t in zip(runs["original"], runs["transformed"])
    )
    return wins >= 19, f"transformed better in {wins}/20 seeds"


def c13_determinism(tmp_dir):
    cfg = tmp_dir / "experiment.json"
    cfg.write_text(json.dumps({
        "model": {"terms": [{"coeff": a, "order": o} for a, o in TERMS]},
        "duration": 10.0, "dt": H, "memory": 10.0, "t0": 10.0,
        "noise_e_max": NOISE, "seeds": SEEDS, "scheme": "both",
    }))
    outs = []
    for i in range(2):
        path = tmp_dir / f"report{i}.json"
        assert cli_main(["experiment", "--config", str(cfg), "-o", str(path)]) == 0
        outs.append(path.read_bytes())
    return outs[0] == outs[1], f"{len(outs[0])} bytes, identical={outs[0] == outs[1]}"


CRITERIA = [
    ("1 crossover identity", c01_crossover),
    ("2 degree-1 extremum", c02_degree_one),
    ("3 degree-2 extremum", c03_degree_two),
    ("4 large-n extremum (n=1000)", c04_large_n),
    ("5 weight plateau", c05_plateau),
    ("6 GL vs analytic half-derivative", c06_analytic),
    ("7 monotonicity suite", c07_monotonicity),
    ("8 noise table magnitude structure", c08_table_structure),
    ("9 clean identification", c09_clean_identification),
    ("10 original scheme breaks under noise", c10_original_breaks),
    ("11 transformed scheme robust to noise", c11_transformed_robust),
    ("12 paired robustness ordering", c12_paired_ordering),
    ("13 experiment report determinism", c13_determinism),
]


@pytest.mark.parametrize("name,check", CRITERIA, ids=[n.split()[0] for n, _ in CRITERIA])
def test_criterion(name, check, tmp_path, capsys):
    ok, detail = check(tmp_path) if check is c13_determinism else check()
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] {name}: {detail}", end="")
    assert ok, detail


if __name__ == "__main__":
    import pathlib
    import tempfile

    with tempfile.TemporaryDirectory() as d:
        for name, check in CRITERIA:
            ok, detail = check(pathlib.Path(d)) if check is c13_determinism else check()
            print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
