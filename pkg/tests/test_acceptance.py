"""Acceptance suite: every shipped guarantee at its stated tolerance.

Each test prints one PASS/FAIL line (visible under ``pytest -s`` or in the
captured output section); the assertions carry the same conditions.
"""

import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import M1_ROWS, M2_ROWS, multiset_distance
from monospec import (
    FamilyId,
    LiftWitness,
    check_liftable,
    dominance_of,
    eigenpair_3x3,
    family_matrix,
    lift,
    realise_pair,
    reduce,
    run_experiment,
    spectrum_of_dominance,
    spectrum_of_stochastic,
    theta_member,
    validate_monotone,
    xi3_boundary,
    xi3_pair_member,
)
from monospec.realise import FAMILY_RANGES
from monospec.regions import K_JUNCTION
from monospec.sampler import SampleConfig, sample_monotone
from monospec.spectra import spectrum3_batch

from test_dominance import grid_liftable
from test_realise import curve_residual


def report(num: int, ok: bool, elapsed: float, budget: float, detail: str = ""):
    status = "PASS" if ok and elapsed < budget else "FAIL"
    line = f"ACCEPTANCE {num}: {status} ({elapsed:.2f}s / budget {budget:.0f}s)"
    if detail:
        line += f" - {detail}"
    print(line)
    assert ok, f"criterion {num} failed: {detail}"
    assert elapsed < budget, f"criterion {num} exceeded runtime budget: {elapsed:.2f}s"


def test_criterion_1_worked_example():
    """Dominance matrices of the two worked 3x3 matrices, exactly."""
    M1 = validate_monotone(M1_ROWS)
    M2 = validate_monotone(M2_ROWS)
    dominance_of(M1)  # warm up
    t0 = time.perf_counter()
    D1 = dominance_of(M1)
    D2 = dominance_of(M2)
    elapsed = time.perf_counter() - t0
    err = max(
        np.abs(D1.entries - 0.1).max(),
        np.abs(D2.entries - 0.1).max(),
        np.abs(D1.entries - D2.entries).max(),
    )
    report(1, err <= 1e-15, elapsed, 1e-3, f"max deviation {err:.2e}")


def test_criterion_2_lemma1_sweep():
    """10^5 seeded 3x3 samples: all eight constraints with slack >= -1e-12."""
    t0 = time.perf_counter()
    out = run_experiment("lemma1", SampleConfig(3, 100_000, seed=1))
    min_slack = float(out["summary"].column("min_slack").astype(float).min())
    violations = int(out["summary"].column("violations").astype(int).sum())
    elapsed = time.perf_counter() - t0
    ok = min_slack >= -1e-12 and violations == 0
    report(2, ok, elapsed, 5.0, f"min slack {min_slack:.2e}, violations {violations}")


def test_criterion_3_lemma2_oracle():
    """10^4 random 2x2 candidates vs the 101x101 grid-search oracle."""
    rng = np.random.default_rng(12345)
    t0 = time.perf_counter()
    disagreements = 0
    decided = 0
    worst_round_trip = 0.0
    for _ in range(10_000):
        D = rng.uniform(0.0, 1.2, size=(2, 2))
        result = check_liftable(D)
        if isinstance(result, LiftWitness):
            back = dominance_of(lift(D, result)).entries
            worst_round_trip = max(worst_round_trip, float(np.abs(back - D).max()))
        slack = grid_liftable(D)
        if abs(slack) <= 0.02:
            continue
        decided += 1
        if isinstance(result, LiftWitness) != (slack > 0.0):
            disagreements += 1
    elapsed = time.perf_counter() - t0
    ok = disagreements == 0 and worst_round_trip <= 1e-10 and decided > 8000
    report(
        3, ok, elapsed, 30.0,
        f"{decided} decided cases, {disagreements} disagreements, "
        f"worst round trip {worst_round_trip:.2e}",
    )


def test_criterion_4_xi3_region():
    """Family traces cover [-1/2, 1]; 10^5 sampled spectra stay inside it."""
    t0 = time.perf_counter()
    traces = run_experiment("figure1", SampleConfig(3, 0))["traces"]
    lam = np.sort(
        np.concatenate(
            [traces.column("lambda2").astype(float), traces.column("lambda3").astype(float)]
        )
    )
    gap = max(
        float(np.diff(lam).max()),
        float(lam.min() + 0.5),
        float(1.0 - lam.max()),
    )
    exit_by = max(float(-0.5 - lam.min()), float(lam.max() - 1.0), 0.0)

    from monospec.sampler import sample_entries

    spectra = spectrum3_batch(sample_entries(SampleConfig(3, 100_000, seed=2)))
    nontrivial = spectra[:, 1:]
    imag_residue = float(np.abs(nontrivial.imag).max())
    low = float(nontrivial.real.min())
    high = float(nontrivial.real.max())
    elapsed = time.perf_counter() - t0
    ok = (
        gap < 2e-3
        and exit_by <= 1e-9
        and low >= -0.5 - 1e-9
        and high <= 1.0 + 1e-9
        and imag_residue < 1e-9
    )
    report(
        4, ok, elapsed, 10.0,
        f"trace gap {gap:.2e}, exit {exit_by:.2e}, sampled range "
        f"[{low:.6f}, {high:.6f}], imag {imag_residue:.2e}",
    )


def test_criterion_5_boundary_theorem():
    """Table families satisfy their curves; junction agreement; impossibility."""
    t0 = time.perf_counter()
    worst_residual = 0.0
    for curve in ("c1", "c2", "c3", "c4", "c5"):
        lo, hi = FAMILY_RANGES[curve]
        for alpha in np.linspace(lo, hi, 50):
            pair = eigenpair_3x3(dominance_of(family_matrix(FamilyId(curve, float(alpha)))))
            worst_residual = max(worst_residual, curve_residual(curve, pair.lambda2, pair.lambda3))

    c4_point, _ = xi3_boundary(K_JUNCTION)
    s_c5 = (1.0 + K_JUNCTION) / (1.0 + K_JUNCTION + K_JUNCTION**2)
    junction_gap = abs(c4_point.lambda2 - s_c5)

    verdict = xi3_pair_member((1.0, -0.5))
    elapsed = time.perf_counter() - t0
    ok = (
        worst_residual < 1e-9
        and junction_gap <= 1e-10
        and not verdict.member
        and verdict.violated == "C4"
    )
    report(
        5, ok, elapsed, 1.0,
        f"worst curve residual {worst_residual:.2e}, junction gap {junction_gap:.2e}, "
        f"(1,-1/2) -> {verdict.violated}",
    )


def test_criterion_6_realise_pair_totality():
    """200x200 grid of member pairs: realisation is monotone, spectrum exact to 1e-8."""
    t0 = time.perf_counter()
    grid = np.linspace(-0.5, 1.0, 200)
    realised = 0
    worst = 0.0
    for l2 in grid:
        for l3 in grid:
            if xi3_pair_member((l2, l3), 1e-12).margin <= 1e-6:
                continue
            M = realise_pair((float(l2), float(l3)))  # constructor validates monotone
            dist = multiset_distance(spectrum_of_stochastic(M).values, [1.0, l2, l3])
            worst = max(worst, dist)
            realised += 1
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-8 and realised > 5000
    report(6, ok, elapsed, 60.0, f"{realised} pairs realised, worst spectrum error {worst:.2e}")


def test_criterion_7_reduction():
    """10^4 4x4 samples: similarity, modulus and Theta_3 laws; n=5 repeat."""
    t0 = time.perf_counter()
    stats = {"rowsum": 0.0, "mu": 0.0, "modulus": 0.0, "theta": 0}
    for n, count, check_theta in ((4, 10_000, True), (5, 10_000, False)):
        for M in sample_monotone(SampleConfig(n, count, seed=3)):
            result = reduce(M)
            for blk in result.blocks:
                stats["rowsum"] = max(
                    stats["rowsum"], float(np.abs(blk.S.entries.sum(axis=1) - 1.0).max())
                )
                for lam, mu in zip(blk.lam, blk.mu):
                    stats["mu"] = max(stats["mu"], abs(mu * blk.r - lam))
                    stats["modulus"] = max(stats["modulus"], abs(lam) - abs(mu))
            if check_theta:
                for z in result.nontrivial_spectrum():
                    if not theta_member(z, 3, 1e-8).member:
                        stats["theta"] += 1
    elapsed = time.perf_counter() - t0
    ok = (
        stats["rowsum"] <= 1e-10
        and stats["mu"] <= 1e-8
        and stats["modulus"] <= 1e-9
        and stats["theta"] == 0
    )
    report(
        7, ok, elapsed, 60.0,
        f"worst row-sum {stats['rowsum']:.2e}, worst mu*r error {stats['mu']:.2e}, "
        f"worst modulus deficit {stats['modulus']:.2e}, theta violations {stats['theta']}",
    )


def test_criterion_8_cross_engine():
    """10^4 samples, 3 <= n <= 6: the two eigenvalue engines agree."""
    t0 = time.perf_counter()
    worst_eq = 0.0
    worst_tr = 0.0
    worst_det = 0.0
    for n in (3, 4, 5, 6):
        for M in sample_monotone(SampleConfig(n, 2500, seed=n)):
            full = spectrum_of_stochastic(M).values
            via_dominance = list(spectrum_of_dominance(dominance_of(M).entries).values)
            worst_eq = max(worst_eq, multiset_distance(full, via_dominance + [1.0]))
            values = np.array(full)
            worst_tr = max(worst_tr, abs(values.sum() - np.trace(M.entries)))
            worst_det = max(worst_det, abs(values.prod() - np.linalg.det(M.entries)))
    elapsed = time.perf_counter() - t0
    ok = worst_eq <= 1e-8 and worst_tr <= 1e-9 and worst_det <= 1e-9
    report(
        8, ok, elapsed, 60.0,
        f"worst spectrum distance {worst_eq:.2e}, trace {worst_tr:.2e}, det {worst_det:.2e}",
    )


def test_criterion_9_sample_determinism(tmp_path):
    """CLI sampling is byte-identical across worker counts."""
    t0 = time.perf_counter()
    outputs = []
    for workers, name in ((1, "a.csv"), (8, "b.csv")):
        path = tmp_path / name
        cmd = [
            sys.executable, "-m", "monospec", "sample",
            "--n", "4", "--count", "1000", "--seed", "7",
            "--workers", str(workers), "--out", str(path),
        ]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        outputs.append(path.read_bytes())
    elapsed = time.perf_counter() - t0
    ok = outputs[0] == outputs[1] and len(outputs[0]) > 0
    report(9, ok, elapsed, 60.0, f"{len(outputs[0])} bytes, identical: {ok}")
