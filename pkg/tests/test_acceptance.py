"""Acceptance suite: one test per promised behavior, each printing a
pass line with the measured numbers (run with -s to see them)."""

import numpy as np
import pytest

from dicke_gmc.measures import gmc_report, qfi_matrix
from dicke_gmc.model import ModelParams, build_hamiltonian
from dicke_gmc.oracle import oracle_check
from dicke_gmc.reductions import trace_out_cavity
from dicke_gmc.spectra import converged_ground_state, ground_state
from dicke_gmc.sweep import GridSpec, SweepConfig, evaluate_point, extensivity_scan, run_sweep


def _report(name, detail):
    print(f"ACCEPTANCE PASS: {name} [{detail}]")


# --------------------------------------------------------------------
# first-order critical points: level crossings at eta/N = 0.25, 0.50
# --------------------------------------------------------------------

def test_first_order_critical_points():
    config = SweepConfig(n_qubits=5, lambda_grid=GridSpec(0.0, 0.0, 1),
                         eta_grid=GridSpec(0.0, 0.6, 601),
                         measures=("gmc", "qfi"))
    etas = config.eta_grid.values()
    rows = [evaluate_point(config, 0.0, float(eta)) for eta in etas]

    expected = (0.25, 0.50)
    series = {f"I_{k}": np.array([r.orders[k] for r in rows])
              for k in range(2, 6)}
    series["f_max"] = np.array([r.f_max for r in rows])
    step = etas[1] - etas[0]
    for name, vals in series.items():
        dv = np.abs(np.diff(vals))
        jumps = np.flatnonzero(dv > 0.01)
        mids = (etas[jumps] + etas[jumps + 1]) / 2.0
        assert len(mids) == 2, f"{name}: expected 2 jumps, found {len(mids)}"
        for mid, target in zip(mids, expected):
            assert abs(mid - target) <= step + 1e-12, (
                f"{name}: jump at {mid}, expected near {target}")
        # piecewise constant away from the crossings
        flat = np.delete(dv, jumps)
        assert flat.max() < 1e-9, f"{name}: drifts between crossings"

    # witnessed entanglement depth is a non-decreasing staircase whose
    # steps sit exactly on the crossings
    depths = np.array([r.depth for r in rows])
    assert np.all(np.diff(depths) >= 0)
    step_at = etas[np.flatnonzero(np.diff(depths) > 0)]
    np.testing.assert_allclose(sorted(step_at), [0.25, 0.50], atol=step)
    assert depths[0] == 1 and depths[-1] == 4

    # the crossings are genuine ground-level degeneracies
    for eta_c in expected:
        h = build_hamiltonian(ModelParams(1.0, 1.0, 0.0, eta_c * 5, 5, 2))
        vals = np.sort(np.linalg.eigvalsh(h))
        assert vals[1] - vals[0] <= 1e-10
    _report("first-order critical points",
            f"jumps located within {step:.0e} of 0.25 and 0.50; "
            f"depth staircase 1 -> 3 -> 4")


# --------------------------------------------------------------------
# GMC percentage decomposition on the W plateau
# --------------------------------------------------------------------

def test_gmc_percentage_decomposition():
    gs = ground_state(ModelParams(1.0, 1.0, 0.0, 0.4 * 5, 5, 4))
    rep = gmc_report(trace_out_cavity(gs))
    assert rep.total == pytest.approx(2.50201, abs=1e-4)
    targets = {5: 40.0, 2: 26.2, 3: 20.0, 4: 13.8}
    for k, pct in targets.items():
        assert rep.shares[k] == pytest.approx(pct, abs=0.1), f"k={k}"
    _report("GMC percentage decomposition",
            "shares (k=5,2,3,4) = "
            + ", ".join(f"{rep.shares[k]:.1f}%" for k in (5, 2, 3, 4))
            + f"; I1 = {rep.total:.6f}")


# --------------------------------------------------------------------
# global entanglement on the W plateau: exact rationals
# --------------------------------------------------------------------

def test_global_entanglement_w_plateau():
    from dicke_gmc.measures import global_entanglement

    gs = ground_state(ModelParams(1.0, 1.0, 0.0, 0.4 * 5, 5, 4))
    rho = trace_out_cavity(gs)
    e1 = global_entanglement(rho, 1)
    e2 = global_entanglement(rho, 2)
    assert e1 == pytest.approx(16.0 / 25.0, abs=1e-10)
    assert e2 == pytest.approx(48.0 / 75.0, abs=1e-10)
    _report("global entanglement W plateau", f"E_G(1) = {e1}, E_G(2) = {e2}")


# --------------------------------------------------------------------
# QFI witness depths on the two lam = 0 plateaus
# --------------------------------------------------------------------

def test_qfi_witness_depths():
    w = ground_state(ModelParams(1.0, 1.0, 0.0, 0.4 * 5, 5, 4))
    q_w = qfi_matrix(trace_out_cavity(w))
    assert q_w.f_max == pytest.approx(13.0, abs=1e-8)
    assert q_w.depth == 3

    d2 = ground_state(ModelParams(1.0, 1.0, 0.0, 0.8 * 5, 5, 4))
    q_d2 = qfi_matrix(trace_out_cavity(d2))
    assert q_d2.f_max == pytest.approx(17.0, abs=1e-8)
    assert q_d2.depth == 4
    _report("QFI witness depths",
            f"W: f_max = {q_w.f_max:.9f} depth {q_w.depth}; "
            f"D_5^2: f_max = {q_d2.f_max:.9f} depth {q_d2.depth}")


# --------------------------------------------------------------------
# sum rule I1 = sum I_k on random samples, N = 2..8
# --------------------------------------------------------------------

def test_sum_rule_random_samples():
    rng = np.random.default_rng(20240817)
    worst = 0.0
    for n in range(2, 9):
        for _ in range(100):
            lam = float(rng.uniform(0.0, 1.5))
            eta_s = float(rng.uniform(0.0, 1.0))
            gs = ground_state(ModelParams(1.0, 1.0, lam, eta_s * n, n, 16))
            rep = gmc_report(trace_out_cavity(gs))
            dev = abs(rep.total - sum(rep.orders.values()))
            worst = max(worst, dev)
            assert dev <= 1e-9
    _report("sum rule property suite",
            f"700 random points, worst deviation {worst:.2e}")


# --------------------------------------------------------------------
# oracle equivalence against the full 2^N (x) Fock space
# --------------------------------------------------------------------

def test_oracle_equivalence():
    for n in range(2, 6):
        mismatches = oracle_check(n, n_max=24, tol=1e-8)
        assert mismatches == [], f"N={n}: {mismatches[:3]}"
    _report("oracle equivalence", "N = 2..5, 10-point grid, tol 1e-8")


# --------------------------------------------------------------------
# second-order QPT signature at eta = 0
# --------------------------------------------------------------------

def test_second_order_qpt_signature():
    n_list = (8, 16, 24)
    _, inflections = extensivity_scan(
        n_list, GridSpec(0.45, 0.80, 36), workers=1)
    dist = [abs(inflections[n] - 0.5) for n in n_list]
    assert dist[0] > dist[1] > dist[2], f"inflections {inflections}"

    records, _ = extensivity_scan(n_list, GridSpec(0.3, 1.0, 2), workers=1)
    per_n = {(n, lam): i1n for n, lam, _, i1n in records}
    at_one = [per_n[(n, 1.0)] for n in n_list]
    spread = (max(at_one) - min(at_one)) / min(at_one)
    assert spread < 0.15, f"I1/N at lam=1: {at_one}"
    at_03 = [per_n[(n, 0.3)] for n in n_list]
    assert at_03[0] > at_03[1] > at_03[2], f"I1/N at lam=0.3: {at_03}"
    _report("second-order QPT signature",
            f"inflections {[round(inflections[n], 4) for n in n_list]} -> 0.5; "
            f"I1/N(1.0) spread {100 * spread:.1f}%; "
            f"I1/N(0.3) {[round(v, 5) for v in at_03]} decreasing")


# --------------------------------------------------------------------
# coupling-plane structure on the 41 x 41 grid
# --------------------------------------------------------------------

def test_coupling_plane_structure():
    config = SweepConfig(n_qubits=5, lambda_grid=GridSpec(0.0, 2.0, 41),
                         eta_grid=GridSpec(0.0, 1.0, 41),
                         measures=("gmc",), workers=1)
    rows = run_sweep(config)
    by_point = {(round(r.lambda_scaled, 10), round(r.eta_scaled, 10)): r
                for r in rows}
    lams = [round(v, 10) for v in config.lambda_grid.values()]
    etas = [round(v, 10) for v in config.eta_grid.values()]

    checked_a = checked_b = 0
    for eta in etas:
        if eta <= 0.5:
            continue
        r0 = by_point[(0.0, eta)]
        assert r0.orders[5] > r0.orders[2], f"lam=0 eta={eta}"
        checked_a += 1
        for lam in lams:
            if lam <= 1.0:
                continue
            r = by_point[(lam, eta)]
            assert r.orders[2] > r.orders[5], f"lam={lam} eta={eta}"
            checked_b += 1
    assert checked_a and checked_b
    _report("coupling-plane structure",
            f"I5 > I2 at {checked_a} lam=0 points; "
            f"I2 > I5 at {checked_b} strong-coupling points")


# --------------------------------------------------------------------
# lab frame vs rotated/displaced frame
# --------------------------------------------------------------------

def test_frame_cross_check():
    rng = np.random.default_rng(7141)
    worst = 0.0
    n_checked = 0
    while n_checked < 10:
        lam = float(rng.uniform(0.1, 1.2))
        eta_s = float(rng.uniform(0.0, 0.8))
        p = ModelParams(1.0, 1.0, lam, eta_s * 5, 5, 0)
        lab = converged_ground_state(p)
        rd = converged_ground_state(p, frame="rotated-displaced")
        if not (lab.converged and rd.converged):
            continue
        dev = abs(lab.energy - rd.energy)
        worst = max(worst, dev)
        assert dev <= 1e-8, f"lam={lam} eta_s={eta_s}: {dev}"
        n_checked += 1
    _report("frame cross-check",
            f"10 converged points, worst energy gap {worst:.2e}")
