import numpy as np
import pytest

from dicke_gmc.model import (
    ModelParams,
    ProductBasis,
    analytic_energy,
    build_hamiltonian,
    collective_spin_matrices,
    first_order_critical_couplings,
)
from dicke_gmc.spectra import converged_ground_state, eigh, ground_state


def test_eigh_diagonal():
    dec = eigh(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_allclose(dec.eigenvalues, [1.0, 2.0, 3.0])


def test_eigh_jx_n1():
    jx, _, _ = collective_spin_matrices(1)
    dec = eigh(jx)
    np.testing.assert_allclose(dec.eigenvalues, [-0.5, 0.5], atol=1e-14)


def test_eigh_residuals_and_orthonormality():
    rng = np.random.default_rng(7)
    m = rng.normal(size=(40, 40)) + 1j * rng.normal(size=(40, 40))
    m = (m + m.conj().T) / 2.0
    dec = eigh(m)
    resid = m @ dec.eigenvectors - dec.eigenvectors * dec.eigenvalues
    assert np.linalg.norm(resid, axis=0).max() <= 1e-9 * np.abs(m).max()
    gram = dec.eigenvectors.conj().T @ dec.eigenvectors
    assert np.abs(gram - np.eye(40)).max() < 1e-10


def test_eigh_phase_fix_deterministic():
    rng = np.random.default_rng(3)
    m = rng.normal(size=(12, 12)) + 1j * rng.normal(size=(12, 12))
    m = (m + m.conj().T) / 2.0
    d1, d2 = eigh(m), eigh(m.copy())
    np.testing.assert_array_equal(d1.eigenvectors, d2.eigenvectors)
    for i in range(12):
        col = d1.eigenvectors[:, i]
        piv = col[int(np.argmax(np.abs(col)))]
        assert abs(piv.imag) < 1e-12 and piv.real > 0


def test_eigh_lambda_zero_multiset():
    p = ModelParams(1.0, 1.0, 0.0, 1.3, 4, 6)
    dec = eigh(build_hamiltonian(p))
    basis = ProductBasis(4, 6)
    expected = sorted(
        analytic_energy(n, m, p)
        for n in range(7) for m in basis.m_values())
    np.testing.assert_allclose(dec.eigenvalues, expected, atol=1e-12)


def test_ground_state_separable():
    gs = ground_state(ModelParams(1.0, 1.0, 0.0, 0.0, 5, 2))
    assert gs.energy == pytest.approx(-2.5, abs=1e-12)
    idx = gs.basis.index(0, 0)
    assert abs(gs.state[idx]) == pytest.approx(1.0, abs=1e-12)
    assert not gs.degenerate


def test_ground_state_w_region():
    gs = ground_state(ModelParams(1.0, 1.0, 0.0, 0.4 * 5, 5, 2))
    assert gs.energy == pytest.approx(-0.6, abs=1e-12)
    idx = gs.basis.index(0, 1)  # m_s = -3/2, the single-excitation state
    assert abs(gs.state[idx]) == pytest.approx(1.0, abs=1e-12)


def test_ground_state_large_eta():
    # E_q(m) minimized by brute force over m
    p = ModelParams(1.0, 1.0, 0.0, 10.0 * 5, 5, 2)
    gs = ground_state(p)
    basis = gs.basis
    ms = basis.m_values()
    best = min(analytic_energy(0, m, p) for m in ms)
    assert gs.energy == pytest.approx(best, abs=1e-12)
    j = int(np.argmax(np.abs(gs.state[:6])))
    assert ms[j] == -0.5


def test_ground_state_energy_expectation():
    p = ModelParams(1.0, 1.0, 0.9, 1.2, 4, 24)
    gs = ground_state(p)
    h = build_hamiltonian(p)
    e = float(np.real(np.vdot(gs.state, h @ gs.state)))
    assert e == pytest.approx(gs.energy, rel=1e-9)


def test_ground_state_degenerate_crossing():
    # exactly at the first level crossing the two lowest levels meet and
    # the lower-m_s state is selected
    eta_c = first_order_critical_couplings(5, 1.0)[0][1]  # 0.25
    p = ModelParams(1.0, 1.0, 0.0, eta_c * 5, 5, 2)
    h = build_hamiltonian(p)
    vals = np.sort(np.linalg.eigvalsh(h))
    assert vals[1] - vals[0] <= 1e-10
    gs = ground_state(p)
    assert gs.degenerate
    idx = gs.basis.index(0, 0)  # m_s = -5/2 wins the tie-break
    assert abs(gs.state[idx]) == pytest.approx(1.0, abs=1e-10)


def test_parity_blocked_matches_plain_eigh():
    for lam, eta in [(0.5, 0.0), (1.1, 2.5), (0.0, 1.0)]:
        p = ModelParams(1.0, 1.0, lam, eta, 3, 16)
        gs = ground_state(p)
        dec = eigh(build_hamiltonian(p))
        assert gs.energy == pytest.approx(dec.eigenvalues[0], abs=1e-11)
        overlap = abs(np.vdot(dec.eigenvectors[:, 0], gs.state))
        assert overlap == pytest.approx(1.0, abs=1e-9)


def test_converged_lambda_zero_first_step():
    gs = converged_ground_state(ModelParams(1.0, 1.0, 0.0, 0.0, 5, 0))
    assert gs.converged
    assert gs.n_max_used == 8
    assert gs.energy == pytest.approx(-2.5, abs=1e-12)


def test_converged_normal_phase_small_n_max():
    gs = converged_ground_state(ModelParams(1.0, 1.0, 0.3, 0.0, 5, 0))
    assert gs.converged
    assert gs.n_max_used <= 32


def test_converged_superradiant_n_max_scale():
    p = ModelParams(1.0, 1.0, 1.0, 0.0, 5, 0)
    gs = converged_ground_state(p)
    assert gs.converged
    # displaced-oscillator estimate: mean occupation ~ lam^2 N (1 - u^2)
    assert gs.n_max_used >= 32
    occ = np.sum(np.abs(gs.state.reshape(-1, 6)) ** 2
                 * np.arange(gs.n_max_used + 1)[:, None])
    assert gs.n_max_used > occ


def test_converged_energy_monotone_in_n_max():
    p = ModelParams(1.0, 1.0, 1.1, 0.0, 4, 0)
    energies = [ground_state(p.with_n_max(n)).energy for n in (4, 8, 16, 32, 64)]
    assert all(e2 <= e1 + 1e-12 for e1, e2 in zip(energies, energies[1:]))


def test_converged_cap_flags_not_silent():
    gs = converged_ground_state(ModelParams(1.0, 1.0, 1.0, 0.0, 5, 0),
                                e_tol=1e-9, obs_tol=1e-8, n_max_cap=8)
    assert not gs.converged
    assert gs.n_max_used == 8


def test_invalid_tolerances():
    with pytest.raises(ValueError):
        converged_ground_state(ModelParams(1.0, 1.0, 0.0, 0.0, 2, 0),
                               e_tol=0.0)


def test_frame_agreement():
    rng = np.random.default_rng(11)
    for _ in range(4):
        lam = float(rng.uniform(0.1, 1.1))
        eta_s = float(rng.uniform(0.0, 0.8))
        lab = converged_ground_state(ModelParams(1.0, 1.0, lam, eta_s * 5, 5, 0))
        rd = converged_ground_state(ModelParams(1.0, 1.0, lam, eta_s * 5, 5, 0),
                                    frame="rotated-displaced")
        assert lab.converged and rd.converged
        assert rd.energy == pytest.approx(lab.energy, abs=1e-8)


def test_frame_state_maps_back():
    p = ModelParams(1.0, 1.0, 0.7, 1.0, 4, 32)
    lab = ground_state(p)
    rd = ground_state(p, frame="rotated-displaced")
    assert abs(np.vdot(lab.state, rd.state)) == pytest.approx(1.0, abs=1e-8)


def test_unknown_frame():
    with pytest.raises(ValueError, match="frame"):
        ground_state(ModelParams(1.0, 1.0, 0.0, 0.0, 2, 2), frame="bogus")
