"""Hermitian eigensolving and converged ground-state extraction.

Ground states are computed by dense diagonalization in the lab frame by
default.  A rotated/displaced frame (quarter-turn about y followed by a
spin-conditioned cavity displacement) is available as an independent
cross-check path: the same physics in a frame where the qubit-cavity
coupling is removed to leading order, diagonalized there, and mapped
back.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .model import (
    DEFAULT_DIM_CAP,
    ModelParams,
    ProductBasis,
    build_hamiltonian,
    conditional_displacement,
    parity_signs,
    rotate_y_half_pi,
)

__all__ = [
    "SpectralDecomposition",
    "GroundState",
    "eigh",
    "ground_state",
    "converged_ground_state",
    "N_MAX_SCHEDULE_START",
    "DEFAULT_N_MAX_CAP",
]

N_MAX_SCHEDULE_START = 8
DEFAULT_N_MAX_CAP = 1024
DEGENERACY_TOL = 1e-10


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues ascending; column i of ``eigenvectors`` belongs to
    ``eigenvalues[i]``.  Column phases are fixed (largest-magnitude
    component real positive)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class GroundState:
    """Lowest eigenstate in the lab-frame product basis."""

    energy: float
    state: np.ndarray
    basis: ProductBasis
    params: ModelParams
    n_max_used: int
    converged: bool
    frame: str  # "lab" or "rotated-displaced"
    degenerate: bool = False


def _fix_phases(vecs: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-magnitude entry is real positive."""
    out = np.array(vecs, copy=True)
    for i in range(out.shape[1]):
        col = out[:, i]
        k = int(np.argmax(np.abs(col)))
        piv = col[k]
        if piv != 0:
            out[:, i] = col * (np.conj(piv) / abs(piv))
    return out


def eigh(m: np.ndarray) -> SpectralDecomposition:
    """Full spectral decomposition of a Hermitian matrix.

    Deterministic up to the phase fix applied to every column.  Raises
    scipy.linalg.LinAlgError (annotated with the dimension) if the
    underlying reduction fails to converge.
    """
    try:
        vals, vecs = scipy.linalg.eigh(m)
    except scipy.linalg.LinAlgError as err:
        raise scipy.linalg.LinAlgError(
            f"eigensolve failed for dimension {m.shape[0]}: {err}") from err
    return SpectralDecomposition(vals, _fix_phases(vecs))


def _lowest_two(h: np.ndarray):
    """Two lowest eigenpairs of a dense Hermitian matrix."""
    if h.shape[0] < 2:
        vals, vecs = scipy.linalg.eigh(h)
        return vals, vecs
    try:
        vals, vecs = scipy.linalg.eigh(h, subset_by_index=(0, 1))
    except scipy.linalg.LinAlgError as err:
        raise scipy.linalg.LinAlgError(
            f"eigensolve failed for dimension {h.shape[0]}: {err}") from err
    return vals, vecs


def _lowest_two_parity(h: np.ndarray, basis: ProductBasis):
    """Two lowest eigenpairs of the lab Hamiltonian, solved per parity
    block.

    The Hamiltonian commutes with (-1)^(n + j), so splitting the basis
    by that sign halves the dense solves and, crucially, keeps the
    returned eigenvectors parity-pure even when the two lowest levels
    are degenerate to machine precision (deep superradiant doublets,
    first-order crossings).
    """
    signs = parity_signs(basis)
    vals_all, vecs_all = [], []
    for sign in (1.0, -1.0):
        idx = np.flatnonzero(signs == sign)
        vb, wb = _lowest_two(h[np.ix_(idx, idx)])
        for i in range(min(2, len(vb))):
            full = np.zeros(h.shape[0], dtype=wb.dtype)
            full[idx] = wb[:, i]
            vals_all.append(vb[i])
            vecs_all.append(full)
    order = np.argsort(vals_all, kind="stable")[:2]
    vals = np.array([vals_all[i] for i in order])
    vecs = np.column_stack([vecs_all[i] for i in order])
    return vals, vecs


def _select_ground(vals, vecs, basis: ProductBasis):
    """Pick the ground column, breaking exact degeneracy toward the
    state with larger weight on the lower-m_s sector."""
    degenerate = bool(len(vals) > 1 and (vals[1] - vals[0]) <= DEGENERACY_TOL)
    pick = 0
    if degenerate:
        m_diag = np.tile(basis.m_values(), basis.n_max + 1)
        mz = [float(np.real(np.vdot(vecs[:, i], m_diag * vecs[:, i])))
              for i in range(2)]
        if mz[1] < mz[0] - 1e-8:
            pick = 1
    vec = _fix_phases(vecs[:, pick:pick + 1])[:, 0]
    return float(vals[0]), vec, degenerate


def _rotated_displaced_ground(p: ModelParams):
    """Ground state computed in the rotated + displaced frame, mapped back.

    The quarter-turn sends the coupling onto Jz, after which a
    spin-conditioned displacement with beta = -2*lam/(sqrt(N)*omega_c)
    cancels it exactly; the remaining Hamiltonian needs far fewer Fock
    layers.  (The factor 2 relative to the often-quoted lam/(sqrt(N)
    omega_c) comes from the +-1/2 single-qubit normalization of Jz.)
    """
    basis = ProductBasis(p.n_qubits, p.n_max)
    h = build_hamiltonian(p)
    r = rotate_y_half_pi(p.n_qubits)
    r_full = np.kron(np.eye(p.n_max + 1), r)
    beta = -2.0 * p.lam / (np.sqrt(p.n_qubits) * p.omega_c)
    # the conjugation below uses the truncated exponential itself, which
    # is exactly unitary at any n_max, so the truncation-loss monitor is
    # not a correctness gate here
    d = conditional_displacement(beta, basis, loss_tol=np.inf)
    u = r_full.conj().T @ d  # lab state = u @ frame state
    h_frame = u.conj().T @ h @ u
    h_frame = (h_frame + h_frame.conj().T) / 2.0
    vals, vecs = _lowest_two(h_frame)
    energy, vec, degenerate = _select_ground(vals, vecs, basis)
    lab = u @ vec
    lab = lab / np.linalg.norm(lab)
    lab = _fix_phases(lab[:, None])[:, 0]
    return energy, lab, degenerate


def ground_state(p: ModelParams, frame: str = "lab") -> GroundState:
    """Ground state of ``build_hamiltonian(p)`` in the lab-frame basis.

    ``frame="rotated-displaced"`` solves in the transformed frame and
    maps the eigenvector back; energies of the two paths agree once
    n_max is converged.
    """
    basis = ProductBasis(p.n_qubits, p.n_max)
    if frame == "lab":
        h = build_hamiltonian(p)
        vals, vecs = _lowest_two_parity(h, basis)
        energy, vec, degenerate = _select_ground(vals, vecs, basis)
    elif frame == "rotated-displaced":
        energy, vec, degenerate = _rotated_displaced_ground(p)
    else:
        raise ValueError(f"unknown frame {frame!r}")
    return GroundState(energy=energy, state=vec, basis=basis, params=p,
                       n_max_used=p.n_max, converged=False, frame=frame,
                       degenerate=degenerate)


def _qubit_rho(gs: GroundState) -> np.ndarray:
    a = gs.state.reshape(gs.basis.n_max + 1, gs.basis.n_qubits + 1)
    rho = a.T @ a.conj()
    return (rho + rho.conj().T) / 2.0


def converged_ground_state(p: ModelParams, e_tol: float = 1e-9,
                           obs_tol: float = 1e-8,
                           n_max_cap: int = DEFAULT_N_MAX_CAP,
                           frame: str = "lab") -> GroundState:
    """Ground state with the Fock cutoff raised until it stops mattering.

    Walks n_max over 8, 16, 32, ... comparing each solve against the
    half-cutoff reference: converged when the energy moves by at most
    e_tol * max(1, |E|) and the reduced qubit state by at most obs_tol
    in max-norm.  ``p.n_max`` is ignored.  If the cap is reached without
    convergence the last result is returned with ``converged=False``.
    """
    if e_tol <= 0 or obs_tol <= 0:
        raise ValueError("tolerances must be positive")
    prev = ground_state(p.with_n_max(N_MAX_SCHEDULE_START // 2), frame=frame)
    prev_rho = _qubit_rho(prev)
    n_max = N_MAX_SCHEDULE_START
    while True:
        cur = ground_state(p.with_n_max(n_max), frame=frame)
        cur_rho = _qubit_rho(cur)
        de = abs(cur.energy - prev.energy)
        drho = np.abs(cur_rho - prev_rho).max()
        if de <= e_tol * max(1.0, abs(cur.energy)) and drho <= obs_tol:
            return GroundState(energy=cur.energy, state=cur.state,
                               basis=cur.basis, params=cur.params,
                               n_max_used=n_max, converged=True, frame=frame,
                               degenerate=cur.degenerate)
        next_dim = (2 * n_max + 1) * (p.n_qubits + 1)
        if n_max >= n_max_cap or next_dim > DEFAULT_DIM_CAP:
            # cap reached: explicit non-converged result, never an exception
            return GroundState(energy=cur.energy, state=cur.state,
                               basis=cur.basis, params=cur.params,
                               n_max_used=n_max, converged=False, frame=frame,
                               degenerate=cur.degenerate)
        prev, prev_rho = cur, cur_rho
        n_max *= 2
