"""Brute-force validation in the full 2^N (x) Fock space for small N.

Everything here is intentionally naive: per-site Pauli sums, literal
index-summation partial traces, equal-weight Dicke expansions.  It
exists to give the symmetric-subspace shortcuts an independent ground
truth.  Qubit 0 is the least significant bit of the computational
index; bit value 1 means the excited state.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt

import numpy as np
import scipy.linalg

from .measures import gmc_report, qfi_matrix
from .model import ModelParams, boson_annihilation
from .reductions import reduce_symmetric, trace_out_cavity, von_neumann_entropy
from .spectra import ground_state

__all__ = [
    "ORACLE_MAX_QUBITS",
    "ORACLE_MAX_N_MAX",
    "build_full_hamiltonian",
    "dicke_basis_matrix",
    "embed_dicke",
    "brute_force_reduce",
    "full_qfi_max",
    "OracleMismatch",
    "oracle_check",
    "default_oracle_points",
]

ORACLE_MAX_QUBITS = 6
ORACLE_MAX_N_MAX = 32


def _popcounts(n_qubits: int) -> np.ndarray:
    b = np.arange(2 ** n_qubits)
    return np.array([bin(x).count("1") for x in b])


def _pauli_sums(n_qubits: int):
    """(2Jx, Jz) realized as per-site Pauli sums on 2^N, Jz = sum sigma_z/2."""
    dim = 2 ** n_qubits
    jz_diag = _popcounts(n_qubits) - n_qubits / 2.0
    two_jx = np.zeros((dim, dim))
    for b in range(dim):
        for i in range(n_qubits):
            two_jx[b ^ (1 << i), b] += 1.0
    return two_jx, np.diag(jz_diag)


def build_full_hamiltonian(p: ModelParams, dim_cap: int = 20_000) -> np.ndarray:
    """The model Hamiltonian written literally with per-site Paulis."""
    if p.n_qubits > ORACLE_MAX_QUBITS:
        raise ValueError(f"oracle limited to N <= {ORACLE_MAX_QUBITS}")
    nf = p.n_max + 1
    dim = nf * 2 ** p.n_qubits
    if dim > dim_cap:
        raise ValueError(f"full-space dimension {dim} exceeds cap {dim_cap}")
    a = boson_annihilation(p.n_max)
    number = np.diag(np.arange(nf, dtype=float))
    two_jx, jz = _pauli_sums(p.n_qubits)
    eye_f = np.eye(nf)
    eye_q = np.eye(2 ** p.n_qubits)
    h = np.kron(p.omega_c * number, eye_q)
    h += np.kron(eye_f, p.omega_0 * jz + (p.eta / p.n_qubits) * (jz @ jz))
    h += (p.lam / np.sqrt(p.n_qubits)) * np.kron(a.T + a, two_jx)
    return h


def dicke_basis_matrix(k: int) -> np.ndarray:
    """Rows q = 0..k: |D_k^q> expanded over the 2^k computational basis."""
    if k > ORACLE_MAX_QUBITS:
        raise ValueError(f"oracle limited to k <= {ORACLE_MAX_QUBITS}")
    pc = _popcounts(k)
    b = np.zeros((k + 1, 2 ** k))
    for q in range(k + 1):
        idx = np.flatnonzero(pc == q)
        b[q, idx] = 1.0 / sqrt(comb(k, q))
    return b


def embed_dicke(rho_k: np.ndarray) -> np.ndarray:
    """Expand a Dicke-basis density matrix into the full 2^k space."""
    k = rho_k.shape[0] - 1
    b = dicke_basis_matrix(k)
    return b.T @ rho_k @ b.conj()


def brute_force_reduce(state_or_rho: np.ndarray, keep: int) -> np.ndarray:
    """Partial trace over the last N-keep qubits (the high bits)."""
    arr = np.asarray(state_or_rho)
    if arr.ndim == 1:
        arr = np.outer(arr, arr.conj())
    dim = arr.shape[0]
    n = int(round(np.log2(dim)))
    if 2 ** n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    if not 1 <= keep <= n:
        raise ValueError(f"keep must be in [1, {n}]")
    hi = 2 ** (n - keep)
    lo = 2 ** keep
    r = arr.reshape(hi, lo, hi, lo)
    return np.trace(r, axis1=0, axis2=2)


def _trace_out_cavity_full(vec: np.ndarray, n_qubits: int,
                           n_max: int) -> np.ndarray:
    a = vec.reshape(n_max + 1, 2 ** n_qubits)
    rho = a.T @ a.conj()
    return (rho + rho.conj().T) / 2.0


def full_qfi_max(rho_full: np.ndarray) -> float:
    """Largest collective-spin QFI eigenvalue evaluated on the 2^N space."""
    n = int(round(np.log2(rho_full.shape[0])))
    two_jx, jz = _pauli_sums(n)
    jx = two_jx / 2.0
    # Jy from per-site sigma_y/2
    dim = 2 ** n
    jy = np.zeros((dim, dim), dtype=complex)
    for b in range(dim):
        for i in range(n):
            flipped = b ^ (1 << i)
            # <flipped| sigma_y^i |b> = i if bit set in flipped else -i
            jy[flipped, b] += 0.5j if (flipped >> i) & 1 else -0.5j
    p, v = np.linalg.eigh(rho_full)
    p = np.clip(p, 0.0, None)
    gens = [v.conj().T @ g @ v for g in (jx, jy, jz)]
    psum = p[:, None] + p[None, :]
    pdif = p[:, None] - p[None, :]
    w = np.where(psum > 1e-12, pdif ** 2 / np.where(psum > 0, psum, 1.0), 0.0)
    gamma = np.empty((3, 3))
    for a_ in range(3):
        for b_ in range(a_, 3):
            val = 2.0 * np.sum(w * gens[a_].T * gens[b_])
            gamma[a_, b_] = gamma[b_, a_] = float(np.real(val))
    return float(np.linalg.eigvalsh(gamma).max())


@dataclass(frozen=True)
class OracleMismatch:
    point: tuple
    quantity: str
    deviation: float


def default_oracle_points():
    """(lam, eta/N) sample used by the oracle-check command.

    lam = 0 is sampled only below the first level crossing: past it the
    full-space ground state is degenerate across total-spin sectors and
    a state-by-state comparison is ill-posed.
    """
    pts = [(0.0, 0.1)]
    for lam in (0.3, 0.75, 1.0):
        for eta_scaled in (0.1, 0.35, 0.6):
            pts.append((lam, eta_scaled))
    return pts


def oracle_check(n_qubits: int, points=None, n_max: int = 24,
                 tol: float = 1e-8, omega_c: float = 1.0,
                 omega_0: float = 1.0, reduce_fn=reduce_symmetric):
    """Compare the symmetric pipeline against full-space brute force.

    Both sides use the same Fock truncation, so agreement is tested at
    machine accuracy independent of physical convergence.  Returns a
    list of OracleMismatch (empty means pass).  ``reduce_fn`` exists so
    tests can inject a corrupted reduction.
    """
    if n_qubits > ORACLE_MAX_QUBITS:
        raise ValueError(f"oracle limited to N <= {ORACLE_MAX_QUBITS}")
    if n_max > ORACLE_MAX_N_MAX:
        raise ValueError(f"oracle limited to n_max <= {ORACLE_MAX_N_MAX}")
    if points is None:
        points = default_oracle_points()
    mismatches = []

    def record(point, quantity, dev):
        if dev > tol:
            mismatches.append(OracleMismatch(point, quantity, float(dev)))

    for lam, eta_scaled in points:
        p = ModelParams(omega_c, omega_0, lam, eta_scaled * n_qubits,
                        n_qubits, n_max)
        point = (lam, eta_scaled)

        gs = ground_state(p)
        rho_n = trace_out_cavity(gs)

        h_full = build_full_hamiltonian(p)
        vals, vecs = scipy.linalg.eigh(h_full, subset_by_index=(0, 0))
        record(point, "ground_energy", abs(vals[0] - gs.energy))
        rho_q_full = _trace_out_cavity_full(vecs[:, 0], n_qubits, n_max)

        record(point, "rho_N",
               np.abs(embed_dicke(rho_n) - rho_q_full).max())
        for k in range(1, n_qubits):
            sym = embed_dicke(reduce_fn(rho_n, k))
            brute = brute_force_reduce(rho_q_full, k)
            record(point, f"rho_{k}", np.abs(sym - brute).max())
            record(point, f"S_{k}",
                   abs(von_neumann_entropy(reduce_fn(rho_n, k))
                       - von_neumann_entropy(brute)))

        rep = gmc_report(rho_n)
        s_full = {k: von_neumann_entropy(brute_force_reduce(rho_q_full, k))
                  for k in range(1, n_qubits)}
        s_full[n_qubits] = von_neumann_entropy(rho_q_full)
        for k in range(2, n_qubits + 1):

            def higher(kk):
                if kk == n_qubits:
                    return 0.0
                q, r = divmod(n_qubits, kk)
                v = q * s_full[kk] - s_full[n_qubits]
                if r:
                    v += s_full[r]
                return v

            record(point, f"I_{k}",
                   abs(rep.orders[k] - (higher(k - 1) - higher(k))))

        record(point, "f_max",
               abs(qfi_matrix(rho_n).f_max - full_qfi_max(rho_q_full)))

    return mismatches
