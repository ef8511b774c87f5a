"""Partial traces and entropy primitives for permutation-symmetric states.

Reduced states of symmetric-sector qubit ensembles stay supported on the
symmetric sector, so k-qubit marginals are represented in the (k+1)
dimensional Dicke basis (index = excitation number), never in the 2^k
product basis.  The expansion of an N-qubit Dicke state over a k/(N-k)
split,

    |D_N^e> = sum_q sqrt(C(k,q) C(N-k,e-q) / C(N,e)) |D_k^q> |D_{N-k}^{e-q}>,

turns the partial trace into a small weighted contraction.
"""

from __future__ import annotations

from math import comb, sqrt

import numpy as np

from .spectra import GroundState

__all__ = [
    "trace_out_cavity",
    "reduce_symmetric",
    "von_neumann_entropy",
    "purity",
    "check_density_matrix",
    "spectrum_probabilities",
]

EIGENVALUE_CLAMP = 1e-12
NEGATIVITY_TOL = 1e-10


def check_density_matrix(rho: np.ndarray, name: str = "rho"):
    """Validate Hermiticity, unit trace and positivity (within tolerance)."""
    dev = np.abs(rho - rho.conj().T).max()
    if dev > 1e-12 * max(1.0, np.abs(rho).max()):
        raise ValueError(f"{name} not Hermitian (deviation {dev:.3e})")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > 1e-10:
        raise ValueError(f"{name} trace {tr} != 1")
    lo = np.linalg.eigvalsh(rho).min()
    if lo < -NEGATIVITY_TOL:
        raise ValueError(f"{name} has negative eigenvalue {lo:.3e}")


def trace_out_cavity(gs: GroundState) -> np.ndarray:
    """Reduced qubit state rho_N in the Dicke basis (dim N+1).

    rho_N[j, j'] = sum_n <n, j|psi><psi|n, j'>.  Pure iff the ground
    state factorizes from the cavity (lam = 0).
    """
    a = gs.state.reshape(gs.basis.n_max + 1, gs.basis.n_qubits + 1)
    rho = a.T @ a.conj()
    return (rho + rho.conj().T) / 2.0


def _split_weights(n: int, k: int) -> np.ndarray:
    """w[e, q] = sqrt(C(k,q) C(N-k,e-q) / C(N,e)), zero where invalid."""
    w = np.zeros((n + 1, k + 1))
    for e in range(n + 1):
        cn = comb(n, e)
        for q in range(max(0, e - (n - k)), min(k, e) + 1):
            w[e, q] = sqrt(comb(k, q) * comb(n - k, e - q) / cn)
    return w


def reduce_symmetric(rho_n: np.ndarray, k: int) -> np.ndarray:
    """k-qubit marginal of an N-qubit symmetric state (Dicke basis in,
    Dicke basis out)."""
    n = rho_n.shape[0] - 1
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    if k == n:
        return rho_n
    w = _split_weights(n, k)
    out = np.zeros((k + 1, k + 1), dtype=rho_n.dtype)
    for q in range(k + 1):
        for qp in range(k + 1):
            # traced block keeps r = e - q = e' - q'
            acc = 0.0
            for r in range(n - k + 1):
                e, ep = q + r, qp + r
                if e <= n and ep <= n:
                    acc = acc + rho_n[e, ep] * w[e, q] * w[ep, qp]
            out[q, qp] = acc
    return (out + out.conj().T) / 2.0


def spectrum_probabilities(rho: np.ndarray) -> np.ndarray:
    """Eigenvalues of a density matrix cleaned for entropy/information use.

    Values below EIGENVALUE_CLAMP are set to zero; anything below
    -NEGATIVITY_TOL is an error; the rest is renormalized to sum to 1.
    """
    p = np.linalg.eigvalsh(rho)
    if p.min() < -NEGATIVITY_TOL:
        raise ValueError(f"density matrix eigenvalue {p.min():.3e} < "
                         f"-{NEGATIVITY_TOL}")
    p = np.where(p < EIGENVALUE_CLAMP, 0.0, p)
    return p / p.sum()


def von_neumann_entropy(rho: np.ndarray) -> float:
    """S(rho) = -Tr rho ln rho in nats (0 ln 0 := 0)."""
    p = spectrum_probabilities(rho)
    nz = p[p > 0.0]
    return float(-(nz * np.log(nz)).sum())


def purity(rho: np.ndarray) -> float:
    """Tr(rho^2); equals 1 exactly for pure states."""
    return float(np.sum(np.abs(rho) ** 2))
