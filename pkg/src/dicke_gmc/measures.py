"""Multipartite correlation and entanglement measures on reduced states.

All measures act on the N-qubit reduced density matrix in the Dicke
basis.  Correlations of order higher than k are relative-entropy
distances to the closest product state over blocks of at most k qubits,
which for permutation-invariant systems is the product of floor(N/k)
copies of the k-qubit marginal times the (N mod k)-qubit remainder:

    I_higher(k) = floor(N/k) S(rho_k) + [N mod k > 0] S(rho_{N mod k}) - S(rho_N)

and the genuine order-k share is the telescoping difference
I(k) = I_higher(k-1) - I_higher(k), summing to the total
I_total = N S(rho_1) - S(rho_N).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import collective_spin_matrices
from .reductions import purity, reduce_symmetric, von_neumann_entropy

__all__ = [
    "GmcReport",
    "QfiReport",
    "gmc_higher_than_k",
    "gmc_order_k",
    "total_correlations",
    "gmc_report",
    "qfi_matrix",
    "global_entanglement",
]

SHARE_FLOOR = 1e-12
SUM_RULE_TOL = 1e-9
QFI_SPECTRAL_FLOOR = 1e-12
PURITY_GATE = 1e-8


@dataclass(frozen=True)
class GmcReport:
    """Entropies and genuine k-partite correlations of one state.

    ``entropies[k]`` for k = 1..N, ``higher_than[k]`` for k = 1..N-1,
    ``orders[k]`` for k = 2..N (all dict keyed by k, values in nats),
    ``shares[k]`` in percent of the total.
    """

    n_qubits: int
    entropies: dict
    higher_than: dict
    orders: dict
    total: float
    shares: dict


@dataclass(frozen=True)
class QfiReport:
    """Collective-spin quantum Fisher information witness.

    ``f_max`` is the largest eigenvalue of the 3x3 matrix gamma;
    ``depth`` the largest k >= 1 with f_max/N > k - 1 (genuine k-partite
    entanglement is witnessed when depth >= 2; below f_max = N nothing
    can be concluded).
    """

    gamma: np.ndarray
    f_max: float
    depth: int


def _entropies(rho_n: np.ndarray) -> dict:
    n = rho_n.shape[0] - 1
    s = {k: von_neumann_entropy(reduce_symmetric(rho_n, k))
         for k in range(1, n)}
    s[n] = von_neumann_entropy(rho_n)
    return s


def _higher_from_entropies(s: dict, n: int, k: int) -> float:
    quotient, remainder = divmod(n, k)
    val = quotient * s[k] - s[n]
    if remainder:
        val += s[remainder]
    return val


def gmc_higher_than_k(rho_n: np.ndarray, k: int) -> float:
    """Genuine correlations of order higher than k (nats); 0 for k = N."""
    n = rho_n.shape[0] - 1
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    if k == n:
        return 0.0
    return _higher_from_entropies(_entropies(rho_n), n, k)


def gmc_order_k(rho_n: np.ndarray, k: int) -> float:
    """Genuine k-partite correlations I(k) = I_higher(k-1) - I_higher(k)."""
    n = rho_n.shape[0] - 1
    if not 2 <= k <= n:
        raise ValueError(f"k must be in [2, {n}], got {k}")
    s = _entropies(rho_n)
    hi_prev = _higher_from_entropies(s, n, k - 1)
    hi = _higher_from_entropies(s, n, k) if k < n else 0.0
    return hi_prev - hi


def total_correlations(rho_n: np.ndarray) -> float:
    """I_total = N S(rho_1) - S(rho_N), the distance to the fully
    factorized marginal state."""
    n = rho_n.shape[0] - 1
    if n == 0:
        return 0.0
    s1 = von_neumann_entropy(reduce_symmetric(rho_n, 1))
    return n * s1 - von_neumann_entropy(rho_n)


def gmc_report(rho_n: np.ndarray) -> GmcReport:
    """All entropies, correlation orders and percentage shares at once.

    Raises if the telescoping sum rule total = sum of orders is violated
    beyond SUM_RULE_TOL (an internal-consistency failure).
    """
    n = rho_n.shape[0] - 1
    s = _entropies(rho_n)
    higher = {k: _higher_from_entropies(s, n, k) for k in range(1, n)}
    higher_full = dict(higher)
    higher_full[n] = 0.0
    orders = {k: higher_full[k - 1] - higher_full[k] for k in range(2, n + 1)}
    total = higher_full[1] if n >= 2 else 0.0
    if abs(total - sum(orders.values())) > SUM_RULE_TOL:
        raise AssertionError(
            f"sum rule violated: total={total!r} vs "
            f"sum of orders={sum(orders.values())!r}")
    if total > SHARE_FLOOR:
        shares = {k: 100.0 * orders[k] / total for k in orders}
    else:
        shares = {k: 0.0 for k in orders}
    return GmcReport(n_qubits=n, entropies=s, higher_than=higher,
                     orders=orders, total=total, shares=shares)


def qfi_matrix(rho_n: np.ndarray) -> QfiReport:
    """Quantum Fisher information optimized over collective spin axes.

    gamma[a, b] = 2 sum_{i,j} (p_i - p_j)^2 / (p_i + p_j)
                  <j|J_a|i><i|J_b|j>
    over the spectral decomposition of rho_N, with pairs of vanishing
    combined weight skipped.  Generators are the spin-S matrices with
    single-qubit eigenvalues +-1/2.
    """
    n = rho_n.shape[0] - 1
    p, v = np.linalg.eigh(rho_n)
    p = np.clip(p, 0.0, None)
    jx, jy, jz = collective_spin_matrices(n)
    gens = [v.conj().T @ g @ v for g in (jx, jy, jz)]

    psum = p[:, None] + p[None, :]
    pdif = p[:, None] - p[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        w = np.where(psum > QFI_SPECTRAL_FLOOR, pdif ** 2 / psum, 0.0)

    gamma = np.empty((3, 3))
    for a in range(3):
        for b in range(a, 3):
            # w[i,j] * <j|A_a|i> <i|A_b|j>
            val = 2.0 * np.sum(w * gens[a].T * gens[b])
            gamma[a, b] = gamma[b, a] = float(np.real(val))

    f_max = float(np.linalg.eigvalsh(gamma).max())
    ratio = f_max / n
    depth = 1
    # strict inequality, with a guard against eigenvalue roundoff just
    # above an integer plateau
    while ratio - depth > 1e-9:
        depth += 1
    return QfiReport(gamma=gamma, f_max=f_max, depth=depth)


def global_entanglement(rho_n: np.ndarray, l: int):
    """Rescaled linear entropy of the l-qubit marginal,
    d/(d-1) * (1 - Tr rho_l^2) with d = 2^min(l, N-l).

    Meaningful only for pure rho_N; returns None when
    Tr rho_N^2 < 1 - PURITY_GATE.
    """
    n = rho_n.shape[0] - 1
    if not 1 <= l <= n - 1:
        raise ValueError(f"l must be in [1, {n - 1}], got {l}")
    if purity(rho_n) < 1.0 - PURITY_GATE:
        return None
    d = 2.0 ** min(l, n - l)
    return float(d / (d - 1.0) * (1.0 - purity(reduce_symmetric(rho_n, l))))
