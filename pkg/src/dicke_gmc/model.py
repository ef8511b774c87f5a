"""Hilbert-space basis, Hamiltonian construction and frame transforms.

The model is an ensemble of N qubits coupled to a single bosonic mode,
with an additional Ising-type qubit-qubit interaction:

    H = omega_c a'a + omega_0 Jz + (eta/N) Jz^2 + (lam/sqrt(N)) (a' + a) 2Jx

where Jx, Jy, Jz are collective spin operators for total spin S = N/2
with single-qubit eigenvalues +-1/2 (so Jz has eigenvalues m_s in
{-N/2, ..., N/2}), and the cavity mode is truncated at Fock number
``n_max``.  With this normalization the zero-coupling ground energy is
-omega_0*N/2 and the normal/superradiant transition of the eta=0 model
sits at lam_c = sqrt(omega_c*omega_0)/2 for every N, which is what the
scaled coupling axes of the sweep tooling assume.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

__all__ = [
    "ModelParams",
    "ProductBasis",
    "DEFAULT_DIM_CAP",
    "collective_spin_matrices",
    "build_hamiltonian",
    "analytic_energy",
    "first_order_critical_couplings",
    "superradiant_critical_coupling",
    "conditional_displacement",
    "rotate_y_half_pi",
    "parity_signs",
    "boson_annihilation",
    "assert_hermitian",
]

DEFAULT_DIM_CAP = 20_000


@dataclass(frozen=True)
class ModelParams:
    """One Hamiltonian instance.

    ``lam`` is the qubit-cavity coupling in the per-qubit normalization
    (it enters the Hamiltonian divided by sqrt(N)); ``eta`` is the bare
    qubit-qubit coupling (it enters divided by N).
    """

    omega_c: float
    omega_0: float
    lam: float
    eta: float
    n_qubits: int
    n_max: int

    def __post_init__(self):
        if self.omega_c <= 0:
            raise ValueError(f"omega_c must be > 0, got {self.omega_c}")
        if self.omega_0 <= 0:
            raise ValueError(f"omega_0 must be > 0, got {self.omega_0}")
        if self.lam < 0:
            raise ValueError(f"lam must be >= 0, got {self.lam}")
        if self.n_qubits < 1:
            raise ValueError(f"n_qubits must be >= 1, got {self.n_qubits}")
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")

    def with_n_max(self, n_max: int) -> "ModelParams":
        return ModelParams(self.omega_c, self.omega_0, self.lam, self.eta,
                           self.n_qubits, n_max)


@dataclass(frozen=True)
class ProductBasis:
    """Flat index map for the truncated Fock (x) Dicke product space.

    Basis states are |n> (x) |S, m_s> with n in [0, n_max] and the Dicke
    label j in [0, N] encoding m_s = j - N/2.  The flat index is
    Fock-major: index(n, j) = n*(N+1) + j, matching ``np.kron(A_fock,
    B_spin)`` ordering.
    """

    n_qubits: int
    n_max: int

    def __post_init__(self):
        if self.n_qubits < 1 or self.n_max < 0:
            raise ValueError("need n_qubits >= 1 and n_max >= 0")

    @property
    def dim(self) -> int:
        return (self.n_max + 1) * (self.n_qubits + 1)

    @property
    def spin_dim(self) -> int:
        return self.n_qubits + 1

    def index(self, n: int, j: int) -> int:
        if not (0 <= n <= self.n_max and 0 <= j <= self.n_qubits):
            raise ValueError(f"(n={n}, j={j}) outside basis range")
        return n * (self.n_qubits + 1) + j

    def unravel(self, i: int) -> tuple[int, int]:
        return divmod(i, self.n_qubits + 1)

    def m_values(self) -> np.ndarray:
        """Spin projections m_s for j = 0..N."""
        return np.arange(self.n_qubits + 1) - self.n_qubits / 2.0


def assert_hermitian(m: np.ndarray, rtol: float = 1e-12, name: str = "matrix"):
    """Raise if ``m`` deviates from Hermiticity beyond rtol * max(1, |m|)."""
    scale = max(1.0, np.abs(m).max()) if m.size else 1.0
    dev = np.abs(m - m.conj().T).max() if m.size else 0.0
    if dev > rtol * scale:
        raise ValueError(f"{name} is not Hermitian: max deviation {dev:.3e}")


def boson_annihilation(n_max: int) -> np.ndarray:
    """Truncated annihilation operator, a|n> = sqrt(n)|n-1>."""
    return np.diag(np.sqrt(np.arange(1, n_max + 1)), k=1)


def collective_spin_matrices(n_qubits: int):
    """Spin-S angular momentum matrices (Jx, Jy, Jz) with S = N/2.

    Rows/columns are ordered by ascending m_s = -S, ..., S; single-qubit
    eigenvalues are +-1/2.
    """
    if n_qubits < 1:
        raise ValueError("n_qubits must be >= 1")
    s = n_qubits / 2.0
    m = np.arange(n_qubits + 1) - s
    jz = np.diag(m)
    # <m+1| J+ |m> = sqrt(S(S+1) - m(m+1))
    ladder = np.sqrt(s * (s + 1) - m[:-1] * (m[:-1] + 1))
    jp = np.zeros((n_qubits + 1, n_qubits + 1))
    jp[np.arange(1, n_qubits + 1), np.arange(n_qubits)] = ladder
    jm = jp.T
    jx = (jp + jm) / 2.0
    jy = (jp - jm) / 2.0j
    return jx, jy, jz


def build_hamiltonian(p: ModelParams, dim_cap: int = DEFAULT_DIM_CAP) -> np.ndarray:
    """Dense Hamiltonian on the ProductBasis (Fock-major ordering).

    At lam = 0 the matrix is diagonal with entries
    ``analytic_energy(n, m_s, p)``.
    """
    basis = ProductBasis(p.n_qubits, p.n_max)
    if basis.dim > dim_cap:
        raise ValueError(
            f"basis dimension {basis.dim} exceeds cap {dim_cap}; "
            "lower n_max or n_qubits, or raise dim_cap")
    nf = p.n_max + 1
    a = boson_annihilation(p.n_max)
    number = np.diag(np.arange(nf, dtype=float))
    jx, _, jz = collective_spin_matrices(p.n_qubits)
    eye_f = np.eye(nf)
    eye_s = np.eye(p.n_qubits + 1)

    h = np.kron(p.omega_c * number, eye_s)
    h += np.kron(eye_f, p.omega_0 * jz + (p.eta / p.n_qubits) * (jz @ jz))
    if p.lam != 0.0:
        h = h.astype(float)
        h += (p.lam / np.sqrt(p.n_qubits)) * np.kron(a.T + a, 2.0 * jx)
    return h


def analytic_energy(n: int, m_s: float, p: ModelParams) -> float:
    """Energy of |n> (x) |S, m_s> at lam = 0:
    omega_c*n + omega_0*m_s + (eta/N)*m_s^2."""
    return p.omega_c * n + p.omega_0 * m_s + (p.eta / p.n_qubits) * m_s ** 2


def first_order_critical_couplings(n_qubits: int, omega_0: float):
    """Level-crossing couplings of the lam = 0 model.

    Returns [(m_s, eta_c/N), ...] sorted ascending in eta_c/N; each entry
    marks where the ground state changes from |S, m_s> to |S, m_s + 1>.
    Crossings exist for m_s = -N/2, ..., -1 (eta_c/N = -omega_0/(2m_s+1)
    is positive only there).
    """
    if n_qubits < 2:
        raise ValueError("need n_qubits >= 2 for qubit-qubit crossings")
    if omega_0 <= 0:
        raise ValueError("omega_0 must be > 0")
    s = n_qubits / 2.0
    out = []
    m = -s
    while m <= -1.0 + 1e-12:
        out.append((m, -omega_0 / (2.0 * m + 1.0)))
        m += 1.0
    out.sort(key=lambda t: t[1])
    return out


def superradiant_critical_coupling(omega_c: float, omega_0: float) -> float:
    """Thermodynamic-limit normal/superradiant critical coupling
    lam_c = sqrt(omega_c*omega_0)/2 (eta = 0)."""
    return float(np.sqrt(omega_c * omega_0) / 2.0)


def _fock_displacement(alpha: float, n_max: int) -> np.ndarray:
    a = boson_annihilation(n_max)
    return expm(alpha * (a.T - a))


def conditional_displacement(beta: float, basis: ProductBasis,
                             loss_tol: float = 1e-6) -> np.ndarray:
    """exp(Jz (beta a' - beta a)) on the truncated product space.

    Block-diagonal over the spin label: spin projection m_s gets the
    single-mode displacement D(m_s * beta).  The exponential of the
    truncated generator is exactly unitary, but it stops agreeing with
    the untruncated displacement near the top Fock layers; each block is
    checked against a doubled truncation on the lowest
    ceil((n_max+1)/2) layers and a ValueError is raised when the
    deviation exceeds ``loss_tol``.
    """
    nf = basis.n_max + 1
    n_low = (nf + 1) // 2
    blocks = {}
    for m in basis.m_values():
        key = round(float(m * beta), 15)
        if key in blocks:
            continue
        blk = _fock_displacement(key, basis.n_max)
        if key != 0.0 and np.isfinite(loss_tol):
            ref = _fock_displacement(key, 2 * basis.n_max + 8)
            loss = np.abs(blk[:n_low, :n_low] - ref[:n_low, :n_low]).max()
            if loss > loss_tol:
                raise ValueError(
                    f"displacement amplitude {key} is not converged on the "
                    f"lowest {n_low} Fock layers at n_max={basis.n_max} "
                    f"(unitarity/truncation loss {loss:.3e}); increase n_max")
        blocks[key] = blk
    dim = basis.dim
    d = np.zeros((dim, dim))
    nq = basis.n_qubits
    for j, m in enumerate(basis.m_values()):
        d[j::nq + 1, j::nq + 1] = blocks[round(float(m * beta), 15)]
    return d


def rotate_y_half_pi(n_qubits: int) -> np.ndarray:
    """Quarter-turn about the y axis on the Dicke sector.

    Sign convention is fixed by the requirement R' Jz R = Jx, i.e.
    R = exp(+i (pi/2) Jy).
    """
    _, jy, _ = collective_spin_matrices(n_qubits)
    return expm(1j * (np.pi / 2.0) * jy)


def parity_signs(basis: ProductBasis) -> np.ndarray:
    """Diagonal of the parity operator exp(i*pi*(a'a + Jz + N/2)),
    i.e. (-1)^(n + j) over the flat basis."""
    n = np.arange(basis.n_max + 1)
    j = np.arange(basis.n_qubits + 1)
    return ((-1.0) ** (n[:, None] + j[None, :])).ravel()
