"""Exact diagonalization of the interacting-qubit Dicke model with
genuine multipartite correlation, QFI witness and global entanglement
measures over the scaled coupling plane."""

__version__ = "0.1.0"

from .measures import (
    GmcReport,
    QfiReport,
    global_entanglement,
    gmc_higher_than_k,
    gmc_order_k,
    gmc_report,
    qfi_matrix,
    total_correlations,
)
from .model import (
    ModelParams,
    ProductBasis,
    analytic_energy,
    build_hamiltonian,
    collective_spin_matrices,
    conditional_displacement,
    first_order_critical_couplings,
    rotate_y_half_pi,
    superradiant_critical_coupling,
)
from .reductions import (
    purity,
    reduce_symmetric,
    trace_out_cavity,
    von_neumann_entropy,
)
from .spectra import (
    GroundState,
    SpectralDecomposition,
    converged_ground_state,
    eigh,
    ground_state,
)

__all__ = [
    "__version__",
    "ModelParams",
    "ProductBasis",
    "GroundState",
    "SpectralDecomposition",
    "GmcReport",
    "QfiReport",
    "analytic_energy",
    "build_hamiltonian",
    "collective_spin_matrices",
    "conditional_displacement",
    "converged_ground_state",
    "eigh",
    "first_order_critical_couplings",
    "global_entanglement",
    "gmc_higher_than_k",
    "gmc_order_k",
    "gmc_report",
    "ground_state",
    "purity",
    "qfi_matrix",
    "reduce_symmetric",
    "rotate_y_half_pi",
    "superradiant_critical_coupling",
    "total_correlations",
    "trace_out_cavity",
    "von_neumann_entropy",
]
