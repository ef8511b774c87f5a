"""Parameter sweeps over the scaled coupling plane and serialization.

Axis conventions follow the Hamiltonian normalization: the lambda axis
is the per-qubit coupling that enters H divided by sqrt(N) (so the
eta = 0 superradiant transition sits at 0.5 for every N), and the eta
axis is the bare qubit-qubit coupling divided by N (so the lam = 0
level crossings sit at -omega_0/(2 m_s + 1)).  CSV files start with the
comment line ``# units=nats couplings=scaled version=<semver>``; empty
fields mean "not computed", never zero.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from io import StringIO

import numpy as np

from . import __version__
from .measures import gmc_report, global_entanglement, qfi_matrix
from .model import ModelParams
from .reductions import purity, trace_out_cavity
from .spectra import DEFAULT_N_MAX_CAP, converged_ground_state

__all__ = [
    "ALL_MEASURES",
    "GridSpec",
    "SweepConfig",
    "SweepRow",
    "NvParams",
    "evaluate_point",
    "run_sweep",
    "sweep_columns",
    "rows_to_csv",
    "rows_to_json",
    "extensivity_scan",
    "extensivity_to_csv",
    "nv_to_model_params",
    "model_params_to_nv",
    "default_workers",
]

ALL_MEASURES = ("gmc", "qfi", "global", "energy")


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError("steps must be >= 1")
        if self.steps > 1 and self.hi < self.lo:
            raise ValueError("need hi >= lo")

    def values(self) -> np.ndarray:
        if self.steps == 1:
            return np.array([self.lo])
        return np.linspace(self.lo, self.hi, self.steps)

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid must be min:max:steps, got {text!r}")
        return cls(float(parts[0]), float(parts[1]), int(parts[2]))


@dataclass(frozen=True)
class SweepConfig:
    n_qubits: int
    lambda_grid: GridSpec
    eta_grid: GridSpec
    omega_c: float = 1.0
    omega_0: float = 1.0
    measures: tuple = ALL_MEASURES
    e_tol: float = 1e-9
    obs_tol: float = 1e-8
    n_max_cap: int = DEFAULT_N_MAX_CAP
    workers: int = 1

    def __post_init__(self):
        if not self.measures:
            raise ValueError("at least one measure required")
        unknown = set(self.measures) - set(ALL_MEASURES)
        if unknown:
            raise ValueError(f"unknown measures: {sorted(unknown)}")


@dataclass
class SweepRow:
    """One evaluated (lambda, eta) grid point.

    Dict-valued fields are keyed by k (or l); None means not computed /
    not applicable and serializes to an empty CSV field.
    """

    lambda_scaled: float
    eta_scaled: float
    n_max_used: int
    converged: bool
    degenerate: bool
    energy: float | None = None
    entropies: dict = field(default_factory=dict)
    higher_than: dict = field(default_factory=dict)
    orders: dict = field(default_factory=dict)
    total: float | None = None
    shares: dict = field(default_factory=dict)
    f_max: float | None = None
    depth: int | None = None
    global_ent: dict = field(default_factory=dict)
    purity_rho_n: float | None = None


def evaluate_point(config: SweepConfig, lam: float, eta_scaled: float) -> SweepRow:
    """Converged ground state plus the requested measures at one point."""
    p = ModelParams(config.omega_c, config.omega_0, lam,
                    eta_scaled * config.n_qubits, config.n_qubits, 0)
    gs = converged_ground_state(p, e_tol=config.e_tol,
                                obs_tol=config.obs_tol,
                                n_max_cap=config.n_max_cap)
    rho_n = trace_out_cavity(gs)
    row = SweepRow(lambda_scaled=lam, eta_scaled=eta_scaled,
                   n_max_used=gs.n_max_used, converged=gs.converged,
                   degenerate=gs.degenerate,
                   purity_rho_n=purity(rho_n))
    if "energy" in config.measures:
        row.energy = gs.energy
    if "gmc" in config.measures:
        rep = gmc_report(rho_n)
        row.entropies = rep.entropies
        row.higher_than = rep.higher_than
        row.orders = rep.orders
        row.total = rep.total
        row.shares = rep.shares
    if "qfi" in config.measures:
        q = qfi_matrix(rho_n)
        row.f_max = q.f_max
        row.depth = q.depth
    if "global" in config.measures:
        row.global_ent = {l: global_entanglement(rho_n, l)
                          for l in range(1, config.n_qubits)}
    _check_row_sum_rule(row)
    return row


def _check_row_sum_rule(row: SweepRow):
    if row.total is None or not row.orders:
        return
    if abs(row.total - sum(row.orders.values())) > 1e-9:
        raise AssertionError(
            f"row sum rule violated at lambda={row.lambda_scaled} "
            f"eta={row.eta_scaled}")


def _worker(args):
    config, idx, lam, eta = args
    return idx, evaluate_point(config, lam, eta)


def run_sweep(config: SweepConfig):
    """All grid points in row-major order (eta outer, lambda inner).

    Results land in preallocated slots keyed by grid index, so output
    order and content are independent of the worker count.
    """
    lams = config.lambda_grid.values()
    etas = config.eta_grid.values()
    tasks = []
    idx = 0
    for eta in etas:
        for lam in lams:
            tasks.append((config, idx, float(lam), float(eta)))
            idx += 1
    rows: list = [None] * len(tasks)
    if config.workers <= 1:
        for t in tasks:
            i, row = _worker(t)
            rows[i] = row
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for i, row in pool.map(_worker, tasks,
                                   chunksize=max(1, len(tasks) // (4 * config.workers))):
                rows[i] = row
    return rows


def sweep_columns(n_qubits: int) -> list[str]:
    cols = ["lambda_over_sqrtN", "eta_over_N", "n_max_used", "converged",
            "degenerate", "energy"]
    cols += [f"S_{k}" for k in range(1, n_qubits + 1)]
    cols += [f"I_higher_{k}" for k in range(1, n_qubits)]
    cols += [f"I_{k}" for k in range(2, n_qubits + 1)]
    cols += ["I1"]
    cols += [f"share_{k}" for k in range(2, n_qubits + 1)]
    cols += ["f_max", "depth"]
    cols += [f"E_G_{l}" for l in range(1, n_qubits)]
    cols += ["purity_rho_N"]
    return cols


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    v = float(x)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return repr(v)


def row_values(row: SweepRow, n_qubits: int) -> list:
    vals = [row.lambda_scaled, row.eta_scaled, row.n_max_used,
            row.converged, row.degenerate, row.energy]
    vals += [row.entropies.get(k) for k in range(1, n_qubits + 1)]
    vals += [row.higher_than.get(k) for k in range(1, n_qubits)]
    vals += [row.orders.get(k) for k in range(2, n_qubits + 1)]
    vals += [row.total]
    vals += [row.shares.get(k) for k in range(2, n_qubits + 1)]
    vals += [row.f_max, row.depth]
    vals += [row.global_ent.get(l) for l in range(1, n_qubits)]
    vals += [row.purity_rho_n]
    return vals


def rows_to_csv(rows, n_qubits: int) -> str:
    buf = StringIO()
    buf.write(f"# units=nats couplings=scaled version={__version__}\n")
    buf.write(",".join(sweep_columns(n_qubits)) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(v) for v in row_values(row, n_qubits)) + "\n")
    return buf.getvalue()


def json_value(v):
    if v is None:
        return None
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    return float(v)


def rows_to_json(rows, n_qubits: int) -> str:
    cols = sweep_columns(n_qubits)
    payload = {
        "units": "nats",
        "couplings": "scaled",
        "version": __version__,
        "rows": [dict(zip(cols, [json_value(v)
                                 for v in row_values(row, n_qubits)]))
                 for row in rows],
    }
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def extensivity_scan(n_list, lambda_grid: GridSpec, omega_c: float = 1.0,
                     omega_0: float = 1.0, e_tol: float = 1e-9,
                     obs_tol: float = 1e-8, n_max_cap: int = DEFAULT_N_MAX_CAP,
                     workers: int = 1):
    """Total correlations vs lambda at eta = 0 for several system sizes.

    Returns (records, inflections): records are (N, lam, I1, I1/N)
    tuples in scan order; inflections maps N to the abscissa of the
    steepest I1 increase (centered finite differences on the grid).
    """
    records = []
    inflections = {}
    for n in n_list:
        config = SweepConfig(n_qubits=int(n), lambda_grid=lambda_grid,
                             eta_grid=GridSpec(0.0, 0.0, 1),
                             omega_c=omega_c, omega_0=omega_0,
                             measures=("gmc",), e_tol=e_tol, obs_tol=obs_tol,
                             n_max_cap=n_max_cap, workers=workers)
        rows = run_sweep(config)
        lams = np.array([r.lambda_scaled for r in rows])
        totals = np.array([r.total for r in rows])
        for lam, tot in zip(lams, totals):
            records.append((int(n), float(lam), float(tot), float(tot / n)))
        inflections[int(n)] = _inflection_abscissa(lams, totals)
    return records, inflections


def _inflection_abscissa(x: np.ndarray, y: np.ndarray) -> float:
    """Abscissa of the steepest increase of y(x) on the grid, refined by
    a three-point parabola through the discrete derivative peak."""
    if len(x) < 3:
        return float(x[int(np.argmax(y))])
    dy = np.gradient(y, x)
    i = int(np.argmax(dy))
    if 0 < i < len(x) - 1:
        x0, x1, x2 = x[i - 1], x[i], x[i + 1]
        d0, d1, d2 = dy[i - 1], dy[i], dy[i + 1]
        denom = (d0 - 2.0 * d1 + d2)
        if denom < 0:
            # vertex of the parabola through the three derivative samples
            return float(x1 + 0.5 * (d0 - d2) / denom * (x1 - x0))
    return float(x[i])


def extensivity_to_csv(records, inflections) -> str:
    buf = StringIO()
    buf.write(f"# units=nats couplings=scaled version={__version__}\n")
    buf.write("N,lambda_over_sqrtN,I1,I1_per_N,inflection_lambda\n")
    for n, lam, total, per_n in records:
        buf.write(f"{n},{_fmt(lam)},{_fmt(total)},{_fmt(per_n)},"
                  f"{_fmt(inflections[n])}\n")
    return buf.getvalue()


@dataclass(frozen=True)
class NvParams:
    """Spin-center / magnon coupling constants.

    g_nu: coupling to the resonant magnon mode; g_eff: magnon-mediated
    Ising coupling |g_mu|^2/omega_mu; omega_nv: qubit level splitting;
    omega_nu: resonant magnon frequency.
    """

    g_nu: float
    g_eff: float
    omega_nv: float
    omega_nu: float

    def __post_init__(self):
        if self.omega_nv <= 0 or self.omega_nu <= 0:
            raise ValueError("frequencies must be positive")


def nv_to_model_params(nv: NvParams, n_qubits: int, n_max: int = 0) -> ModelParams:
    """Identify the magnon model with the cavity model:
    lam = g_nu*sqrt(N), eta = g_eff, omega_0 = omega_nv/2, omega_c = omega_nu."""
    return ModelParams(omega_c=nv.omega_nu, omega_0=nv.omega_nv / 2.0,
                       lam=nv.g_nu * np.sqrt(n_qubits), eta=nv.g_eff,
                       n_qubits=n_qubits, n_max=n_max)


def model_params_to_nv(p: ModelParams) -> NvParams:
    """Inverse of nv_to_model_params (round-trippable)."""
    return NvParams(g_nu=p.lam / np.sqrt(p.n_qubits), g_eff=p.eta,
                    omega_nv=2.0 * p.omega_0, omega_nu=p.omega_c)


def default_workers() -> int:
    env = os.environ.get("DICKE_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1
