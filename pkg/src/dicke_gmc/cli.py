"""Command-line driver: single points, grid sweeps, critical-point
tables, extensivity scans, magnon parameter mapping and the brute-force
consistency check.

Exit codes: 0 success, 1 failed check, 2 non-converged result,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys


from . import __version__
from .model import first_order_critical_couplings, superradiant_critical_coupling
from .oracle import default_oracle_points, oracle_check
from .spectra import DEFAULT_N_MAX_CAP
from .sweep import (
    ALL_MEASURES,
    json_value,
    GridSpec,
    NvParams,
    SweepConfig,
    default_workers,
    evaluate_point,
    extensivity_scan,
    extensivity_to_csv,
    model_params_to_nv,
    nv_to_model_params,
    row_values,
    rows_to_csv,
    rows_to_json,
    run_sweep,
    sweep_columns,
)

EX_USAGE = 64
EX_NONCONVERGED = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(p):
    p.add_argument("--N", type=int, required=True, help="number of qubits")
    p.add_argument("--omega-c", type=float, default=1.0)
    p.add_argument("--omega-0", type=float, default=1.0)
    p.add_argument("--e-tol", type=float, default=1e-9)
    p.add_argument("--obs-tol", type=float, default=1e-8)
    p.add_argument("--n-max-cap", type=int, default=DEFAULT_N_MAX_CAP)


def _parse_measures(text):
    measures = tuple(m.strip() for m in text.split(",") if m.strip())
    return measures


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dicke-gmc",
                     description="Interacting-qubit Dicke model ground-state "
                                 "correlation sweeps")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("ground", help="evaluate one (lambda, eta) point")
    _add_common(g)
    g.add_argument("--lambda-scaled", type=float, required=True,
                   help="qubit-cavity coupling on the lambda/sqrt(N) axis")
    g.add_argument("--eta-scaled", type=float, required=True,
                   help="qubit-qubit coupling on the eta/N axis")
    g.add_argument("--measures", type=_parse_measures,
                   default=ALL_MEASURES)

    s = sub.add_parser("sweep", help="grid sweep over the coupling plane")
    _add_common(s)
    s.add_argument("--lambda-grid", type=GridSpec.parse, required=True,
                   metavar="MIN:MAX:STEPS")
    s.add_argument("--eta-grid", type=GridSpec.parse, required=True,
                   metavar="MIN:MAX:STEPS")
    s.add_argument("--measures", type=_parse_measures, default=ALL_MEASURES)
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--out", required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")

    c = sub.add_parser("critical", help="table of critical couplings")
    c.add_argument("--N", type=int, required=True)
    c.add_argument("--omega-c", type=float, default=1.0)
    c.add_argument("--omega-0", type=float, default=1.0)

    e = sub.add_parser("extensivity",
                       help="I1 vs lambda at eta = 0 for several N")
    e.add_argument("--N-list", required=True,
                   help="comma-separated system sizes")
    e.add_argument("--lambda-grid", type=GridSpec.parse, required=True,
                   metavar="MIN:MAX:STEPS")
    e.add_argument("--omega-c", type=float, default=1.0)
    e.add_argument("--omega-0", type=float, default=1.0)
    e.add_argument("--e-tol", type=float, default=1e-9)
    e.add_argument("--obs-tol", type=float, default=1e-8)
    e.add_argument("--n-max-cap", type=int, default=DEFAULT_N_MAX_CAP)
    e.add_argument("--workers", type=int, default=None)
    e.add_argument("--out", required=True)

    n = sub.add_parser("nvmap",
                       help="map spin-center/magnon couplings to model params")
    n.add_argument("--N", type=int, required=True)
    n.add_argument("--g-nu", type=float, required=True)
    n.add_argument("--g-eff", type=float, required=True)
    n.add_argument("--omega-nv", type=float, required=True)
    n.add_argument("--omega-nu", type=float, required=True)

    o = sub.add_parser("oracle-check",
                       help="compare symmetric pipeline against 2^N brute force")
    o.add_argument("--N", type=int, required=True)
    o.add_argument("--n-max", type=int, default=24)
    o.add_argument("--tol", type=float, default=1e-8)

    return parser


def _cmd_ground(args) -> int:
    config = SweepConfig(n_qubits=args.N,
                         lambda_grid=GridSpec(args.lambda_scaled,
                                              args.lambda_scaled, 1),
                         eta_grid=GridSpec(args.eta_scaled, args.eta_scaled, 1),
                         omega_c=args.omega_c, omega_0=args.omega_0,
                         measures=args.measures, e_tol=args.e_tol,
                         obs_tol=args.obs_tol, n_max_cap=args.n_max_cap)
    row = evaluate_point(config, args.lambda_scaled, args.eta_scaled)
    cols = sweep_columns(args.N)
    payload = dict(zip(cols, [json_value(v)
                              for v in row_values(row, args.N)]))
    print(json.dumps(payload, indent=2))
    return 0 if row.converged else EX_NONCONVERGED


def _cmd_sweep(args) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    config = SweepConfig(n_qubits=args.N, lambda_grid=args.lambda_grid,
                         eta_grid=args.eta_grid, omega_c=args.omega_c,
                         omega_0=args.omega_0, measures=args.measures,
                         e_tol=args.e_tol, obs_tol=args.obs_tol,
                         n_max_cap=args.n_max_cap, workers=workers)
    rows = run_sweep(config)
    text = (rows_to_csv(rows, args.N) if args.format == "csv"
            else rows_to_json(rows, args.N))
    with open(args.out, "w") as fh:
        fh.write(text)
    n_bad = sum(1 for r in rows if not r.converged)
    if n_bad:
        print(f"warning: {n_bad}/{len(rows)} points not converged",
              file=sys.stderr)
    return 0


def _cmd_critical(args) -> int:
    print(f"# N={args.N} omega_c={args.omega_c} omega_0={args.omega_0}")
    print("m_s,eta_c_over_N")
    for m_s, eta_c in first_order_critical_couplings(args.N, args.omega_0):
        print(f"{m_s},{eta_c!r}")
    lam_c = superradiant_critical_coupling(args.omega_c, args.omega_0)
    print(f"# second-order reference: lambda_c/sqrt(N) = {lam_c!r}")
    return 0


def _cmd_extensivity(args) -> int:
    n_list = [int(x) for x in args.N_list.split(",") if x.strip()]
    workers = args.workers if args.workers is not None else default_workers()
    records, inflections = extensivity_scan(
        n_list, args.lambda_grid, omega_c=args.omega_c, omega_0=args.omega_0,
        e_tol=args.e_tol, obs_tol=args.obs_tol, n_max_cap=args.n_max_cap,
        workers=workers)
    with open(args.out, "w") as fh:
        fh.write(extensivity_to_csv(records, inflections))
    return 0


def _cmd_nvmap(args) -> int:
    nv = NvParams(g_nu=args.g_nu, g_eff=args.g_eff,
                  omega_nv=args.omega_nv, omega_nu=args.omega_nu)
    p = nv_to_model_params(nv, args.N)
    back = model_params_to_nv(p)
    payload = {
        "omega_c": p.omega_c,
        "omega_0": p.omega_0,
        "lambda": p.lam,
        "eta": p.eta,
        "n_qubits": p.n_qubits,
        "round_trip_ok": all(
            abs(a - b) <= 1e-12 * max(1.0, abs(a)) for a, b in
            [(nv.g_nu, back.g_nu), (nv.g_eff, back.g_eff),
             (nv.omega_nv, back.omega_nv), (nv.omega_nu, back.omega_nu)]),
    }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_oracle_check(args) -> int:
    if args.N > 5:
        print("oracle-check supports N <= 5", file=sys.stderr)
        return EX_USAGE
    mismatches = oracle_check(args.N, default_oracle_points(),
                              n_max=args.n_max, tol=args.tol)
    if not mismatches:
        print(f"oracle-check N={args.N}: "
              f"{len(default_oracle_points())} points pass (tol {args.tol})")
        return 0
    for m in mismatches:
        print(f"MISMATCH at (lambda={m.point[0]}, eta/N={m.point[1]}): "
              f"{m.quantity} deviates by {m.deviation:.3e}")
    return 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "ground": _cmd_ground,
        "sweep": _cmd_sweep,
        "critical": _cmd_critical,
        "extensivity": _cmd_extensivity,
        "nvmap": _cmd_nvmap,
        "oracle-check": _cmd_oracle_check,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
