"""Command line interface.

Matrices travel as JSON documents ``{"dim": D, "entries": [[[re, im], ...], ...]}``
and state vectors as ``{"dim": D, "entries": [[re, im], ...]}``.  Reports are
JSON on stdout (floats at full double precision, 17 significant digits);
``evolve`` emits CSV.  Exit codes: 0 success, 2 malformed input, 3 symmetry or
metric failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .antilinear import (
    PT_RESIDUAL_TOL,
    AntilinearOperator,
    TimeReversalParams,
    check_exactness,
    check_pt_symmetry,
    unitary_sqrt_of_tau,
)
from .errors import (
    BrokenSymmetryParamsError,
    ComplexSpectrumError,
    DegenerateDirectionError,
    DimensionMismatchError,
    ExceptionalPointError,
    NoPositiveMetricError,
    NonFiniteError,
    NotDiagonalizableError,
    NotPositiveDefiniteError,
    NotPseudoHermitianError,
    NotPTSymmetricError,
    SingularParityError,
    SingularWeightError,
)
from .evolution import EvolutionSpec, norm_trajectory
from .families import (
    GeneralFamilyParams,
    SymmetricFamilyParams,
    general_hamiltonian,
    parity_from_angle,
    reduce_general_to_symmetric,
    symmetric_hamiltonian,
    symmetric_operators,
)
from .linalg import (
    REALITY_RTOL,
    SpectrumClass,
    biorthonormalize,
    eigendecompose,
)
from .metric import (
    InnerProductKind,
    build_charge_conjugation,
    build_eta_plus,
    build_generalized_parity,
    hermitize,
)

# Environment variable overriding the default reality tolerance.
RTOL_ENV_VAR = "PHT_RTOL"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SYMMETRY = 3

# Failures of the mathematical preconditions (broken symmetry, singular or
# indefinite operators) map to exit code 3; malformed documents map to 2.
_SYMMETRY_ERRORS = (
    BrokenSymmetryParamsError,
    ComplexSpectrumError,
    DegenerateDirectionError,
    ExceptionalPointError,
    NoPositiveMetricError,
    NotDiagonalizableError,
    NotPositiveDefiniteError,
    NotPseudoHermitianError,
    NotPTSymmetricError,
    SingularParityError,
    SingularWeightError,
)


class CliInputError(Exception):
    """Malformed command input (bad JSON, wrong shapes, non-finite values)."""


def _entry_pair(value) -> complex:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
    ):
        raise CliInputError(f"expected an [re, im] pair, got {value!r}")
    z = complex(value[0], value[1])
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise CliInputError("non-finite entry in document")
    return z


def parse_matrix_document(obj) -> np.ndarray:
    """Parse ``{"dim": D, "entries": [[[re, im], ...] x D] x D}``."""
    if not isinstance(obj, dict):
        raise CliInputError("matrix document must be a JSON object")
    dim = obj.get("dim")
    entries = obj.get("entries")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise CliInputError(f"invalid dim: {dim!r}")
    if not isinstance(entries, list) or len(entries) != dim:
        raise CliInputError(f"entries must be a list of {dim} rows")
    out = np.empty((dim, dim), dtype=complex)
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != dim:
            raise CliInputError(f"row {i} must hold {dim} [re, im] pairs")
        for j, pair in enumerate(row):
            out[i, j] = _entry_pair(pair)
    return out


def parse_state_document(obj) -> np.ndarray:
    """Parse ``{"dim": D, "entries": [[re, im] x D]}``."""
    if not isinstance(obj, dict):
        raise CliInputError("state document must be a JSON object")
    dim = obj.get("dim")
    entries = obj.get("entries")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise CliInputError(f"invalid dim: {dim!r}")
    if not isinstance(entries, list) or len(entries) != dim:
        raise CliInputError(f"entries must be a list of {dim} pairs")
    return np.array([_entry_pair(pair) for pair in entries])


def matrix_document(matrix: np.ndarray) -> dict:
    m = np.asarray(matrix, dtype=complex)
    return {
        "dim": m.shape[0],
        "entries": [[[z.real, z.imag] for z in row] for row in m],
    }


def state_document(state: np.ndarray) -> dict:
    v = np.asarray(state, dtype=complex)
    return {"dim": v.shape[0], "entries": [[z.real, z.imag] for z in v]}


def _load_document(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliInputError(f"{path} is not valid JSON: {exc}") from exc


def _load_matrix(path: str) -> np.ndarray:
    return parse_matrix_document(_load_document(path))


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def _reality_rtol(args) -> float:
    if args.rtol is not None:
        return args.rtol
    env = os.environ.get(RTOL_ENV_VAR)
    if env is not None:
        try:
            return float(env)
        except ValueError as exc:
            raise CliInputError(f"{RTOL_ENV_VAR} must be a float, got {env!r}") from exc
    return REALITY_RTOL


def _residual_atol(args) -> float:
    return args.atol if args.atol is not None else PT_RESIDUAL_TOL


def _canonical_system(matrix: np.ndarray, reality_rtol: float):
    """Biorthonormalize with the transpose convention when it applies.

    Complex symmetric input with nondegenerate real spectrum gets the
    transpose normalization, under which the emitted metric bundle matches
    the closed-form two-level operators; anything else uses the default
    unit-norm convention.
    """
    scale = float(np.linalg.norm(matrix))
    if np.linalg.norm(matrix - matrix.T) <= 1e-10 * (1.0 + scale):
        try:
            return biorthonormalize(matrix, normalization="transpose", reality_rtol=reality_rtol)
        except ValueError:
            pass  # degenerate or self-orthogonal: fall through
    return biorthonormalize(matrix, normalization="unit", reality_rtol=reality_rtol)


def _pt_operators(args, dim: int):
    parity = _load_matrix(args.parity) if args.parity else np.eye(dim, dtype=complex)
    tau = _load_matrix(args.tau) if args.tau else np.eye(dim, dtype=complex)
    if parity.shape[0] != dim or tau.shape[0] != dim:
        raise CliInputError("parity/tau dimension does not match the Hamiltonian")
    return parity, AntilinearOperator(tau)


def cmd_analyze(args) -> int:
    h = _load_matrix(args.input)
    rtol = _reality_rtol(args)
    atol = _residual_atol(args)
    spectral = eigendecompose(h, reality_rtol=rtol)
    parity, time_reversal = _pt_operators(args, h.shape[0])
    pt_residual = check_pt_symmetry(h, parity, time_reversal)
    pt_symmetric = pt_residual <= atol

    exact = False
    failure_reason = None
    if not pt_symmetric:
        failure_reason = "not_pt_symmetric"
    elif spectral.classification is SpectrumClass.REAL_DIAGONALIZABLE:
        exact = True
    elif spectral.classification is SpectrumClass.NEAR_DEFECTIVE:
        failure_reason = "not_diagonalizable"
    else:
        failure_reason = "complex_eigenvalues"

    report = {
        "dim": h.shape[0],
        "classification": spectral.classification.value,
        "eigenvalues": [[w.real, w.imag] for w in spectral.eigenvalues],
        "eigvec_condition": spectral.eigvec_condition,
        "pt_residual": pt_residual,
        "pt_symmetric": pt_symmetric,
        "exact": exact,
        "failure_reason": failure_reason,
        "metric_available": spectral.classification is SpectrumClass.REAL_DIAGONALIZABLE,
    }
    _emit(report)
    if args.require_exact and not exact:
        return EXIT_SYMMETRY
    return EXIT_OK


def cmd_metric(args) -> int:
    h = _load_matrix(args.input)
    system = _canonical_system(h, _reality_rtol(args))
    metric = build_eta_plus(system)
    _emit(
        {
            "dim": h.shape[0],
            "eta_plus": matrix_document(metric.eta_plus),
            "parity": matrix_document(build_generalized_parity(system)),
            "charge": matrix_document(build_charge_conjugation(system)),
            "rho_plus": matrix_document(metric.rho_plus),
        }
    )
    return EXIT_OK


def cmd_hermitize(args) -> int:
    h = _load_matrix(args.input)
    system = _canonical_system(h, _reality_rtol(args))
    metric = build_eta_plus(system)
    _emit(matrix_document(hermitize(h, metric)))
    return EXIT_OK


def _family_bundle_symmetric(params: SymmetricFamilyParams) -> dict:
    ops = symmetric_operators(params)
    return {
        "eta_plus": matrix_document(ops.eta_plus),
        "parity": matrix_document(ops.parity),
        "charge": matrix_document(ops.charge),
        "rho_plus": matrix_document(ops.rho_plus),
        "hermitian_h": matrix_document(ops.hermitian_h),
    }


def _conjugated_bundle(bundle: dict, u: np.ndarray) -> dict:
    u_inv = u.conj().T
    out = {}
    for key, doc in bundle.items():
        m = parse_matrix_document(doc)
        out[key] = matrix_document(u @ m @ u_inv)
    return out


def cmd_family(args) -> int:
    report: dict = {"kind": args.kind}
    if args.kind == "symmetric":
        params = SymmetricFamilyParams(args.r, args.s, args.t, args.phi)
        report["broken"] = not params.is_exact
        report["hamiltonian"] = matrix_document(symmetric_hamiltonian(params))
        if params.is_exact:
            report.update(_family_bundle_symmetric(params))
    else:
        params = GeneralFamilyParams(args.r, args.s, args.t, args.u, args.phi)
        report["broken"] = not params.is_exact
        h = general_hamiltonian(params)
        bundle = None
        if params.is_exact:
            reduction = reduce_general_to_symmetric(params)
            bundle = _conjugated_bundle(_family_bundle_symmetric(reduction.params), reduction.u1)
        if args.kind == "general":
            report["hamiltonian"] = matrix_document(h)
            if bundle:
                report.update(bundle)
        else:
            tparams = TimeReversalParams(args.gamma, args.xi, args.zeta)
            u_mat = unitary_sqrt_of_tau(tparams)
            report["hamiltonian"] = matrix_document(u_mat @ h @ u_mat.conj().T)
            if bundle:
                report.update(_conjugated_bundle(bundle, u_mat))
            report["u"] = matrix_document(u_mat)
            report["tau"] = matrix_document(u_mat @ u_mat)
            report["pt_parity"] = matrix_document(
                u_mat @ parity_from_angle(params.phi) @ u_mat.conj().T
            )

    if report["broken"] and not args.allow_broken:
        sys.stderr.write(
            "family parameters lie in the broken regime; pass --allow-broken "
            "to emit the Hamiltonian anyway\n"
        )
        return EXIT_SYMMETRY
    _emit(report)
    return EXIT_OK


def cmd_evolve(args) -> int:
    h = _load_matrix(args.input)
    psi0 = parse_state_document(_load_document(args.state))
    try:
        spec = EvolutionSpec(h, psi0, t0=args.t0, t1=args.t1, steps=args.steps)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    kind = args.norm
    if args.norm == "metric":
        # Use the same canonical normalization as `metric`/`hermitize` so the
        # conserved value matches the closed-form bundle for family inputs.
        try:
            system = _canonical_system(h, _reality_rtol(args))
            metric = build_eta_plus(system)
        except (ComplexSpectrumError, NotDiagonalizableError, NotPositiveDefiniteError) as exc:
            raise NoPositiveMetricError(
                "no positive-definite metric exists for this Hamiltonian"
            ) from exc
        kind = InnerProductKind.metric_eta(metric)
    trajectory = norm_trajectory(spec, kind=kind)
    out = sys.stdout
    out.write("t,norm\n")
    for t, n in zip(trajectory.times, trajectory.norms):
        out.write(f"{t:.15g},{n:.15g}\n")
    return EXIT_OK


def cmd_check_pt(args) -> int:
    h = _load_matrix(args.input)
    atol = _residual_atol(args)
    parity, time_reversal = _pt_operators(args, h.shape[0])
    residual = check_pt_symmetry(h, parity, time_reversal)
    report = {
        "dim": h.shape[0],
        "pt_residual": residual,
        "pt_symmetric": residual <= atol,
        "exact": None,
        "failure_reason": None,
    }
    if report["pt_symmetric"]:
        exactness = check_exactness(
            h, parity, time_reversal, pt_tol=atol, reality_rtol=_reality_rtol(args)
        )
        report["exact"] = exactness.exact
        report["failure_reason"] = exactness.failure_reason
    _emit(report)
    if args.require_exact and not report["exact"]:
        return EXIT_SYMMETRY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pht",
        description="Pseudo-Hermitian toolkit: spectra, metrics, hermitization, "
        "two-level families, and norm evolution.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    tol = argparse.ArgumentParser(add_help=False)
    tol.add_argument(
        "--rtol",
        type=float,
        default=None,
        help=f"reality tolerance for spectrum classification "
        f"(default: ${RTOL_ENV_VAR} or {REALITY_RTOL})",
    )
    tol.add_argument(
        "--atol",
        type=float,
        default=None,
        help=f"residual tolerance for symmetry checks (default {PT_RESIDUAL_TOL})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[tol], help="classify a Hamiltonian and its symmetry")
    p.add_argument("input", help="matrix document (JSON)")
    p.add_argument("--parity", help="parity matrix document (default: identity)")
    p.add_argument("--tau", help="time-reversal linear part (default: identity)")
    p.add_argument("--require-exact", action="store_true", help="exit 3 unless the symmetry is exact")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("metric", parents=[tol], help="emit eta_plus, parity, charge, rho_plus")
    p.add_argument("input", help="matrix document (JSON)")
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("hermitize", parents=[tol], help="emit the Hermitian partner rho H rho^-1")
    p.add_argument("input", help="matrix document (JSON)")
    p.set_defaults(func=cmd_hermitize)

    p = sub.add_parser("family", parents=[tol], help="closed-form two-level family bundles")
    p.add_argument("kind", choices=["symmetric", "general", "general-t"])
    p.add_argument("--r", type=float, default=0.0)
    p.add_argument("--s", type=float, default=0.0)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--u", type=float, default=0.0, help="antisymmetric coupling (general kinds)")
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--gamma", type=float, default=0.0, help="time-reversal phase (general-t)")
    p.add_argument("--xi", type=float, default=0.0, help="time-reversal angle (general-t)")
    p.add_argument("--zeta", type=float, default=0.0, help="time-reversal axis angle (general-t)")
    p.add_argument(
        "--allow-broken",
        action="store_true",
        help="emit the Hamiltonian alone instead of failing for broken parameters",
    )
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("evolve", parents=[tol], help="CSV norm trajectory of exp(-iHt) psi0")
    p.add_argument("input", help="matrix document (JSON)")
    p.add_argument("--state", required=True, help="initial state document (JSON)")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--norm", choices=["euclidean", "metric"], default="euclidean")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("check-pt", parents=[tol], help="PT-symmetry residual and exactness")
    p.add_argument("input", help="matrix document (JSON)")
    p.add_argument("--parity", help="parity matrix document (default: identity)")
    p.add_argument("--tau", help="time-reversal linear part (default: identity)")
    p.add_argument("--require-exact", action="store_true", help="exit 3 unless exact")
    p.set_defaults(func=cmd_check_pt)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliInputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (NonFiniteError, DimensionMismatchError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except _SYMMETRY_ERRORS as exc:
        sys.stderr.write(f"error: {exc.__class__.__name__}: {exc}\n")
        return EXIT_SYMMETRY


def entry() -> None:  # console-script hook
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
