"""Reduced 4-D dynamics, Jacobian, eigenvalues and saddle-path classification."""

from dataclasses import dataclass

import numpy as np

from .core import R_FLOOR, aux_from_wuv
from .errors import NoConvergenceError, ParameterError, SingularStateError
from .params import ModelParams, ReducedState
from .steady import SteadyState, steady_state

# Eigenvalues this close to zero (real part) count as structurally zero.
TOL_ZERO = 1e-3

UV_GAP_FLOOR = 1e-12


def rhs_reduced(state: ReducedState, params: ModelParams) -> np.ndarray:
    """Time derivatives (zdot, qdot, udot, vdot) of the stationary coordinates."""
    return rhs_reduced_values(state.z, state.q, state.u, state.v, params)


def rhs_reduced_values(
    z: float, q: float, u: float, v: float, params: ModelParams
) -> np.ndarray:
    """rhs_reduced on raw coordinates, without the (0,1) box restriction.

    The reduced equations only involve powers of w = (v/u) z and the
    allocations linearly, so they extend smoothly past u = 1 or v = 1;
    the stable manifold can traverse that region.
    """
    if abs(u - v) < UV_GAP_FLOOR:
        raise SingularStateError(f"u - v = {u - v} too small", state=(z, q, u, v))
    if u == 0.0 or v / u * z <= 0.0:
        raise SingularStateError(f"w = (v/u) z not positive at u={u}, v={v}, z={z}",
                                 state=(z, q, u, v))
    bun = aux_from_wuv(v / u * z, u, v, params)
    if abs(bun.R) < R_FLOOR:
        raise SingularStateError(f"R = {bun.R} vanishes", state=(z, q, u, v))

    zdot = -(bun.D + q) * z
    qdot = (
        q
        - params.A1 * bun.H / params.eps
        - (params.rho - (params.eps - 1.0) * params.delta_k) / params.eps
    ) * q
    udot = (bun.D + q + bun.G2 * bun.Q * bun.P / bun.R) * u * (1.0 - u) / (u - v)
    vdot = (bun.D + q + bun.G1 * bun.Q * bun.P / bun.R) * v * (1.0 - v) / (u - v)
    return np.array([zdot, qdot, udot, vdot])


def _rhs_array(x: np.ndarray, params: ModelParams) -> np.ndarray:
    return rhs_reduced_values(x[0], x[1], x[2], x[3], params)


def jacobian_fd(
    state: ReducedState, params: ModelParams, step: float | None = None
) -> np.ndarray:
    """Central-difference Jacobian of rhs_reduced.

    Per-coordinate step h_i = step * max(1, |x_i|), default step 1e-6.
    If a probe point is singular the step is shrunk once before failing.
    """
    if step is not None and step <= 0.0:
        raise ParameterError(f"step must be positive, got {step}")
    base = 1e-6 if step is None else step
    x = state.as_array()
    jac = np.empty((4, 4))
    for i in range(4):
        h = base * max(1.0, abs(x[i]))
        for attempt in range(2):
            xp, xm = x.copy(), x.copy()
            xp[i] += h
            xm[i] -= h
            try:
                jac[:, i] = (_rhs_array(xp, params) - _rhs_array(xm, params)) / (2 * h)
                break
            except SingularStateError:
                if attempt == 1:
                    raise
                h /= 10.0
    return jac


def eigen4(matrix) -> np.ndarray:
    """Eigenvalues of a real 4x4 matrix, sorted by (real, imag) ascending.

    Backed by LAPACK's Hessenberg-reduction + shifted-QR driver; a failed
    iteration surfaces as NoConvergenceError.
    """
    m = np.asarray(matrix, dtype=float)
    if m.shape != (4, 4):
        raise ParameterError(f"expected a 4x4 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ParameterError("matrix entries must be finite")
    try:
        ev = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigenvalue iteration failed: {exc}") from exc
    order = np.lexsort((ev.imag, ev.real))
    return ev[order]


@dataclass(frozen=True)
class StabilityReport:
    """Jacobian, spectrum and classification at the steady state."""

    steady: SteadyState
    jacobian: np.ndarray
    eigenvalues: np.ndarray
    n_stable: int
    n_zero: int
    classification: str


def classify(eigenvalues: np.ndarray, tol_zero: float = TOL_ZERO) -> tuple[int, int, str]:
    re = np.real(eigenvalues)
    n_stable = int(np.sum(re < -tol_zero))
    n_zero = int(np.sum(np.abs(re) <= tol_zero))
    if n_stable == 1:
        label = "saddle_path"
    elif n_stable == len(re):
        label = "sink"
    elif n_stable == 0:
        label = "source"
    else:
        label = "degenerate"
    return n_stable, n_zero, label


def stability_report(
    params: ModelParams, tol_zero: float = TOL_ZERO
) -> StabilityReport:
    """Solve the BGP, linearize around it and classify the local dynamics."""
    ss = steady_state(params)
    state = ReducedState(z=ss.z_star, q=ss.q_star, u=ss.u_star, v=ss.v_star)
    jac = jacobian_fd(state, params)
    ev = eigen4(jac)
    n_stable, n_zero, label = classify(ev, tol_zero)
    return StabilityReport(
        steady=ss,
        jacobian=jac,
        eigenvalues=ev,
        n_stable=n_stable,
        n_zero=n_zero,
        classification=label,
    )
