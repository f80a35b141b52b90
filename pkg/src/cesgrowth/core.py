"""CES technologies and the auxiliary scalars of the differential system.

Everything here is a pure function of its arguments. Powers are evaluated
in log space so large capital-intensity ratios combined with exponents
like 1/psi - 1 cannot overflow.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, SingularStateError
from .params import LevelState, ModelParams, ReducedState

# Denominator guards of the reduced system.
UV_GAP_FLOOR = 1e-12
R_FLOOR = 1e-14


def powz(base: float, expo: float) -> float:
    """base**expo via exp(expo * log(base)); base must be positive."""
    return math.exp(expo * math.log(base))


def w_of(state: ReducedState) -> float:
    """Effective capital ratio w = (v/u) z = kv / hu."""
    return state.v / state.u * state.z


def tau_of(u: float, v: float) -> float:
    """tau = v(1-u) / (u(1-v))."""
    if not (0.0 < u < 1.0) or not (0.0 < v < 1.0):
        raise ParameterError(f"u, v must be strictly inside (0,1), got u={u}, v={v}")
    return v * (1.0 - u) / (u * (1.0 - v))


def theta_of(alpha1: float, alpha2: float) -> float:
    """theta = alpha1(1-alpha2) / (alpha2(1-alpha1))."""
    if not (0.0 < alpha1 < 1.0) or not (0.0 < alpha2 < 1.0):
        raise ParameterError("distribution parameters must be in (0,1)")
    return alpha1 * (1.0 - alpha2) / (alpha2 * (1.0 - alpha1))


def p1_of(w: float, params: ModelParams) -> float:
    """P1 = alpha1 w^psi1 + 1 - alpha1."""
    return params.alpha1 * powz(w, params.psi1) + 1.0 - params.alpha1


def _p2_exponents(params: ModelParams):
    e_theta = -params.psi2 / (1.0 - params.psi2)
    e_w = params.psi2 * (1.0 - params.psi1) / (1.0 - params.psi2)
    return e_theta, e_w


def p2_of(w: float, params: ModelParams) -> float:
    """P2 = alpha2 theta^{-psi2/(1-psi2)} w^{psi2(1-psi1)/(1-psi2)} + 1 - alpha2."""
    e_theta, e_w = _p2_exponents(params)
    return (
        params.alpha2 * powz(params.theta, e_theta) * powz(w, e_w)
        + 1.0
        - params.alpha2
    )


def y1_of(k: float, h: float, u: float, v: float, params: ModelParams) -> float:
    """Goods output y1 = A1 [alpha1 (kv)^psi1 + (1-alpha1)(hu)^psi1]^{1/psi1}."""
    psi = params.psi1
    inner = params.alpha1 * powz(k * v, psi) + (1.0 - params.alpha1) * powz(h * u, psi)
    return params.A1 * powz(inner, 1.0 / psi)


def y2_of(k: float, h: float, u: float, v: float, params: ModelParams) -> float:
    """Education output y2 = A2 {alpha2 [k(1-v)]^psi2 + (1-alpha2)[h(1-u)]^psi2}^{1/psi2}."""
    psi = params.psi2
    inner = params.alpha2 * powz(k * (1.0 - v), psi) + (1.0 - params.alpha2) * powz(
        h * (1.0 - u), psi
    )
    return params.A2 * powz(inner, 1.0 / psi)


@dataclass(frozen=True)
class AuxBundle:
    """All auxiliary scalars evaluated at one state.

    D  : growth-rate wedge hdot/h - kdot/k - c/k
    P  : BGP gap (zero on the balanced growth path)
    T  : numerator of the share difference; R = (1-psi1)(1-psi2) T
    G1 : (psi1-psi2) u + 1 - psi1, G2 analogous in v
    Q  : P1 P2
    P_eps : alpha1 (eps v - 1) w^psi1 + eps (1-alpha1) v
    H  : w^{-1} P1^{1/psi1 - 1} P_eps (the coefficient of A1/eps in qdot)
    """

    D: float
    P: float
    T: float
    G1: float
    G2: float
    Q: float
    R: float
    P_eps: float
    H: float

    @property
    def singular(self) -> bool:
        """True when R vanished (T = 0), a singular configuration."""
        return abs(self.R) < R_FLOOR


def aux_of(state: ReducedState, params: ModelParams) -> AuxBundle:
    """Evaluate the full auxiliary bundle at a reduced state."""
    return aux_from_wuv(w_of(state), state.u, state.v, params)


def aux_from_wuv(w: float, u: float, v: float, params: ModelParams) -> AuxBundle:
    """Auxiliary bundle from (w, u, v) directly.

    The bundle only involves powers of w (positive) and u, v linearly, so
    it extends smoothly to allocations outside (0, 1); stable-manifold
    construction relies on that.
    """
    psi1, psi2 = params.psi1, params.psi2
    p1 = p1_of(w, params)
    p2 = p2_of(w, params)

    d = (
        params.A2 * (1.0 - u) * powz(p2, 1.0 / psi2)
        - params.A1 * v / w * powz(p1, 1.0 / psi1)
        + params.delta_k
        - params.delta_h
    )
    gap = (
        params.alpha1 * params.A1 * powz(w, psi1 - 1.0) * powz(p1, 1.0 / psi1 - 1.0)
        - (1.0 - params.alpha2) * params.A2 * powz(p2, 1.0 / psi2 - 1.0)
        - (params.delta_k - params.delta_h)
    )
    e_theta, e_w = _p2_exponents(params)
    t = params.alpha1 * (1.0 - params.alpha2) * powz(w, psi1) - params.alpha2 * (
        1.0 - params.alpha1
    ) * powz(params.theta, e_theta) * powz(w, e_w)
    g1 = (psi1 - psi2) * u + 1.0 - psi1
    g2 = (psi1 - psi2) * v + 1.0 - psi1
    p_eps = params.alpha1 * (params.eps * v - 1.0) * powz(w, psi1) + params.eps * (
        1.0 - params.alpha1
    ) * v
    h = powz(p1, 1.0 / psi1 - 1.0) * p_eps / w
    return AuxBundle(
        D=d,
        P=gap,
        T=t,
        G1=g1,
        G2=g2,
        Q=p1 * p2,
        R=(1.0 - psi1) * (1.0 - psi2) * t,
        P_eps=p_eps,
        H=h,
    )


def costate_ratio(w: float, params: ModelParams) -> float:
    """mu/lambda = A1 alpha1 / (A2 alpha2 theta) * P1^{1/psi1-1} / P2^{1/psi2-1}."""
    p1 = p1_of(w, params)
    p2 = p2_of(w, params)
    return (
        params.A1
        * params.alpha1
        / (params.A2 * params.alpha2 * params.theta)
        * powz(p1, 1.0 / params.psi1 - 1.0)
        / powz(p2, 1.0 / params.psi2 - 1.0)
    )


def rhs_full(state: LevelState, params: ModelParams) -> np.ndarray:
    """Time derivatives (kdot, hdot, cdot, udot, vdot) of the level system."""
    k, h, c, u, v = state.k, state.h, state.c, state.u, state.v
    if abs(u - v) < UV_GAP_FLOOR:
        raise SingularStateError(f"u - v = {u - v} too small", state=state)
    z = k / h
    w = v / u * z
    reduced = ReducedState(z=z, q=max(c / k, np.finfo(float).tiny), u=u, v=v)
    bun = aux_of(reduced, params)
    if bun.singular:
        raise SingularStateError(f"R = {bun.R} vanishes at this state", state=state)
    psi1, psi2 = params.psi1, params.psi2
    p1 = p1_of(w, params)
    p2 = p2_of(w, params)
    q = c / k

    k_growth = params.A1 * v / w * powz(p1, 1.0 / psi1) - q - params.delta_k
    h_growth = params.A2 * powz(p2, 1.0 / psi2) * (1.0 - u) - params.delta_h
    c_growth = (
        -(params.rho + params.delta_k) / params.eps
        + params.alpha1
        * params.A1
        * powz(w, psi1 - 1.0)
        * powz(p1, 1.0 / psi1 - 1.0)
        / params.eps
    )
    u_growth = (bun.D + q + bun.Q * bun.G2 * bun.P / bun.R) * (1.0 - u) / (u - v)
    v_growth = (bun.D + q + bun.Q * bun.G1 * bun.P / bun.R) * (1.0 - v) / (u - v)
    return np.array(
        [k * k_growth, h * h_growth, c * c_growth, u * u_growth, v * v_growth]
    )
