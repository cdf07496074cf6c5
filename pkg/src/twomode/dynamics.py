"""Covariance propagation and the asymptotic (steady-state) covariance matrix.

The evolution d(sigma)/dt = Y sigma + sigma Y^T + 2 D has the solution
sigma(t) = M(t) (sigma(0) - sigma_inf) M(t)^T + sigma_inf with M(t) = exp(Y t),
provided Y is Hurwitz; sigma_inf solves Y sigma + sigma Y^T = -2 D.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import ConditioningWarning, NonPositiveLambdaError, NotHurwitzError
from .model import (
    EnvironmentParams,
    OscillatorParams,
    is_hurwitz,
    is_symmetric_environment,
)

# sigma_inf entries scale like 1/lambda, so warn well before that blows up.
_CONDITIONING_RATIO = 1e-6


@dataclass(frozen=True, eq=False)
class Propagator:
    """Fundamental solution M(t) = exp(Y t) of the drift part."""

    t: float
    matrix: NDArray[np.float64]


def _drift_parameters(y: NDArray[np.float64]) -> tuple[float, float, float]:
    """Recover (m, omega, lam) from a structured drift matrix.

    Raises ValueError when y is not block-diagonal with two identical
    damped-oscillator blocks.
    """
    y = np.asarray(y, dtype=float)
    if y.shape != (4, 4):
        raise ValueError(f"drift matrix must be 4x4, got shape {y.shape}")
    blk = y[:2, :2]
    scale = max(1.0, float(np.abs(y).max()))
    structured = (
        float(np.abs(y[:2, 2:]).max()) <= 1e-12 * scale
        and float(np.abs(y[2:, :2]).max()) <= 1e-12 * scale
        and float(np.abs(y[2:, 2:] - blk).max()) <= 1e-12 * scale
        and abs(blk[0, 0] - blk[1, 1]) <= 1e-12 * scale
        and blk[0, 1] > 0.0
        and blk[1, 0] < 0.0
    )
    if not structured:
        raise ValueError("drift matrix is not of the two-oscillator damped form")
    m = 1.0 / blk[0, 1]
    lam = -blk[0, 0]
    omega = math.sqrt(-blk[1, 0] * blk[0, 1])
    return m, omega, lam


def matrix_exponential(y: NDArray[np.float64], t: float) -> Propagator:
    """exp(Y t) via the analytic damped-rotation block form.

    Each 2x2 block equals
    exp(-lam t) [[cos(w t), sin(w t)/(m w)], [-m w sin(w t), cos(w t)]].
    """
    if not (math.isfinite(t) and t >= 0.0):
        raise ValueError(f"t must be finite and non-negative, got {t!r}")
    m, omega, lam = _drift_parameters(y)
    decay = math.exp(-lam * t)
    c = math.cos(omega * t)
    s = math.sin(omega * t)
    blk = decay * np.array([[c, s / (m * omega)], [-m * omega * s, c]])
    out = np.zeros((4, 4))
    out[:2, :2] = blk
    out[2:, 2:] = blk
    return Propagator(t=float(t), matrix=out)


def _warn_if_ill_conditioned(decay: float, oscillation: float) -> None:
    if decay < _CONDITIONING_RATIO * oscillation:
        warnings.warn(
            "dissipation is tiny compared to the oscillation frequency; "
            "steady-state entries scale like 1/lambda and lose precision",
            ConditioningWarning,
            stacklevel=3,
        )


def steady_state_lyapunov(
    y: NDArray[np.float64], d: NDArray[np.float64]
) -> NDArray[np.float64]:
    """Solve Y sigma + sigma Y^T = -2 D for the asymptotic covariance matrix.

    The equation is vectorized into a dense 16x16 linear system and solved
    directly; the result is symmetrized.  The fixed tiny dimension makes a
    Bartels-Stewart style solver unnecessary.
    """
    y = np.asarray(y, dtype=float)
    d = np.asarray(d, dtype=float)
    eigs = np.linalg.eigvals(y)
    if not float(np.max(eigs.real)) < 0.0:
        raise NotHurwitzError(
            "drift matrix has an eigenvalue with non-negative real part; "
            "no steady state exists"
        )
    _warn_if_ill_conditioned(-float(np.max(eigs.real)), float(np.max(np.abs(eigs.imag))))
    eye = np.eye(4)
    coefficient = np.kron(eye, y) + np.kron(y, eye)
    sigma = np.linalg.solve(coefficient, -2.0 * d.reshape(-1)).reshape(4, 4)
    return 0.5 * (sigma + sigma.T)


def steady_state_closed_form(
    osc: OscillatorParams, env: EnvironmentParams
) -> NDArray[np.float64]:
    """Asymptotic covariance for a symmetric environment, from the closed forms.

    Requires the y-mode coefficients to mirror the x-mode ones; the
    cross-block entries are

        sigma_xy   = [m^2 (2 lam^2 + w^2) D_xy + 2 m lam D_xpy + D_pxpy]
                     / [2 m^2 lam (lam^2 + w^2)]
        sigma_xpy  = [-m^2 w^2 D_xy + 2 m lam D_xpy + D_pxpy]
                     / [2 m (lam^2 + w^2)]
        sigma_pxpy = [m^2 w^4 D_xy - 2 m w^2 lam D_xpy + (2 lam^2 + w^2) D_pxpy]
                     / [2 lam (lam^2 + w^2)]

    and the one-mode block entries follow from the same expressions with
    (D_xy, D_xpy, D_pxpy) replaced by (D_xx, D_xpx, D_pxpx).
    """
    if not is_symmetric_environment(env):
        raise ValueError(
            "closed-form steady state requires a symmetric environment "
            "(d_yy = d_xx, d_ypy = d_xpx, d_pypy = d_pxpx, d_ypx = d_xpy)"
        )
    if not env.lam > 0.0:
        raise NonPositiveLambdaError(
            f"dissipation constant must be positive, got lam = {env.lam!r}"
        )
    m, w, lam = osc.m, osc.omega, env.lam
    _warn_if_ill_conditioned(lam, w)
    s2 = lam * lam + w * w

    def entries(dq: float, dqp: float, dp: float) -> tuple[float, float, float]:
        qq = (m * m * (2 * lam * lam + w * w) * dq + 2 * m * lam * dqp + dp) / (
            2 * m * m * lam * s2
        )
        qp = (-(m * m * w * w) * dq + 2 * m * lam * dqp + dp) / (2 * m * s2)
        pp = (m * m * w**4 * dq - 2 * m * w * w * lam * dqp + (2 * lam * lam + w * w) * dp) / (
            2 * lam * s2
        )
        return qq, qp, pp

    sxx, sxpx, spxpx = entries(env.d_xx, env.d_xpx, env.d_pxpx)
    sxy, sxpy, spxpy = entries(env.d_xy, env.d_xpy, env.d_pxpy)
    return np.array(
        [
            [sxx, sxpx, sxy, sxpy],
            [sxpx, spxpx, sxpy, spxpy],
            [sxy, sxpy, sxx, sxpx],
            [sxpy, spxpy, sxpx, spxpx],
        ]
    )


def propagate(
    sigma0: NDArray[np.float64],
    sigma_inf: NDArray[np.float64],
    y: NDArray[np.float64],
    t: float,
) -> NDArray[np.float64]:
    """Covariance at time t: M(t) (sigma0 - sigma_inf) M(t)^T + sigma_inf.

    sigma_inf is taken as an argument so one steady-state solve can be
    reused across a whole time grid.
    """
    sigma0 = np.asarray(sigma0, dtype=float)
    sigma_inf = np.asarray(sigma_inf, dtype=float)
    if t == 0.0:
        _drift_parameters(y)
        return 0.5 * (sigma0 + sigma0.T)
    mt = matrix_exponential(y, t).matrix
    out = mt @ (sigma0 - sigma_inf) @ mt.T + sigma_inf
    return 0.5 * (out + out.T)
