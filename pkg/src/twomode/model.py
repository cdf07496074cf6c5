"""Domain types, drift/diffusion matrix builders and environment validation.

All matrices use the phase-space ordering (x, p_x, y, p_y) and hbar = 1.
Types are immutable after construction and every operation is a pure
function, so everything here is safe for unrestricted concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np
from numpy.typing import NDArray

#: 2x2 symplectic matrix.
J = np.array([[0.0, 1.0], [-1.0, 0.0]])
J.flags.writeable = False

#: Absolute eigenvalue floor for the positive-semidefiniteness check, chosen
#: so boundary environments (equalities in the coefficient inequalities) pass.
PSD_TOLERANCE = 1e-10


@dataclass(frozen=True)
class OscillatorParams:
    """Mass and angular frequency of the two identical oscillators."""

    m: float
    omega: float

    def __post_init__(self) -> None:
        for name in ("m", "omega"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")


@dataclass(frozen=True)
class EnvironmentParams:
    """Dissipation constant and the ten real diffusion coefficients.

    The coefficients have units of phase-space second moments per time
    (hbar = 1).  lam may be any finite real at construction time; lam <= 0
    is reported by `validate_environment` rather than rejected here, so
    exploratory sweeps can probe the boundary.
    """

    lam: float
    d_xx: float = 0.0
    d_xpx: float = 0.0
    d_xy: float = 0.0
    d_xpy: float = 0.0
    d_ypx: float = 0.0
    d_pxpx: float = 0.0
    d_yy: float = 0.0
    d_ypy: float = 0.0
    d_pxpy: float = 0.0
    d_pypy: float = 0.0

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not math.isfinite(value):
                raise ValueError(f"{f.name} must be finite, got {value!r}")


class SymmetricEnvironmentParams(EnvironmentParams):
    """Environment whose y-mode noise mirrors the x-mode noise.

    Constructed from the reduced coefficient set; the duplicates are filled
    in as d_yy = d_xx, d_ypy = d_xpx, d_pypy = d_pxpx and d_ypx = d_xpy,
    which makes both reduced one-mode covariance matrices equal and the
    cross-correlation block symmetric.
    """

    def __init__(
        self,
        lam: float,
        d_xx: float = 0.0,
        d_xpx: float = 0.0,
        d_pxpx: float = 0.0,
        d_xy: float = 0.0,
        d_xpy: float = 0.0,
        d_pxpy: float = 0.0,
    ) -> None:
        super().__init__(
            lam=lam,
            d_xx=d_xx,
            d_xpx=d_xpx,
            d_xy=d_xy,
            d_xpy=d_xpy,
            d_ypx=d_xpy,
            d_pxpx=d_pxpx,
            d_yy=d_xx,
            d_ypy=d_xpx,
            d_pxpy=d_pxpy,
            d_pypy=d_pxpx,
        )


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    """2x2 blocks of a two-mode covariance matrix: sigma = [[a, c], [c^T, b]].

    a and b are the reduced one-mode covariance matrices of the x and y
    modes; c carries the cross-mode correlations.
    """

    a: NDArray[np.float64]
    b: NDArray[np.float64]
    c: NDArray[np.float64]

    def reassemble(self) -> NDArray[np.float64]:
        """Rebuild the 4x4 covariance matrix from the blocks."""
        out = np.zeros((4, 4))
        out[:2, :2] = self.a
        out[2:, 2:] = self.b
        out[:2, 2:] = self.c
        out[2:, :2] = self.c.T
        return out


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an environment validation run.

    `failed` lists the violated constraints by name; `min_gram_eigenvalue`
    is filled only in strict mode.
    """

    mode: str
    passed: bool
    failed: tuple[str, ...]
    min_gram_eigenvalue: float | None


def _nearly_equal(a: float, b: float, rtol: float = 1e-12) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1.0)


def is_symmetric_environment(env: EnvironmentParams, rtol: float = 1e-12) -> bool:
    """True when the y-mode coefficients mirror the x-mode ones."""
    return (
        _nearly_equal(env.d_yy, env.d_xx, rtol)
        and _nearly_equal(env.d_ypy, env.d_xpx, rtol)
        and _nearly_equal(env.d_pypy, env.d_pxpx, rtol)
        and _nearly_equal(env.d_ypx, env.d_xpy, rtol)
    )


def build_drift_matrix(
    osc: OscillatorParams, env: EnvironmentParams
) -> NDArray[np.float64]:
    """Drift generator Y of d(sigma)/dt = Y sigma + sigma Y^T + 2 D.

    Block-diagonal with two identical damped-oscillator blocks
    [[-lam, 1/m], [-m omega^2, -lam]]; only lam is used from the environment.
    """
    blk = np.array(
        [[-env.lam, 1.0 / osc.m], [-osc.m * osc.omega**2, -env.lam]]
    )
    out = np.zeros((4, 4))
    out[:2, :2] = blk
    out[2:, 2:] = blk
    return out


def build_diffusion_matrix(env: EnvironmentParams) -> NDArray[np.float64]:
    """Symmetric diffusion matrix D in the (x, p_x, y, p_y) ordering."""
    return np.array(
        [
            [env.d_xx, env.d_xpx, env.d_xy, env.d_xpy],
            [env.d_xpx, env.d_pxpx, env.d_ypx, env.d_pxpy],
            [env.d_xy, env.d_ypx, env.d_yy, env.d_ypy],
            [env.d_xpy, env.d_pxpy, env.d_ypy, env.d_pypy],
        ]
    )


def build_gram_matrix(env: EnvironmentParams) -> NDArray[np.complex128]:
    """Hermitian Gram matrix of the environment coupling vectors (hbar = 1).

    Complete positivity of the dynamical semigroup is equivalent to this
    matrix being positive semidefinite.
    """
    half = 0.5j * env.lam
    return np.array(
        [
            [env.d_xx, -env.d_xpx - half, env.d_xy, -env.d_xpy],
            [-env.d_xpx + half, env.d_pxpx, -env.d_ypx, env.d_pxpy],
            [env.d_xy, -env.d_ypx, env.d_yy, -env.d_ypy - half],
            [-env.d_xpy, env.d_pxpy, -env.d_ypy + half, env.d_pypy],
        ],
        dtype=complex,
    )


# Cauchy-Schwarz constraints on the diffusion coefficients; each entry maps a
# constraint name to its slack (non-negative iff satisfied).
_COEFFICIENT_CONSTRAINTS = (
    ("cs_xx_yy", lambda e: e.d_xx * e.d_yy - e.d_xy**2),
    ("cs_xx_pxpx", lambda e: e.d_xx * e.d_pxpx - e.d_xpx**2 - e.lam**2 / 4.0),
    ("cs_xx_pypy", lambda e: e.d_xx * e.d_pypy - e.d_xpy**2),
    ("cs_yy_pxpx", lambda e: e.d_yy * e.d_pxpx - e.d_ypx**2),
    ("cs_yy_pypy", lambda e: e.d_yy * e.d_pypy - e.d_ypy**2 - e.lam**2 / 4.0),
    ("cs_pxpx_pypy", lambda e: e.d_pxpx * e.d_pypy - e.d_pxpy**2),
)


def validate_environment(
    env: EnvironmentParams, mode: str = "strict"
) -> ValidationReport:
    """Check the environment coefficients against the positivity constraints.

    Lenient mode checks lam > 0 plus the six pairwise Cauchy-Schwarz
    inequalities (e.g. D_xx D_pxpx - D_xpx^2 >= lam^2/4).  Strict mode
    additionally requires the full Gram matrix to be positive semidefinite
    (minimum eigenvalue >= -PSD_TOLERANCE).  Physics violations are reported,
    never raised.
    """
    if mode not in ("strict", "lenient"):
        raise ValueError(f"mode must be 'strict' or 'lenient', got {mode!r}")
    failed: list[str] = []
    if not env.lam > 0.0:
        failed.append("lambda_positive")
    for name, slack in _COEFFICIENT_CONSTRAINTS:
        if slack(env) < 0.0:
            failed.append(name)
    min_eig: float | None = None
    if mode == "strict":
        min_eig = float(np.linalg.eigvalsh(build_gram_matrix(env))[0])
        if min_eig < -PSD_TOLERANCE:
            failed.append("gram_psd")
    return ValidationReport(
        mode=mode, passed=not failed, failed=tuple(failed), min_gram_eigenvalue=min_eig
    )


def is_hurwitz(y: NDArray[np.float64]) -> bool:
    """True iff every eigenvalue of y has strictly negative real part."""
    eigs = np.linalg.eigvals(np.asarray(y, dtype=float))
    return bool(np.max(eigs.real) < 0.0)


def make_vacuum_covariance(osc: OscillatorParams) -> NDArray[np.float64]:
    """Covariance matrix of the product of the two oscillator ground states."""
    q = 1.0 / (2.0 * osc.m * osc.omega)
    p = osc.m * osc.omega / 2.0
    return np.diag([q, p, q, p])


def check_state_covariance(sigma, atol: float = 1e-12) -> NDArray[np.float64]:
    """Validate an input-state covariance matrix: 4x4, symmetric, positive definite.

    Returns the (exactly symmetrized) matrix; raises ValueError otherwise.
    Intermediate results of the dynamics are not funnelled through this check.
    """
    sig = np.asarray(sigma, dtype=float)
    if sig.shape != (4, 4):
        raise ValueError(f"covariance matrix must be 4x4, got shape {sig.shape}")
    if not np.all(np.isfinite(sig)):
        raise ValueError("covariance matrix entries must be finite")
    scale = max(1.0, float(np.abs(sig).max()))
    if float(np.abs(sig - sig.T).max()) > atol * scale:
        raise ValueError("covariance matrix must be symmetric")
    sig = 0.5 * (sig + sig.T)
    if float(np.linalg.eigvalsh(sig)[0]) <= 0.0:
        raise ValueError("covariance matrix must be positive definite")
    return sig
