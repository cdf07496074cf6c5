"""Separability and entanglement quantification for two-mode Gaussian states.

Simon's PPT criterion decides separability (S >= 0 iff separable), and the
logarithmic negativity E = -1/2 log2[4 f(sigma)] quantifies entanglement for
E > 0.  Closed forms are provided for the matched-noise coefficient class
m^2 w^2 D_xx = D_pxpx, D_xpx = 0, m^2 w^2 D_xy = D_pxpy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import (
    ClassViolationError,
    DivergentNegativityError,
    NegativeRadicandError,
    NonPositiveFError,
    NonPositiveLambdaError,
    UncertaintyViolationError,
)
from .model import (
    J,
    BlockDecomposition,
    EnvironmentParams,
    OscillatorParams,
    is_symmetric_environment,
    validate_environment,
)

#: Radicand values in [-RADICAND_TOLERANCE, 0) are treated as round-off and
#: clamped to zero; anything lower is a hard error.
RADICAND_TOLERANCE = 1e-12

_CLASS_RTOL = 1e-12
_DIVERGENCE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class EntanglementReport:
    """Bundle of separability indicators for one covariance matrix.

    Closed-form fields are None when no oscillator/environment context was
    given or the coefficients fall outside the class the closed form
    assumes; `notes` records why a field is absent.
    """

    det_a: float
    det_b: float
    det_c: float
    s_general: float
    verdict: str
    f_sigma: float | None = None
    e_general: float | None = None
    s_special: float | None = None
    e_closed: float | None = None
    window: tuple[float, float] | None = None
    valid_strict: bool | None = None
    valid_lenient: bool | None = None
    notes: tuple[str, ...] = ()


def block_decompose(sigma: NDArray[np.float64]) -> BlockDecomposition:
    """Split a 4x4 covariance matrix into its one-mode and cross blocks."""
    sig = np.asarray(sigma, dtype=float)
    if sig.shape != (4, 4):
        raise ValueError(f"covariance matrix must be 4x4, got shape {sig.shape}")
    return BlockDecomposition(
        a=sig[:2, :2].copy(), b=sig[2:, 2:].copy(), c=sig[:2, 2:].copy()
    )


def simon_s(blocks: BlockDecomposition) -> float:
    """Simon separability indicator; S >= 0 iff the Gaussian state is separable.

    S = det A det B + (1/4 - |det C|)^2 - Tr[A J C J B J C^T J]
        - (det A + det B)/4.
    """
    a, b, c = blocks.a, blocks.b, blocks.c
    det_a = float(np.linalg.det(a))
    det_b = float(np.linalg.det(b))
    det_c = float(np.linalg.det(c))
    cross = float(np.trace(a @ J @ c @ J @ b @ J @ c.T @ J))
    return det_a * det_b + (0.25 - abs(det_c)) ** 2 - cross - 0.25 * (det_a + det_b)


def _nearly_equal(a: float, b: float, rtol: float = _CLASS_RTOL) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1.0)


def _require_matched_class(
    osc: OscillatorParams,
    env: EnvironmentParams,
    *,
    zero_position_cross: bool = False,
) -> None:
    """Check the matched-noise coefficient class the closed forms assume.

    Momentum noise locked to position noise: m^2 w^2 d_xx = d_pxpx with
    d_xpx = 0, and likewise m^2 w^2 d_xy = d_pxpy for the cross noise.
    With zero_position_cross, d_xy must vanish as well.
    """
    if not is_symmetric_environment(env):
        raise ClassViolationError("environment must have mirrored y-mode coefficients")
    mw2 = (osc.m * osc.omega) ** 2
    if not _nearly_equal(mw2 * env.d_xx, env.d_pxpx):
        raise ClassViolationError(
            f"d_pxpx must equal (m omega)^2 d_xx, got {env.d_pxpx!r} "
            f"vs {mw2 * env.d_xx!r}"
        )
    if not _nearly_equal(env.d_xpx, 0.0):
        raise ClassViolationError(f"d_xpx must vanish, got {env.d_xpx!r}")
    if not _nearly_equal(mw2 * env.d_xy, env.d_pxpy):
        raise ClassViolationError(
            f"d_pxpy must equal (m omega)^2 d_xy, got {env.d_pxpy!r} "
            f"vs {mw2 * env.d_xy!r}"
        )
    if zero_position_cross and not _nearly_equal(env.d_xy, 0.0):
        raise ClassViolationError(f"d_xy must vanish, got {env.d_xy!r}")


def _require_positive_lambda(env: EnvironmentParams) -> None:
    if not env.lam > 0.0:
        raise NonPositiveLambdaError(
            f"dissipation constant must be positive, got lam = {env.lam!r}"
        )


def det_c_closed_form(osc: OscillatorParams, env: EnvironmentParams) -> float:
    """Determinant of the asymptotic cross-correlation block C.

    det C = [(m w^2 D_xy + D_pxpy/m)^2 + 4 lam^2 (D_xy D_pxpy - D_xpy^2)]
            / [4 lam^2 (lam^2 + w^2)].

    det C >= 0 guarantees a separable asymptotic state.
    """
    if not is_symmetric_environment(env):
        raise ClassViolationError("environment must have mirrored y-mode coefficients")
    _require_positive_lambda(env)
    m, w, lam = osc.m, osc.omega, env.lam
    return (
        (m * w * w * env.d_xy + env.d_pxpy / m) ** 2
        + 4 * lam * lam * (env.d_xy * env.d_pxpy - env.d_xpy**2)
    ) / (4 * lam * lam * (lam * lam + w * w))


def simon_s_special(osc: OscillatorParams, env: EnvironmentParams) -> float:
    """Simon indicator evaluated in closed form for the matched-noise class.

    S = [m^2 w^2 (D_xx^2 - D_xy^2)/lam^2 + D_xpy^2/(lam^2 + w^2) - 1/4]^2
        - 4 m^2 w^2 D_xx^2 D_xpy^2 / [lam^2 (lam^2 + w^2)].
    """
    _require_matched_class(osc, env)
    _require_positive_lambda(env)
    m, w, lam = osc.m, osc.omega, env.lam
    s2 = lam * lam + w * w
    head = (
        m * m * w * w * (env.d_xx**2 - env.d_xy**2) / (lam * lam)
        + env.d_xpy**2 / s2
        - 0.25
    )
    return head * head - 4 * m * m * w * w * env.d_xx**2 * env.d_xpy**2 / (lam * lam * s2)


def entanglement_window(
    osc: OscillatorParams, env: EnvironmentParams
) -> tuple[float, float]:
    """Open interval of D_xpy values with an entangled asymptotic state.

    For the matched-noise class with D_xy = 0 and u = m w D_xx / lam >= 1/2
    (the single-mode uncertainty bound), the state is entangled exactly for

        sqrt(lam^2 + w^2) (u - 1/2) < D_xpy < sqrt(lam^2 + w^2) (u + 1/2);

    on the boundary and outside it is separable.
    """
    _require_matched_class(osc, env, zero_position_cross=True)
    _require_positive_lambda(env)
    u = osc.m * osc.omega * env.d_xx / env.lam
    if u < 0.5:
        raise UncertaintyViolationError(
            f"m omega D_xx / lambda = {u!r} violates the uncertainty bound 1/2"
        )
    scale = math.sqrt(env.lam**2 + osc.omega**2)
    return (scale * (u - 0.5), scale * (u + 0.5))


def f_sigma(blocks: BlockDecomposition, det_sigma: float) -> float:
    """Square of the smaller symplectic eigenvalue of the partial transpose.

    f = (det A + det B)/2 - det C
        - sqrt{[(det A + det B)/2 - det C]^2 - det sigma}.
    """
    det_a = float(np.linalg.det(blocks.a))
    det_b = float(np.linalg.det(blocks.b))
    det_c = float(np.linalg.det(blocks.c))
    head = 0.5 * (det_a + det_b) - det_c
    radicand = head * head - det_sigma
    if radicand < -RADICAND_TOLERANCE:
        raise NegativeRadicandError(
            f"radicand {radicand!r} is negative beyond tolerance; "
            "input is not a physical covariance matrix"
        )
    return head - math.sqrt(max(radicand, 0.0))


def log_negativity(sigma: NDArray[np.float64]) -> float:
    """Logarithmic negativity E = -1/2 log2[4 f(sigma)]; E > 0 iff entangled."""
    sig = np.asarray(sigma, dtype=float)
    f = f_sigma(block_decompose(sig), float(np.linalg.det(sig)))
    if f <= 0.0:
        raise NonPositiveFError(f"f(sigma) = {f!r} must be positive")
    return -0.5 * math.log2(4.0 * f)


def log_negativity_closed_form(osc: OscillatorParams, env: EnvironmentParams) -> float:
    """Closed-form negativity for the matched-noise class with D_xy = 0.

    E = -log2[2 |m w D_xx / lam - D_xpy / sqrt(lam^2 + w^2)|]; it depends
    only on the environment coefficients, not on the initial Gaussian state.
    """
    _require_matched_class(osc, env, zero_position_cross=True)
    _require_positive_lambda(env)
    gap = abs(
        osc.m * osc.omega * env.d_xx / env.lam
        - env.d_xpy / math.sqrt(env.lam**2 + osc.omega**2)
    )
    if gap < _DIVERGENCE_TOLERANCE:
        raise DivergentNegativityError(
            "negativity diverges at this coefficient combination; "
            "such environments fail strict validation"
        )
    return -math.log2(2.0 * gap)


def analyze(
    sigma: NDArray[np.float64],
    osc: OscillatorParams | None = None,
    env: EnvironmentParams | None = None,
) -> EntanglementReport:
    """Full separability report for a two-mode covariance matrix.

    With oscillator/environment context the closed-form quantities are added
    where the coefficient class admits them.  Individual failures never abort
    the report; the affected fields stay None and a note explains why.
    """
    sig = np.asarray(sigma, dtype=float)
    if sig.shape != (4, 4):
        raise ValueError(f"covariance matrix must be 4x4, got shape {sig.shape}")
    scale = max(1.0, float(np.abs(sig).max()))
    if float(np.abs(sig - sig.T).max()) > 1e-10 * scale:
        raise ValueError("covariance matrix must be symmetric")
    if (osc is None) != (env is None):
        raise ValueError("osc and env must be provided together")

    blocks = block_decompose(sig)
    det_a = float(np.linalg.det(blocks.a))
    det_b = float(np.linalg.det(blocks.b))
    det_c = float(np.linalg.det(blocks.c))
    s_general = simon_s(blocks)
    verdict = "entangled" if s_general < 0.0 else "separable"

    notes: list[str] = []
    f_value: float | None = None
    e_general: float | None = None
    try:
        f_value = f_sigma(blocks, float(np.linalg.det(sig)))
        if f_value > 0.0:
            e_general = -0.5 * math.log2(4.0 * f_value)
        else:
            notes.append("e_general: f(sigma) <= 0")
    except NegativeRadicandError as exc:
        notes.append(f"f_sigma: {exc}")

    s_special: float | None = None
    e_closed: float | None = None
    window: tuple[float, float] | None = None
    valid_strict: bool | None = None
    valid_lenient: bool | None = None
    if env is not None and osc is not None:
        valid_strict = validate_environment(env, "strict").passed
        valid_lenient = validate_environment(env, "lenient").passed
        try:
            s_special = simon_s_special(osc, env)
        except (ClassViolationError, NonPositiveLambdaError) as exc:
            notes.append(f"s_special: {exc}")
        try:
            e_closed = log_negativity_closed_form(osc, env)
        except (
            ClassViolationError,
            NonPositiveLambdaError,
            DivergentNegativityError,
        ) as exc:
            notes.append(f"e_closed: {exc}")
        try:
            window = entanglement_window(osc, env)
        except (
            ClassViolationError,
            NonPositiveLambdaError,
            UncertaintyViolationError,
        ) as exc:
            notes.append(f"window: {exc}")

    return EntanglementReport(
        det_a=det_a,
        det_b=det_b,
        det_c=det_c,
        s_general=s_general,
        verdict=verdict,
        f_sigma=f_value,
        e_general=e_general,
        s_special=s_special,
        e_closed=e_closed,
        window=window,
        valid_strict=valid_strict,
        valid_lenient=valid_lenient,
        notes=tuple(notes),
    )
