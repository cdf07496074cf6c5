"""End-to-end acceptance checks, one test per criterion.

Each test prints a single PASS/FAIL line (visible with `pytest -s`) and
asserts at the stated tolerance.  Expected values were frozen from
independent evaluation routes: hand-evaluated closed forms, the
partial-transpose symplectic spectrum, and scipy's generic solvers.
"""

import json
import math
import time

import numpy as np
import scipy.linalg

from twomode import (
    OscillatorParams,
    SymmetricEnvironmentParams,
    block_decompose,
    build_diffusion_matrix,
    build_drift_matrix,
    entanglement_window,
    log_negativity,
    log_negativity_closed_form,
    make_vacuum_covariance,
    matrix_exponential,
    propagate,
    simon_s,
    simon_s_special,
    steady_state_closed_form,
    steady_state_lyapunov,
    validate_environment,
)
from twomode.cli import main as cli_main

from support import matched_env, pt_log_negativity, random_symmetric_env, scaled_frobenius

OSC = OscillatorParams(m=1.0, omega=1.0)
REFERENCE_ENV = SymmetricEnvironmentParams(lam=1.0, d_xx=0.6, d_pxpx=0.6, d_xpy=0.3)
REFERENCE_SIGMA = np.array(
    [
        [0.60, 0.00, 0.15, 0.15],
        [0.00, 0.60, 0.15, -0.15],
        [0.15, 0.15, 0.60, 0.00],
        [0.15, -0.15, 0.00, 0.60],
    ]
)


def _criterion(name, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"ACCEPTANCE {name}: {status}" + (f" ({'; '.join(failures)})" if failures else ""))
    assert not failures, f"{name}: {failures}"


def test_criterion_1_steady_state_routes_agree():
    failures = []
    y = build_drift_matrix(OSC, REFERENCE_ENV)
    d = build_diffusion_matrix(REFERENCE_ENV)
    solved = steady_state_lyapunov(y, d)
    closed = steady_state_closed_form(OSC, REFERENCE_ENV)
    if np.abs(solved - closed).max() > 1e-9:
        failures.append(f"route disagreement {np.abs(solved - closed).max():.3e}")
    if np.abs(solved - REFERENCE_SIGMA).max() > 1e-9:
        failures.append(f"entry mismatch {np.abs(solved - REFERENCE_SIGMA).max():.3e}")
    residual = np.abs(y @ solved + solved @ y.T + 2 * d).max()
    if residual > 1e-10:
        failures.append(f"residual {residual:.3e}")

    best = math.inf
    for _ in range(50):
        start = time.perf_counter()
        steady_state_lyapunov(y, d)
        steady_state_closed_form(OSC, REFERENCE_ENV)
        best = min(best, time.perf_counter() - start)
    if best >= 1e-3:
        failures.append(f"runtime {best * 1e3:.3f} ms")
    _criterion("1 steady-state routes", failures)


def test_criterion_2_criterion_equivalence():
    failures = []
    s_general = simon_s(block_decompose(REFERENCE_SIGMA))
    s_closed = simon_s_special(OSC, REFERENCE_ENV)
    for label, value in (("S general", s_general), ("S closed", s_closed)):
        if abs(value - (-0.040775)) > 1e-9:
            failures.append(f"{label} = {value!r}")

    e_general = log_negativity(REFERENCE_SIGMA)
    e_closed = log_negativity_closed_form(OSC, REFERENCE_ENV)
    e_oracle = pt_log_negativity(REFERENCE_SIGMA)
    for label, value in (("E general", e_general), ("E closed", e_closed)):
        if abs(value - 0.3663618) > 1e-6:
            failures.append(f"{label} = {value!r}")
    if abs(e_general - e_closed) > 1e-6:
        failures.append("E routes disagree")
    if abs(e_general - e_oracle) > 1e-6 or abs(e_closed - e_oracle) > 1e-6:
        failures.append("E disagrees with symplectic recomputation")
    _criterion("2 criterion equivalence", failures)


def test_criterion_3_entanglement_window():
    failures = []
    rng = np.random.default_rng(314)
    start = time.perf_counter()
    checked = 0
    for _ in range(1000):
        m, omega, lam = (float(v) for v in rng.uniform(0.5, 2.0, size=3))
        osc = OscillatorParams(m, omega)
        u = float(rng.uniform(0.5, 4.0))
        base = matched_env(m, omega, lam, u, 0.0)
        lo, hi = entanglement_window(osc, base)
        width = hi - lo
        offset = 1e-3 * width
        probes = [(lo + offset, True), (hi - offset, True), (hi + offset, False)]
        if lo - offset >= 0.0:
            probes.append((lo - offset, False))
        for d_xpy, inside in probes:
            env = SymmetricEnvironmentParams(
                lam=lam, d_xx=base.d_xx, d_pxpx=base.d_pxpx, d_xpy=d_xpy
            )
            sigma = steady_state_closed_form(osc, env)
            s = simon_s(block_decompose(sigma))
            e = log_negativity(sigma)
            if inside and not s < 0.0:
                failures.append(f"S = {s!r} not negative inside window")
            if not inside and not s >= 0.0:
                failures.append(f"S = {s!r} negative outside window")
            if (e > 0.0) != (s < 0.0):
                failures.append(f"E/S sign mismatch: E = {e!r}, S = {s!r}")
            checked += 1
    elapsed = time.perf_counter() - start
    if elapsed >= 5.0:
        failures.append(f"runtime {elapsed:.2f} s")
    if checked < 3000:
        failures.append(f"only {checked} samples probed")
    _criterion("3 entanglement window", failures[:5])


def test_criterion_4_ode_residual_and_convergence():
    failures = []
    rng = np.random.default_rng(2718)
    h = 1e-4
    for _ in range(100):
        m, omega = (float(v) for v in rng.uniform(0.5, 2.0, size=2))
        osc = OscillatorParams(m, omega)
        env = random_symmetric_env(rng, lam_range=(0.2, 2.0), coeff_scale=0.8)
        y = build_drift_matrix(osc, env)
        d = build_diffusion_matrix(env)
        sigma_inf = steady_state_lyapunov(y, d)
        sigma0 = make_vacuum_covariance(osc)
        t = float(rng.uniform(h, 5.0))
        derivative = (
            propagate(sigma0, sigma_inf, y, t + h) - propagate(sigma0, sigma_inf, y, t - h)
        ) / (2 * h)
        sig = propagate(sigma0, sigma_inf, y, t)
        residual = np.abs(derivative - (y @ sig + sig @ y.T + 2 * d)).max()
        if residual > 1e-6:
            failures.append(f"ODE residual {residual:.3e}")

    # one-step decay ratio (dimensionless-quadrature Frobenius metric)
    for _ in range(10):
        m, omega, lam = (float(v) for v in rng.uniform(0.5, 2.0, size=3))
        osc = OscillatorParams(m, omega)
        env = matched_env(m, omega, lam, u=0.9, v=0.4)
        y = build_drift_matrix(osc, env)
        sigma_inf = steady_state_closed_form(osc, env)
        sigma0 = make_vacuum_covariance(osc)
        for lam_t in (3.0, 4.0, 5.0, 6.0):
            t = lam_t / lam
            num = scaled_frobenius(
                propagate(sigma0, sigma_inf, y, t + 1.0) - sigma_inf, m, omega
            )
            den = scaled_frobenius(
                propagate(sigma0, sigma_inf, y, t) - sigma_inf, m, omega
            )
            if abs(num / den / math.exp(-2 * lam) - 1.0) > 0.10:
                failures.append(f"decay ratio off at lam*t = {lam_t}")
    _criterion("4 ODE residual and convergence", failures[:5])


def test_criterion_5_boundary_cases():
    failures = []
    vacuum = make_vacuum_covariance(OSC)
    s_vac = simon_s(block_decompose(vacuum))
    e_vac = log_negativity(vacuum)
    if abs(s_vac) > 1e-12:
        failures.append(f"vacuum S = {s_vac!r}")
    if abs(e_vac) > 1e-12:
        failures.append(f"vacuum E = {e_vac!r}")

    uncorrelated = SymmetricEnvironmentParams(lam=1.0, d_xx=0.6, d_pxpx=0.6)
    sigma = steady_state_closed_form(OSC, uncorrelated)
    s_unc = simon_s(block_decompose(sigma))
    e_unc = log_negativity(sigma)
    if not s_unc >= 0.0:
        failures.append("uncorrelated point not separable")
    if abs(s_unc - 0.0121) > 1e-12:
        failures.append(f"S = {s_unc!r} vs 0.0121")
    if abs(e_unc - (-0.263034)) > 1e-6:
        failures.append(f"E = {e_unc!r} vs -0.263034")
    _criterion("5 boundary cases", failures)


def test_criterion_6_validation_correctness():
    failures = []
    boundary = SymmetricEnvironmentParams(lam=0.5, d_xx=0.25, d_pxpx=0.25, d_xpy=0.2)
    lenient = validate_environment(boundary, "lenient")
    strict = validate_environment(boundary, "strict")
    if not lenient.passed:
        failures.append("boundary environment failed lenient validation")
    if strict.passed:
        failures.append("boundary environment passed strict validation")
    if abs(strict.min_gram_eigenvalue - (-0.0702)) > 1e-4:
        failures.append(f"min eigenvalue {strict.min_gram_eigenvalue!r} vs -0.0702")

    reference = validate_environment(REFERENCE_ENV, "strict")
    if not reference.passed:
        failures.append("reference environment failed strict validation")
    if abs(reference.min_gram_eigenvalue - 0.0169) > 1e-4:
        failures.append(f"min eigenvalue {reference.min_gram_eigenvalue!r} vs +0.0169")
    _criterion("6 validation correctness", failures)


def test_criterion_7_matrix_exponential():
    failures = []
    rng = np.random.default_rng(1618)
    for _ in range(50):
        m, omega, lam = (float(v) for v in rng.uniform(0.5, 2.0, size=3))
        y = build_drift_matrix(OscillatorParams(m, omega), SymmetricEnvironmentParams(lam=lam))
        for t in (0.1, 1.0, 10.0):
            analytic = matrix_exponential(y, t).matrix
            generic = scipy.linalg.expm(y * t)
            if np.abs(analytic - generic).max() > 1e-12:
                failures.append(f"expm mismatch at t = {t}")
        s, t = (float(v) for v in rng.uniform(0.0, 10.0, size=2))
        left = matrix_exponential(y, s).matrix @ matrix_exponential(y, t).matrix
        right = matrix_exponential(y, s + t).matrix
        if np.abs(left - right).max() > 1e-10:
            failures.append("semigroup violation")
    _criterion("7 matrix exponential", failures[:5])


def test_criterion_8_sweep_surface(tmp_path):
    failures = []
    config = {
        "oscillator": {"m": 1.0, "omega": 1.0},
        "environment": {"lambda": 1.0},
        "validation": "strict",
        "sweep": {},
    }
    cfg_path = tmp_path / "sweep.json"
    cfg_path.write_text(json.dumps(config))
    out_path = tmp_path / "sweep.csv"
    code = cli_main(
        ["sweep", "--config", str(cfg_path), "--output", str(out_path)]
    )
    if code != 0:
        failures.append(f"sweep exited {code}")
    lines = [l for l in out_path.read_text().splitlines() if not l.startswith("#")]
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:]]

    groups: dict[float, list[float]] = {}
    groups_general: dict[float, list[float]] = {}
    for row in rows:
        if row["valid_strict"] != "true":
            continue
        if not row["E_general"] or not row["E_closed"]:
            failures.append("valid point with empty negativity column")
            continue
        e_general = float(row["E_general"])
        e_closed = float(row["E_closed"])
        if abs(e_general - e_closed) > 1e-8:
            failures.append("negativity routes disagree on valid point")
        distance = round(abs(float(row["axis1"]) - float(row["axis2"])), 10)
        groups.setdefault(distance, []).append(e_closed)
        groups_general.setdefault(distance, []).append(e_general)

    if len(groups) < 5:
        failures.append(f"too few distance groups ({len(groups)})")
    for distance, values in groups.items():
        if max(values) - min(values) > 1e-12:
            failures.append(f"E not a function of |axis1-axis2| at d = {distance}")
    for distance, values in groups_general.items():
        # the determinant route loses ~1e-8 at the degenerate det C = 0 points
        if max(values) - min(values) > 1e-7:
            failures.append(f"E_general spread too wide at d = {distance}")
    ordered = sorted(groups)
    medians = [float(np.median(groups[d])) for d in ordered]
    for previous, current in zip(medians, medians[1:]):
        if not current < previous:
            failures.append("E not strictly decreasing in |axis1-axis2|")
            break
    _criterion("8 sweep surface", failures[:5])
