"""Command-line front end.

Subcommands: `validate` (environment positivity checks), `steady-state`
(asymptotic covariance plus entanglement report), `evolve` (covariance
trace on a time grid) and `sweep` (two-coefficient grid emitting plot
data).  Configuration is a JSON document; output is CSV with a `#`
metadata header, or JSON behind --format.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .dynamics import propagate, steady_state_closed_form, steady_state_lyapunov
from .entanglement import (
    analyze,
    block_decompose,
    log_negativity,
    log_negativity_closed_form,
    simon_s,
    simon_s_special,
)
from .errors import (
    ClassViolationError,
    DivergentNegativityError,
    NegativeRadicandError,
    NonPositiveFError,
    NonPositiveLambdaError,
    NotHurwitzError,
    TwoModeError,
)
from .model import (
    EnvironmentParams,
    OscillatorParams,
    SymmetricEnvironmentParams,
    build_diffusion_matrix,
    build_drift_matrix,
    check_state_covariance,
    is_hurwitz,
    is_symmetric_environment,
    make_vacuum_covariance,
    validate_environment,
)


class ConfigError(Exception):
    """Malformed configuration input (usage error, exit code 1)."""


# JSON coefficient key -> EnvironmentParams field.
_ENV_KEYS = {
    "lambda": "lam",
    "D_xx": "d_xx",
    "D_xpx": "d_xpx",
    "D_xy": "d_xy",
    "D_xpy": "d_xpy",
    "D_ypx": "d_ypx",
    "D_pxpx": "d_pxpx",
    "D_yy": "d_yy",
    "D_ypy": "d_ypy",
    "D_pxpy": "d_pxpy",
    "D_pypy": "d_pypy",
}
_Y_DUPLICATE_KEYS = ("D_ypx", "D_yy", "D_ypy", "D_pypy")
_REDUCED_KEYS = ("D_xx", "D_xpx", "D_pxpx", "D_xy", "D_xpy", "D_pxpy")
_SWEEPABLE_KEYS = frozenset(_REDUCED_KEYS)

_DEFAULT_AXIS1 = ("D_xx", 0.5, 1.5, 11)
_DEFAULT_AXIS2 = ("D_xpy", 0.0, 2.0, 21)

_SIGMA_COLUMNS = (
    "sigma_xx",
    "sigma_xpx",
    "sigma_xy",
    "sigma_xpy",
    "sigma_pxpx",
    "sigma_ypx",
    "sigma_pxpy",
    "sigma_yy",
    "sigma_ypy",
    "sigma_pypy",
)
_UPPER_INDICES = (
    (0, 0), (0, 1), (0, 2), (0, 3),
    (1, 1), (1, 2), (1, 3),
    (2, 2), (2, 3),
    (3, 3),
)

_SWEEP_COLUMNS = (
    "axis1",
    "axis2",
    "D_xx",
    "D_xpy",
    "valid_strict",
    "valid_lenient",
    "S_general",
    "S_special",
    "E_general",
    "E_closed",
    "verdict",
)


@dataclass(frozen=True)
class TimeGrid:
    t_start: float
    t_end: float
    n_points: int


@dataclass(frozen=True)
class AxisSpec:
    coefficient: str
    start: float
    stop: float
    count: int


@dataclass(frozen=True)
class SweepSpec:
    axis1: AxisSpec
    axis2: AxisSpec
    scaling: str


@dataclass(frozen=True)
class RunConfig:
    oscillator: OscillatorParams
    environment: EnvironmentParams
    initial_state: str | tuple[tuple[float, ...], ...]
    validation: str
    time_grid: TimeGrid | None
    sweep: SweepSpec | None


def _require_mapping(obj, where: str) -> dict:
    if not isinstance(obj, dict):
        raise ConfigError(f"{where}: expected an object")
    return obj


def _reject_unknown(obj: dict, allowed, where: str) -> None:
    unknown = sorted(set(obj) - set(allowed))
    if unknown:
        raise ConfigError(f"{where}: unknown key(s) {', '.join(unknown)}")


def _get_number(obj: dict, key: str, where: str, default=None) -> float:
    if key not in obj:
        if default is None:
            raise ConfigError(f"{where}: missing required key '{key}'")
        return default
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}.{key}: expected a number, got {value!r}")
    return float(value)


def _get_int(obj: dict, key: str, where: str, default=None) -> int:
    if key not in obj:
        if default is None:
            raise ConfigError(f"{where}: missing required key '{key}'")
        return default
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where}.{key}: expected an integer, got {value!r}")
    return value


def _parse_environment(obj: dict) -> EnvironmentParams:
    obj = _require_mapping(obj, "environment")
    _reject_unknown(obj, _ENV_KEYS, "environment")
    lam = _get_number(obj, "lambda", "environment")
    present_dup = [k for k in _Y_DUPLICATE_KEYS if k in obj]
    if not present_dup:
        values = {
            _ENV_KEYS[k]: _get_number(obj, k, "environment", default=0.0)
            for k in _REDUCED_KEYS
        }
        return SymmetricEnvironmentParams(lam=lam, **values)
    if len(present_dup) != len(_Y_DUPLICATE_KEYS):
        missing = sorted(set(_Y_DUPLICATE_KEYS) - set(present_dup))
        raise ConfigError(
            "environment: provide all of "
            f"{', '.join(_Y_DUPLICATE_KEYS)} or none (missing {', '.join(missing)})"
        )
    values = {
        field: _get_number(obj, key, "environment", default=0.0)
        for key, field in _ENV_KEYS.items()
        if key != "lambda"
    }
    return EnvironmentParams(lam=lam, **values)


def _parse_initial_state(value) -> str | tuple[tuple[float, ...], ...]:
    if value == "vacuum":
        return "vacuum"
    if isinstance(value, list):
        if len(value) != 4 or any(
            not isinstance(row, list) or len(row) != 4 for row in value
        ):
            raise ConfigError("initial_state: matrix must be 4x4 (row-major)")
        rows = []
        for row in value:
            for entry in row:
                if isinstance(entry, bool) or not isinstance(entry, (int, float)):
                    raise ConfigError(
                        f"initial_state: expected numeric entries, got {entry!r}"
                    )
            rows.append(tuple(float(entry) for entry in row))
        return tuple(rows)
    raise ConfigError("initial_state: expected \"vacuum\" or a 4x4 array")


def _parse_time_grid(obj: dict) -> TimeGrid:
    obj = _require_mapping(obj, "time_grid")
    _reject_unknown(obj, ("t_start", "t_end", "n_points"), "time_grid")
    t_start = _get_number(obj, "t_start", "time_grid")
    t_end = _get_number(obj, "t_end", "time_grid")
    n_points = _get_int(obj, "n_points", "time_grid")
    if not (math.isfinite(t_start) and t_start >= 0.0):
        raise ConfigError(f"time_grid.t_start: must be >= 0, got {t_start!r}")
    if not (math.isfinite(t_end) and t_end > t_start):
        raise ConfigError(f"time_grid.t_end: must exceed t_start, got {t_end!r}")
    if n_points < 2:
        raise ConfigError(f"time_grid.n_points: must be >= 2, got {n_points!r}")
    return TimeGrid(t_start=t_start, t_end=t_end, n_points=n_points)


def _parse_axis(obj, default: tuple, where: str) -> AxisSpec:
    if obj is None:
        return AxisSpec(*default)
    obj = _require_mapping(obj, where)
    _reject_unknown(obj, ("coefficient", "min", "max", "n"), where)
    coefficient = obj.get("coefficient", default[0])
    if coefficient not in _ENV_KEYS or coefficient == "lambda":
        raise ConfigError(f"{where}.coefficient: unknown coefficient {coefficient!r}")
    start = _get_number(obj, "min", where, default=default[1])
    stop = _get_number(obj, "max", where, default=default[2])
    count = _get_int(obj, "n", where, default=default[3])
    if not (math.isfinite(start) and math.isfinite(stop) and start < stop):
        raise ConfigError(f"{where}: need finite min < max, got [{start!r}, {stop!r}]")
    if count < 2:
        raise ConfigError(f"{where}.n: must be >= 2, got {count!r}")
    return AxisSpec(coefficient=coefficient, start=start, stop=stop, count=count)


def _parse_sweep(obj: dict) -> SweepSpec:
    obj = _require_mapping(obj, "sweep")
    _reject_unknown(obj, ("axis1", "axis2", "scaling"), "sweep")
    scaling = obj.get("scaling", "scaled")
    if scaling not in ("raw", "scaled"):
        raise ConfigError(f"sweep.scaling: expected 'raw' or 'scaled', got {scaling!r}")
    axis1 = _parse_axis(obj.get("axis1"), _DEFAULT_AXIS1, "sweep.axis1")
    axis2 = _parse_axis(obj.get("axis2"), _DEFAULT_AXIS2, "sweep.axis2")
    return SweepSpec(axis1=axis1, axis2=axis2, scaling=scaling)


def parse_config(data: dict) -> RunConfig:
    """Build a RunConfig from a decoded JSON document."""
    data = _require_mapping(data, "config")
    _reject_unknown(
        data,
        ("oscillator", "environment", "initial_state", "validation", "time_grid", "sweep"),
        "config",
    )
    osc_obj = _require_mapping(data.get("oscillator"), "oscillator")
    _reject_unknown(osc_obj, ("m", "omega"), "oscillator")
    try:
        osc = OscillatorParams(
            m=_get_number(osc_obj, "m", "oscillator"),
            omega=_get_number(osc_obj, "omega", "oscillator"),
        )
    except ValueError as exc:
        raise ConfigError(f"oscillator: {exc}") from exc
    if "environment" not in data:
        raise ConfigError("config: missing required key 'environment'")
    try:
        env = _parse_environment(data["environment"])
    except ValueError as exc:
        raise ConfigError(f"environment: {exc}") from exc
    initial_state = _parse_initial_state(data.get("initial_state", "vacuum"))
    validation = data.get("validation", "strict")
    if validation not in ("strict", "lenient"):
        raise ConfigError(
            f"validation: expected 'strict' or 'lenient', got {validation!r}"
        )
    time_grid = _parse_time_grid(data["time_grid"]) if "time_grid" in data else None
    sweep = _parse_sweep(data["sweep"]) if "sweep" in data else None
    return RunConfig(
        oscillator=osc,
        environment=env,
        initial_state=initial_state,
        validation=validation,
        time_grid=time_grid,
        sweep=sweep,
    )


def load_config(path: str) -> RunConfig:
    """Read and parse a JSON configuration file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"invalid JSON in {path!r} at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}"
        ) from exc
    return parse_config(data)


def config_to_dict(cfg: RunConfig) -> dict:
    """Canonical JSON-serializable echo; parse_config inverts it exactly."""
    env = cfg.environment
    env_obj: dict = {"lambda": env.lam}
    if isinstance(env, SymmetricEnvironmentParams):
        keys = _REDUCED_KEYS
    else:
        keys = tuple(k for k in _ENV_KEYS if k != "lambda")
    for key in keys:
        env_obj[key] = getattr(env, _ENV_KEYS[key])
    out: dict = {
        "oscillator": {"m": cfg.oscillator.m, "omega": cfg.oscillator.omega},
        "environment": env_obj,
        "initial_state": (
            cfg.initial_state
            if cfg.initial_state == "vacuum"
            else [list(row) for row in cfg.initial_state]
        ),
        "validation": cfg.validation,
    }
    if cfg.time_grid is not None:
        out["time_grid"] = {
            "t_start": cfg.time_grid.t_start,
            "t_end": cfg.time_grid.t_end,
            "n_points": cfg.time_grid.n_points,
        }
    if cfg.sweep is not None:
        out["sweep"] = {
            "axis1": _axis_to_dict(cfg.sweep.axis1),
            "axis2": _axis_to_dict(cfg.sweep.axis2),
            "scaling": cfg.sweep.scaling,
        }
    return out


def _axis_to_dict(axis: AxisSpec) -> dict:
    return {
        "coefficient": axis.coefficient,
        "min": axis.start,
        "max": axis.stop,
        "n": axis.count,
    }


def _fmt(value) -> str:
    """Format one CSV field; 17 significant digits keep doubles round-trip safe."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    number = float(value)
    if number == 0.0:
        number = 0.0  # avoid emitting "-0"
    return format(number, ".17g")


def _metadata_lines(command: str, cfg: RunConfig) -> list[str]:
    echo = json.dumps(config_to_dict(cfg), sort_keys=True, separators=(",", ":"))
    return [
        f"# twomode {command}",
        f"# version: {__version__}",
        f"# config: {echo}",
        f"# validation: {cfg.validation}",
    ]


def _write_output(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _upper_entries(sigma: np.ndarray) -> list[float]:
    return [float(sigma[i, j]) for i, j in _UPPER_INDICES]


def _report_payload(report) -> dict:
    return {
        "det_a": report.det_a,
        "det_b": report.det_b,
        "det_c": report.det_c,
        "s_general": report.s_general,
        "s_special": report.s_special,
        "f_sigma": report.f_sigma,
        "e_general": report.e_general,
        "e_closed": report.e_closed,
        "window": list(report.window) if report.window is not None else None,
        "verdict": report.verdict,
        "valid_strict": report.valid_strict,
        "valid_lenient": report.valid_lenient,
        "notes": list(report.notes),
    }


def cmd_validate(cfg: RunConfig, args) -> int:
    report = validate_environment(cfg.environment, cfg.validation)
    if args.format == "json":
        payload = {
            "command": "validate",
            "version": __version__,
            "config": config_to_dict(cfg),
            "report": {
                "mode": report.mode,
                "passed": report.passed,
                "failed": list(report.failed),
                "min_gram_eigenvalue": report.min_gram_eigenvalue,
            },
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = _metadata_lines("validate", cfg)
        lines.append(f"mode: {report.mode}")
        lines.append(f"passed: {'true' if report.passed else 'false'}")
        lines.append(f"failed: {','.join(report.failed)}")
        if report.min_gram_eigenvalue is not None:
            lines.append(f"min_gram_eigenvalue: {_fmt(report.min_gram_eigenvalue)}")
        _write_output("\n".join(lines) + "\n", args.output)
    return 0 if report.passed else 2


def cmd_steady_state(cfg: RunConfig, args) -> int:
    osc, env = cfg.oscillator, cfg.environment
    y = build_drift_matrix(osc, env)
    d = build_diffusion_matrix(env)
    sigma = steady_state_lyapunov(y, d)
    sigma_closed = None
    max_diff = None
    if is_symmetric_environment(env):
        sigma_closed = steady_state_closed_form(osc, env)
        max_diff = float(np.abs(sigma - sigma_closed).max())
    report = analyze(sigma, osc, env)
    if args.format == "json":
        payload = {
            "command": "steady-state",
            "version": __version__,
            "config": config_to_dict(cfg),
            "sigma_infinity": sigma.tolist(),
            "sigma_infinity_closed_form": (
                sigma_closed.tolist() if sigma_closed is not None else None
            ),
            "closed_form_max_diff": max_diff,
            "report": _report_payload(report),
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        columns = (
            list(_SIGMA_COLUMNS)
            + [f"cf_{name}" for name in _SIGMA_COLUMNS]
            + [
                "closed_form_max_diff",
                "det_a",
                "det_b",
                "det_c",
                "S_general",
                "S_special",
                "f_sigma",
                "E_general",
                "E_closed",
                "verdict",
                "valid_strict",
                "valid_lenient",
            ]
        )
        closed_entries = (
            _upper_entries(sigma_closed) if sigma_closed is not None else [None] * 10
        )
        row = _upper_entries(sigma) + closed_entries + [
            max_diff,
            report.det_a,
            report.det_b,
            report.det_c,
            report.s_general,
            report.s_special,
            report.f_sigma,
            report.e_general,
            report.e_closed,
            report.verdict,
            report.valid_strict,
            report.valid_lenient,
        ]
        lines = _metadata_lines("steady-state", cfg)
        lines.append(",".join(columns))
        lines.append(",".join(v if isinstance(v, str) else _fmt(v) for v in row))
        _write_output("\n".join(lines) + "\n", args.output)
    return 0


def _initial_covariance(cfg: RunConfig) -> np.ndarray:
    if cfg.initial_state == "vacuum":
        return make_vacuum_covariance(cfg.oscillator)
    try:
        return check_state_covariance(np.array(cfg.initial_state, dtype=float))
    except ValueError as exc:
        raise TwoModeError(f"initial_state: {exc}") from exc


def cmd_evolve(cfg: RunConfig, args) -> int:
    if cfg.time_grid is None:
        raise ConfigError("evolve requires a time_grid section in the config")
    osc, env = cfg.oscillator, cfg.environment
    y = build_drift_matrix(osc, env)
    d = build_diffusion_matrix(env)
    if not is_hurwitz(y):
        raise NotHurwitzError(
            "drift matrix is not Hurwitz (lambda <= 0); no asymptotic state"
        )
    sigma_inf = steady_state_lyapunov(y, d)
    sigma0 = _initial_covariance(cfg)
    grid = np.linspace(cfg.time_grid.t_start, cfg.time_grid.t_end, cfg.time_grid.n_points)
    rows = []
    for t in grid:
        sig = propagate(sigma0, sigma_inf, y, float(t))
        s_value = simon_s(block_decompose(sig))
        try:
            e_value = log_negativity(sig)
        except (NonPositiveFError, NegativeRadicandError):
            e_value = None
        deviation = float(np.abs(sig - sigma_inf).max())
        rows.append([float(t)] + _upper_entries(sig) + [s_value, e_value, deviation])
    columns = ["t"] + list(_SIGMA_COLUMNS) + ["S_general", "E_general", "max_abs_dev"]
    if args.format == "json":
        payload = {
            "command": "evolve",
            "version": __version__,
            "config": config_to_dict(cfg),
            "columns": columns,
            "rows": rows,
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = _metadata_lines("evolve", cfg)
        lines.append(",".join(columns))
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        _write_output("\n".join(lines) + "\n", args.output)
    return 0


def _evaluate_sweep_point(task) -> tuple:
    osc, env, a1, a2 = task
    valid_strict = validate_environment(env, "strict").passed
    valid_lenient = validate_environment(env, "lenient").passed
    sigma_inf = steady_state_closed_form(osc, env)
    s_general = simon_s(block_decompose(sigma_inf))
    try:
        s_special = simon_s_special(osc, env)
    except ClassViolationError:
        s_special = None
    # Below the single-mode uncertainty bound the asymptotic state is
    # unphysical, so the negativity columns are left empty.
    u = osc.m * osc.omega * env.d_xx / env.lam
    gated = s_special is not None and abs(env.d_xy) <= 1e-12 and u < 0.5
    e_general = None
    e_closed = None
    if not gated:
        try:
            e_general = log_negativity(sigma_inf)
        except (NonPositiveFError, NegativeRadicandError):
            pass
        try:
            e_closed = log_negativity_closed_form(osc, env)
        except (ClassViolationError, DivergentNegativityError):
            pass
    verdict = "entangled" if s_general < 0.0 else "separable"
    return (
        a1,
        a2,
        env.d_xx,
        env.d_xpy,
        valid_strict,
        valid_lenient,
        s_general,
        s_special,
        e_general,
        e_closed,
        verdict,
    )


def _reduced_values(env: EnvironmentParams) -> dict:
    return {
        "d_xx": env.d_xx,
        "d_xpx": env.d_xpx,
        "d_pxpx": env.d_pxpx,
        "d_xy": env.d_xy,
        "d_xpy": env.d_xpy,
        "d_pxpy": env.d_pxpy,
    }


def _sweep_tasks(cfg: RunConfig) -> list[tuple]:
    osc, env, sweep = cfg.oscillator, cfg.environment, cfg.sweep
    m, w, lam = osc.m, osc.omega, env.lam
    axis1 = np.linspace(sweep.axis1.start, sweep.axis1.stop, sweep.axis1.count)
    axis2 = np.linspace(sweep.axis2.start, sweep.axis2.stop, sweep.axis2.count)
    tasks = []
    if sweep.scaling == "scaled":
        scale2 = math.sqrt(lam * lam + w * w)
        for a1 in axis1:
            d_xx = float(a1) * lam / (m * w)
            for a2 in axis2:
                d_xpy = float(a2) * scale2
                env_point = SymmetricEnvironmentParams(
                    lam=lam,
                    d_xx=d_xx,
                    d_pxpx=(m * w) ** 2 * d_xx,
                    d_xpy=d_xpy,
                )
                tasks.append((osc, env_point, float(a1), float(a2)))
    else:
        base = _reduced_values(env)
        field1 = _ENV_KEYS[sweep.axis1.coefficient]
        field2 = _ENV_KEYS[sweep.axis2.coefficient]
        for a1 in axis1:
            for a2 in axis2:
                values = dict(base)
                values[field1] = float(a1)
                values[field2] = float(a2)
                env_point = SymmetricEnvironmentParams(lam=lam, **values)
                tasks.append((osc, env_point, float(a1), float(a2)))
    return tasks


def cmd_sweep(cfg: RunConfig, args) -> int:
    if cfg.sweep is None:
        raise ConfigError("sweep requires a sweep section in the config")
    osc, env, sweep = cfg.oscillator, cfg.environment, cfg.sweep
    if not is_symmetric_environment(env):
        raise ConfigError(
            "sweep requires a symmetric base environment "
            "(mirrored y-mode coefficients)"
        )
    if abs(env.d_xy) > 1e-12:
        raise ConfigError("sweep requires D_xy = 0 in the base environment")
    if sweep.scaling == "scaled":
        if (sweep.axis1.coefficient, sweep.axis2.coefficient) != ("D_xx", "D_xpy"):
            raise ConfigError(
                "scaled sweeps run over axis1=D_xx and axis2=D_xpy "
                f"(got {sweep.axis1.coefficient!r}, {sweep.axis2.coefficient!r})"
            )
        if abs(env.d_xpx) > 1e-12 or abs(env.d_pxpy) > 1e-12:
            raise ConfigError(
                "scaled sweeps require D_xpx = 0 and D_pxpy = 0 in the base "
                "environment"
            )
    else:
        for axis in (sweep.axis1, sweep.axis2):
            if axis.coefficient not in _SWEEPABLE_KEYS:
                raise ConfigError(
                    f"raw sweeps accept coefficients {sorted(_SWEEPABLE_KEYS)}, "
                    f"got {axis.coefficient!r}"
                )
    if not env.lam > 0.0:
        raise NonPositiveLambdaError(
            f"sweep requires a positive dissipation constant, got {env.lam!r}"
        )

    tasks = _sweep_tasks(cfg)
    jobs = max(1, args.jobs)
    if jobs > 1:
        chunk = max(1, len(tasks) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_evaluate_sweep_point, tasks, chunksize=chunk))
    else:
        rows = [_evaluate_sweep_point(task) for task in tasks]

    if args.format == "json":
        payload = {
            "command": "sweep",
            "version": __version__,
            "config": config_to_dict(cfg),
            "columns": list(_SWEEP_COLUMNS),
            "rows": [list(row) for row in rows],
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = _metadata_lines("sweep", cfg)
        lines.append(",".join(_SWEEP_COLUMNS))
        lines.extend(
            ",".join(v if isinstance(v, str) else _fmt(v) for v in row) for row in rows
        )
        _write_output("\n".join(lines) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twomode",
        description=(
            "Steady-state covariance dynamics and entanglement of two damped "
            "oscillators in a common environment."
        ),
    )
    parser.add_argument("--version", action="version", version=f"twomode {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("validate", "check the environment coefficients against positivity"),
        ("steady-state", "asymptotic covariance matrix and entanglement report"),
        ("evolve", "covariance, S and E on a time grid"),
        ("sweep", "two-coefficient grid of S and E values"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", required=True, help="path to the JSON config")
        cmd.add_argument(
            "--output", default="-", help="output path, or - for stdout (default)"
        )
        cmd.add_argument(
            "--format", choices=("csv", "json"), default="csv", help="output format"
        )
        cmd.add_argument(
            "--jobs", type=int, default=1, help="parallel workers for sweep grids"
        )
    return parser


_HANDLERS = {
    "validate": cmd_validate,
    "steady-state": cmd_steady_state,
    "evolve": cmd_evolve,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    """Entry point returning the process exit code.

    0 on success, 1 on usage/parse errors, 2 on physics-validation or
    solver errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    try:
        cfg = load_config(args.config)
        return _HANDLERS[args.command](cfg, args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TwoModeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
