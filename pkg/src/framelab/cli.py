"""Command line experiment runner.

One subcommand per experiment kind plus ``run <config.json>``.  Every
experiment is described by a config record (kind, seed, tol, out, params);
subcommand flags assemble the same record, so a flag invocation and a
config file invocation of the same experiment are interchangeable and
produce byte-identical reports.

Exit codes: 0 success, 1 malformed config, 2 failed generator validation,
3 invariant breach (the breach message names the violated assertion).
"""

import argparse
import dataclasses
import json
import math
import os
import sys

import numpy as np

from .diagnostics import (SpaceTag, boundedly_complete_probe, counterexample_report,
                          tail_dual_norm, unit_vector_frame)
from .lp import CoordinateVector
from .pettis import unconditionality_scan
from .reports import (ARTIFACT_VERSION, config_digest, write_csv, write_json_report)
from .sampling import sampling_sweep
from .stepfn import StepFunction, haar_mother
from .translate_frame import (GeneratorRejected, RademacherSpec,
                              build_rademacher_generator, generator_certificates,
                              synthesis_over_set, validate_generator, young_check)
from .wavelet_frame import (WaveletSystem, convergence_study,
                            reconstruction_identity_gap)

MAX_WINDOW = 2 ** 14
MAX_M = 8
MAX_N = 16
MAX_P = 16.0


class ConfigError(ValueError):
    """Malformed experiment config; maps to exit code 1."""


# -- param schema ------------------------------------------------------------


def _check_int(name, value, lo, hi):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{name} must be an integer")
    if not lo <= value <= hi:
        raise ConfigError(f"{name} must lie in [{lo}, {hi}], got {value}")
    return value


def _check_p(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{name} must be a number")
    value = float(value)
    if not (1.0 < value <= MAX_P):
        raise ConfigError(f"{name} must lie in (1, {MAX_P}], got {value}")
    return value


def _check_p_list(name, value):
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{name} must be a nonempty list of exponents")
    return [_check_p(f"{name}[{i}]", v) for i, v in enumerate(value)]


def _check_int_list(name, value, lo, hi):
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{name} must be a nonempty list of integers")
    return [_check_int(f"{name}[{i}]", v, lo, hi) for i, v in enumerate(value)]


def _check_step_list(name, value):
    if not isinstance(value, list) or not value:
        raise ConfigError(f"{name} must be a nonempty list of lattice steps")
    out = []
    for i, v in enumerate(value):
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not v > 0:
            raise ConfigError(f"{name}[{i}] must be a positive number")
        out.append(float(v))
    return out


def _check_generator(name, value):
    if not isinstance(value, dict) or len(value) != 1:
        raise ConfigError(
            f"{name} must be an object with exactly one of 'rademacher' or 'step_function'")
    key = next(iter(value))
    body = value[key]
    if key == "rademacher":
        if not isinstance(body, dict):
            raise ConfigError(f"{name}.rademacher must be an object")
        unknown = set(body) - {"coefficients", "resolution"}
        if unknown:
            raise ConfigError(f"unknown rademacher fields: {sorted(unknown)}")
        coeffs = body.get("coefficients")
        if (not isinstance(coeffs, list) or not coeffs
                or not all(isinstance(e, list) and len(e) == 2 for e in coeffs)):
            raise ConfigError(
                f"{name}.rademacher.coefficients must be a list of [index, value] pairs")
        resolution = body.get("resolution", 1)
        _check_int(f"{name}.rademacher.resolution", resolution, 1, 16)
    elif key == "step_function":
        _require_step_record(f"{name}.step_function", body)
    else:
        raise ConfigError(f"{name} kind must be 'rademacher' or 'step_function', got {key!r}")
    return value


def _require_step_record(name, body):
    if not isinstance(body, dict) or set(body) != {"breakpoints", "values"}:
        raise ConfigError(f"{name} must be {{breakpoints: [...], values: [...]}}")
    if not isinstance(body["breakpoints"], list) or not isinstance(body["values"], list):
        raise ConfigError(f"{name} fields must be lists")


def _check_target(name, value):
    if not isinstance(value, dict) or len(value) != 1:
        raise ConfigError(
            f"{name} must be an object with exactly one of 'named', 'indicator', 'step_function'")
    key = next(iter(value))
    body = value[key]
    if key == "named":
        if body != "haar":
            raise ConfigError(f"{name}.named must be 'haar'")
    elif key == "indicator":
        if (not isinstance(body, list) or len(body) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool)
                           for v in body)
                or not body[0] < body[1]):
            raise ConfigError(f"{name}.indicator must be [a, b] with a < b")
    elif key == "step_function":
        _require_step_record(f"{name}.step_function", body)
    else:
        raise ConfigError(f"{name} kind must be 'named', 'indicator' or 'step_function'")
    return value


_DEFAULT_GENERATOR = {"rademacher": {"coefficients": [[0, 1.0]], "resolution": 1}}
_DEFAULT_TARGET = {"named": "haar"}


@dataclasses.dataclass(frozen=True)
class Param:
    check: object
    default: object = None
    required: bool = False


SCHEMAS = {
    "validate-generator": {
        "generator": Param(_check_generator, required=True),
        "lag_range": Param(lambda n, v: _check_int(n, v, 1, MAX_WINDOW), default=None),
    },
    "biorthogonality": {
        "generator": Param(_check_generator, default=_DEFAULT_GENERATOR),
        "window": Param(lambda n, v: _check_int(n, v, 1, MAX_WINDOW), default=8),
    },
    "reconstruct": {
        "generator": Param(_check_generator, default=_DEFAULT_GENERATOR),
        "window": Param(lambda n, v: _check_int(n, v, 1, MAX_WINDOW), default=8),
        "num_vectors": Param(lambda n, v: _check_int(n, v, 1, 10 ** 6), default=100),
        "p_list": Param(_check_p_list, default=[1.5, 2.0, 3.0]),
    },
    "suppression-scan": {
        "generator": Param(_check_generator, default=_DEFAULT_GENERATOR),
        "window": Param(lambda n, v: _check_int(n, v, 1, MAX_WINDOW), default=8),
        "trials": Param(lambda n, v: _check_int(n, v, 1, 10 ** 6), default=200),
        "p": Param(_check_p, default=2.0),
    },
    "young-fuzz": {
        "draws": Param(lambda n, v: _check_int(n, v, 1, 10 ** 6), default=200),
        "p_list": Param(_check_p_list, default=[1.5, 2.0, 3.0]),
        "max_terms": Param(lambda n, v: _check_int(n, v, 1, 8), default=4),
    },
    "wavelet-reconstruct": {
        "target": Param(_check_target, default=_DEFAULT_TARGET),
        "p": Param(_check_p, default=2.0),
        "M_list": Param(lambda n, v: _check_int_list(n, v, 1, MAX_M), default=[1, 2, 3]),
        "N_list": Param(lambda n, v: _check_int_list(n, v, 1, MAX_N), default=[1, 2, 4]),
    },
    "wavelet-identity": {
        "target": Param(_check_target, default=_DEFAULT_TARGET),
        "p_list": Param(_check_p_list, default=[1.5, 2.0, 3.0]),
        "M_list": Param(lambda n, v: _check_int_list(n, v, 1, MAX_M), default=[1, 2]),
        "N_list": Param(lambda n, v: _check_int_list(n, v, 1, MAX_N), default=[1, 2]),
    },
    "counterexample": {
        "K": Param(lambda n, v: _check_int(n, v, 1, MAX_WINDOW), default=50),
        "reconstruction_limit": Param(lambda n, v: _check_int(n, v, 1, MAX_WINDOW),
                                      default=50),
    },
    "diagnostics": {
        "window": Param(lambda n, v: _check_int(n, v, 2, MAX_WINDOW), default=12),
        "p": Param(_check_p, default=2.0),
    },
    "sampling-sweep": {
        "generator": Param(_check_generator, default=_DEFAULT_GENERATOR),
        "steps": Param(_check_step_list,
                       default=[1 / 3, 1 / 6, 1 / 12, 1 / 24]),
        "window": Param(lambda n, v: _check_int(n, v, 1, 64), default=4),
        "p": Param(_check_p, default=2.0),
    },
}

_DEFAULT_TOL = {
    "validate-generator": 1e-10,
    "biorthogonality": 1e-10,
    "reconstruct": 1e-10,
    "suppression-scan": 1e-8,
    "young-fuzz": 1e-12,
    "wavelet-reconstruct": 1e-9,
    "wavelet-identity": 1e-9,
    "counterexample": 0.0,
    "diagnostics": 0.0,
    "sampling-sweep": 1e-10,
}


def validate_config(raw):
    """Normalize a raw config dict; unknown fields are rejected."""
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(raw) - {"kind", "seed", "tol", "out", "params"}
    if unknown:
        raise ConfigError(f"unknown config fields: {sorted(unknown)}")
    kind = raw.get("kind")
    if kind not in SCHEMAS:
        raise ConfigError(
            f"kind must be one of {sorted(SCHEMAS)}, got {kind!r}")
    seed = raw.get("seed", 0)
    seed = _check_int("seed", seed, 0, 2 ** 32 - 1)
    tol = raw.get("tol", _DEFAULT_TOL[kind])
    if isinstance(tol, bool) or not isinstance(tol, (int, float)) or tol < 0:
        raise ConfigError("tol must be a nonnegative number")
    out = raw.get("out", kind)
    if not isinstance(out, str) or not out:
        raise ConfigError("out must be a nonempty path string")
    schema = SCHEMAS[kind]
    raw_params = raw.get("params", {})
    if not isinstance(raw_params, dict):
        raise ConfigError("params must be an object")
    unknown = set(raw_params) - set(schema)
    if unknown:
        raise ConfigError(f"unknown params for {kind}: {sorted(unknown)}")
    params = {}
    for name, spec in schema.items():
        if name in raw_params:
            params[name] = spec.check(name, raw_params[name])
        elif spec.required:
            raise ConfigError(f"missing required param: {name}")
        else:
            params[name] = spec.default
    return {"kind": kind, "seed": seed, "tol": float(tol), "out": out,
            "params": params}


# -- object construction from config ------------------------------------------


def _build_generator(obj):
    key = next(iter(obj))
    if key == "rademacher":
        body = obj[key]
        coeffs = CoordinateVector({int(n): float(c) for n, c in body["coefficients"]})
        spec = RademacherSpec(coefficients=coeffs,
                              resolution=int(body.get("resolution", 1)))
        return build_rademacher_generator(spec)
    body = obj[key]
    f = StepFunction(body["breakpoints"], body["values"])
    return validate_generator(f)


def _build_target(obj):
    key = next(iter(obj))
    if key == "named":
        return haar_mother()
    if key == "indicator":
        a, b = obj[key]
        return StepFunction.indicator(float(a), float(b))
    body = obj[key]
    return StepFunction(body["breakpoints"], body["values"])


# -- experiment executors -------------------------------------------------------


@dataclasses.dataclass
class ExperimentResult:
    payload: dict
    table: tuple | None = None       # (header, rows)
    failures: tuple = ()
    generator_failure: bool = False


def _run_validate_generator(params, seed, tol, rng):
    obj = params["generator"]
    key = next(iter(obj))
    if key == "rademacher":
        try:
            g = _build_generator(obj)
        except GeneratorRejected as exc:
            return ExperimentResult(payload={"report": exc.report.to_dict()},
                                    failures=tuple(exc.report.failures),
                                    generator_failure=True)
        payload = {"report": {
            "l1_norm": g.l1_norm,
            "periodized_sup": g.periodized_sup,
            "ortho_residual": g.ortho_residual,
            "lag_range": g.lag_range,
            "tol": tol,
            "failures": [],
            "ok": True,
        }, "suppression_constant": g.suppression_constant}
        return ExperimentResult(payload=payload)
    f = StepFunction(obj[key]["breakpoints"], obj[key]["values"])
    report = generator_certificates(f, params["lag_range"], tol)
    payload = {"report": report.to_dict()}
    if report.ok:
        payload["suppression_constant"] = report.l1_norm * report.periodized_sup
        return ExperimentResult(payload=payload)
    return ExperimentResult(payload=payload, failures=tuple(report.failures),
                            generator_failure=True)


def _run_biorthogonality(params, seed, tol, rng):
    from .translate_frame import biorthogonality_matrix
    g = _build_generator(params["generator"])
    window = params["window"]
    mat = biorthogonality_matrix(g, window)
    deviation = float(np.max(np.abs(mat - np.eye(mat.shape[0]))))
    failures = []
    if deviation > tol:
        failures.append(
            f"biorthogonality deviation {deviation!r} exceeds tol {tol!r}")
    payload = {"window": window, "matrix_size": mat.shape[0],
               "max_abs_deviation": deviation, "passed": not failures}
    return ExperimentResult(payload=payload, failures=tuple(failures))


def _run_reconstruct(params, seed, tol, rng):
    g = _build_generator(params["generator"])
    window = params["window"]
    lo, hi = g.f.support()
    spread = int(math.ceil(hi - lo))
    out_window = window + spread
    worst = {p: 0.0 for p in params["p_list"]}
    for _ in range(params["num_vectors"]):
        vals = rng.standard_normal(2 * window + 1)
        x = CoordinateVector({n - window: float(v) for n, v in enumerate(vals)})
        recon = synthesis_over_set(g, x, None, out_window)
        diff = recon.sub(x)
        for p in params["p_list"]:
            denom = x.norm(p)
            if denom > 0:
                worst[p] = max(worst[p], diff.norm(p) / denom)
    failures = [
        f"reconstruction error {err!r} at p={p} exceeds tol {tol!r}"
        for p, err in worst.items() if err > tol]
    payload = {
        "window": window,
        "num_vectors": params["num_vectors"],
        "max_relative_error": {str(p): err for p, err in worst.items()},
        "passed": not failures,
    }
    return ExperimentResult(payload=payload, failures=tuple(failures))


def _run_suppression_scan(params, seed, tol, rng):
    g = _build_generator(params["generator"])
    bs, bu = unconditionality_scan(g, params["trials"], params["window"],
                                   params["p"], seed)
    failures = []
    if bs > g.suppression_constant + tol:
        failures.append(
            f"suppression lower bound {bs!r} exceeds certificate "
            f"{g.suppression_constant!r}")
    if bs > bu + tol:
        failures.append("suppression bound exceeds unconditional bound")
    if bu > 2.0 * bs + tol:
        failures.append("unconditional bound exceeds twice the suppression bound")
    payload = {
        "suppression_constant": g.suppression_constant,
        "suppression_lower_bound": bs,
        "unconditional_lower_bound": bu,
        "bracket": [bs, g.suppression_constant],
        "trials": params["trials"],
        "window": params["window"],
        "p": params["p"],
        "passed": not failures,
    }
    return ExperimentResult(payload=payload, failures=tuple(failures))


def _random_unit_l2(rng, max_terms):
    size = int(rng.integers(1, max_terms + 1))
    idx = rng.choice(np.arange(-3, 4), size=size, replace=False)
    vals = rng.standard_normal(size)
    vals /= math.sqrt(float(np.dot(vals, vals)))
    return CoordinateVector({int(n): float(v) for n, v in zip(idx, vals)})


def _run_young_fuzz(params, seed, tol, rng):
    worst_ratio = 0.0
    failures = []
    p_list = params["p_list"]
    for i in range(params["draws"]):
        coeffs = _random_unit_l2(rng, params["max_terms"])
        spec = RademacherSpec(coefficients=coeffs, resolution=1)
        g = build_rademacher_generator(spec)
        size = int(rng.integers(1, 7))
        idx = rng.choice(np.arange(-6, 7), size=size, replace=False)
        a = CoordinateVector({int(n): float(v)
                              for n, v in zip(idx, rng.standard_normal(size))})
        p = p_list[i % len(p_list)]
        lhs, rhs = young_check(g.f, a, p)
        if lhs > rhs * (1.0 + 1e-12) + 1e-12:
            failures.append(
                f"series bound violated at draw {i}: lhs {lhs!r} > rhs {rhs!r}")
        if rhs > 0:
            worst_ratio = max(worst_ratio, lhs / rhs)
    equality_gap = 0.0
    for p in p_list:
        lhs, rhs = young_check(StepFunction.indicator(0.0, 1.0),
                               CoordinateVector.unit(0, 1.0), p)
        equality_gap = max(equality_gap, abs(lhs - rhs))
    if equality_gap > tol:
        failures.append(
            f"unit indicator equality gap {equality_gap!r} exceeds tol {tol!r}")
    payload = {"draws": params["draws"], "max_ratio": worst_ratio,
               "equality_gap": equality_gap, "passed": not failures}
    return ExperimentResult(payload=payload, failures=tuple(failures))


def _run_wavelet_reconstruct(params, seed, tol, rng, timings=False):
    x = _build_target(params["target"])
    ws = WaveletSystem.haar(params["p"])
    rows = convergence_study(ws, x, params["M_list"], params["N_list"])
    failures = []
    for row in rows:
        if row.error > row.oracle_bound + tol:
            failures.append(
                f"box error {row.error!r} exceeds oracle bound "
                f"{row.oracle_bound!r} at M={row.M} N={row.N}")
    header = ["M", "N", "p", "error", "oracle_bound", "runtime_ms"]
    table_rows = [[row.M, row.N, row.p, row.error, row.oracle_bound,
                   row.runtime_ms if timings else ""] for row in rows]
    payload = {
        "p": params["p"],
        "rows": [{"M": r.M, "N": r.N, "error": r.error,
                  "oracle_bound": r.oracle_bound} for r in rows],
        "passed": not failures,
    }
    return ExperimentResult(payload=payload, table=(header, table_rows),
                            failures=tuple(failures))


def _run_wavelet_identity(params, seed, tol, rng):
    x = _build_target(params["target"])
    gaps = []
    failures = []
    for p in params["p_list"]:
        ws = WaveletSystem.haar(p)
        for M in params["M_list"]:
            for N in params["N_list"]:
                gap = reconstruction_identity_gap(ws, x, M, N)
                gaps.append({"p": p, "M": M, "N": N, "gap": gap})
                if gap > tol:
                    failures.append(
                        f"identity gap {gap!r} exceeds tol {tol!r} "
                        f"at p={p} M={M} N={N}")
    payload = {"gaps": gaps,
               "max_gap": max((g["gap"] for g in gaps), default=0.0),
               "passed": not failures}
    return ExperimentResult(payload=payload, failures=tuple(failures))


def _run_counterexample(params, seed, tol, rng):
    report = counterexample_report(params["K"], params["reconstruction_limit"])
    failures = []
    if not report.ok:
        for field in ("full_reconstruction_exact", "restricted_coordinates_all_one",
                      "restricted_escapes_c0", "dual_series_matches_direct",
                      "dual_action_matches_sum"):
            if not getattr(report, field):
                failures.append(f"counterexample check failed: {field}")
    payload = dataclasses.asdict(report)
    payload["passed"] = report.ok
    return ExperimentResult(payload=payload, failures=tuple(failures))


def _run_diagnostics(params, seed, tol, rng):
    window = params["window"]
    p = params["p"]
    failures = []

    frame_l1 = unit_vector_frame(SpaceTag.l1(), range(window))
    ones = CoordinateVector({n: 1 for n in range(window)})
    l1_tails = [tail_dual_norm(frame_l1, ones, range(j + 1))
                for j in range(window - 1)]
    if any(v != 1.0 for v in l1_tails):
        failures.append("l1 all-ones tail norms are not identically 1")

    frame_lp = unit_vector_frame(SpaceTag.lp(p), range(window))
    support = min(6, window)
    f = CoordinateVector({n: 1.0 / (n + 1) for n in range(support)})
    lp_tails = [tail_dual_norm(frame_lp, f, range(j + 1))
                for j in range(window)]
    if any(v != 0.0 for v in lp_tails[support - 1:]):
        failures.append("lp tail norms do not vanish past the functional support")

    frame_c0 = unit_vector_frame(SpaceTag.c0(), range(window))
    xss = CoordinateVector({n: 1 for n in range(window)})
    nesting = [range(j + 1) for j in range(window)]
    probe = boundedly_complete_probe(frame_c0, xss, nesting)
    if any(v != 1.0 for v in probe.increments):
        failures.append("c0 all-ones increments are not identically 1")
    if not probe.non_cauchy:
        failures.append("c0 all-ones probe failed to flag a non-Cauchy net")

    payload = {
        "window": window,
        "p": p,
        "l1_allones_tail_norms": l1_tails,
        "lp_tail_norms": lp_tails,
        "c0_allones_increments": list(probe.increments),
        "c0_non_cauchy": probe.non_cauchy,
        "passed": not failures,
    }
    return ExperimentResult(payload=payload, failures=tuple(failures))


def _run_sampling_sweep(params, seed, tol, rng):
    g = _build_generator(params["generator"])
    rows = sampling_sweep(g, params["steps"], params["window"],
                          p=params["p"], exact_tol=tol)
    header = ["h", "num_samples", "max_error", "exact"]
    table_rows = [[r.step, r.num_samples, r.max_error, r.exact] for r in rows]
    errors = [r.max_error for r in rows]
    payload = {
        "window": params["window"],
        "p": params["p"],
        "rows": [dataclasses.asdict(r) for r in rows],
        "nonincreasing": all(b <= a + 1e-15 for a, b in zip(errors, errors[1:])),
    }
    return ExperimentResult(payload=payload, table=(header, table_rows))


EXECUTORS = {
    "validate-generator": _run_validate_generator,
    "biorthogonality": _run_biorthogonality,
    "reconstruct": _run_reconstruct,
    "suppression-scan": _run_suppression_scan,
    "young-fuzz": _run_young_fuzz,
    "wavelet-reconstruct": _run_wavelet_reconstruct,
    "wavelet-identity": _run_wavelet_identity,
    "counterexample": _run_counterexample,
    "diagnostics": _run_diagnostics,
    "sampling-sweep": _run_sampling_sweep,
}


def execute(config, quiet=False, timings=False):
    """Run a validated config; write reports; return the process exit code."""
    kind = config["kind"]
    digest = config_digest({"kind": kind, "seed": config["seed"],
                            "tol": config["tol"], "params": config["params"]})
    rng = np.random.default_rng(config["seed"])
    try:
        if kind == "wavelet-reconstruct":
            result = EXECUTORS[kind](config["params"], config["seed"],
                                     config["tol"], rng, timings=timings)
        else:
            result = EXECUTORS[kind](config["params"], config["seed"],
                                     config["tol"], rng)
    except GeneratorRejected as exc:
        result = ExperimentResult(payload={"report": exc.report.to_dict()},
                                  failures=tuple(exc.report.failures),
                                  generator_failure=True)
    payload = {
        "kind": kind,
        "artifact_version": ARTIFACT_VERSION,
        "config_digest": digest,
        "seed": config["seed"],
        "tol": config["tol"],
    }
    payload.update(result.payload)
    json_path = config["out"] + ".json"
    write_json_report(json_path, payload)
    written = [json_path]
    if result.table is not None:
        csv_path = config["out"] + ".csv"
        header, rows = result.table
        write_csv(csv_path, header, rows, digest, config["seed"])
        written.append(csv_path)
    if not quiet:
        if result.failures:
            for failure in result.failures:
                print(f"FAIL {kind}: {failure}")
        else:
            print(f"PASS {kind}")
        for path in written:
            print(f"wrote {path}")
    if result.generator_failure:
        return 2
    if result.failures:
        return 3
    return 0


# -- argument parsing -----------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--out", help="report path base (extension is appended)")
    sub.add_argument("--seed", type=int, help="RNG seed echoed into the report")
    sub.add_argument("--tol", type=float, help="tolerance override")
    sub.add_argument("--quiet", action="store_true", help="suppress stdout lines")
    sub.add_argument("--timings", action="store_true",
                     help="include wall-clock columns (breaks byte-identical reruns)")


def _json_flag(text, flag):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{flag} is not valid JSON: {exc}") from None


def _int_list_flag(text, flag):
    try:
        return [int(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise ConfigError(f"{flag} must be comma separated integers") from None


def _float_list_flag(text, flag):
    try:
        return [float(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise ConfigError(f"{flag} must be comma separated numbers") from None


_FLAG_PARAMS = {
    "generator": ("--generator", "json"),
    "target": ("--target", "json"),
    "lag_range": ("--lag-range", "int"),
    "window": ("--window", "int"),
    "num_vectors": ("--num-vectors", "int"),
    "p_list": ("--p-list", "float_list"),
    "p": ("--p", "float"),
    "trials": ("--trials", "int"),
    "draws": ("--draws", "int"),
    "max_terms": ("--max-terms", "int"),
    "M_list": ("--M-list", "int_list"),
    "N_list": ("--N-list", "int_list"),
    "K": ("--K", "int"),
    "reconstruction_limit": ("--reconstruction-limit", "int"),
    "steps": ("--steps", "float_list"),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="framelab",
        description="Frame reconstruction experiments over exact step-function calculus")
    subs = parser.add_subparsers(dest="command", required=True)

    runner = subs.add_parser("run", help="run an experiment from a config file")
    runner.add_argument("config", help="path to a JSON experiment config")
    _add_common(runner)

    for kind, schema in SCHEMAS.items():
        sub = subs.add_parser(kind, help=f"run the {kind} experiment")
        _add_common(sub)
        sub.add_argument("--config", dest="config",
                         help="JSON file holding config fields for this kind")
        for name in schema:
            flag, flag_type = _FLAG_PARAMS[name]
            if flag_type == "int":
                sub.add_argument(flag, dest=f"param_{name}", type=int)
            elif flag_type == "float":
                sub.add_argument(flag, dest=f"param_{name}", type=float)
            else:
                sub.add_argument(flag, dest=f"param_{name}")
    return parser


def _load_config_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from None


def _reject_config_overwrite(config_path, out_base):
    # Artifacts land at <out>.json/<out>.csv; writing one over the input
    # config would destroy it and make the run unrepeatable.
    target = os.path.abspath(config_path)
    for path in (out_base + ".json", out_base + ".csv"):
        if os.path.abspath(path) == target:
            raise ConfigError(
                f"out={out_base!r} would overwrite the config file {config_path}")


def _collect_config(args):
    if args.command == "run":
        raw = _load_config_file(args.config)
    else:
        raw = _load_config_file(args.config) if args.config else {}
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
        raw = dict(raw)
        raw["kind"] = args.command
        params = dict(raw.get("params", {}) or {})
        for name in SCHEMAS[args.command]:
            value = getattr(args, f"param_{name}", None)
            if value is None:
                continue
            _, flag_type = _FLAG_PARAMS[name]
            flag = _FLAG_PARAMS[name][0]
            if flag_type == "json":
                value = _json_flag(value, flag)
            elif flag_type == "int_list":
                value = _int_list_flag(value, flag)
            elif flag_type == "float_list":
                value = _float_list_flag(value, flag)
            params[name] = value
        raw["params"] = params
    if args.out is not None:
        raw["out"] = args.out
    if args.seed is not None:
        raw["seed"] = args.seed
    if args.tol is not None:
        raw["tol"] = args.tol
    return raw


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        config = validate_config(_collect_config(args))
        if args.config is not None:
            _reject_config_overwrite(args.config, config["out"])
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    return execute(config, quiet=args.quiet, timings=args.timings)


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
