"""Batch command line front end.

Usage::

    esu <targets|classify|solve|minimize|evaluate|sweep> --config FILE.json
        [--out PATH] [--format json|csv] [--n-high N] [--tol T]

The config is a JSON object.  ``params`` holds the model parameters
(``a, Lambda, m, xi, kappa`` and optional ``alpha``/``beta`` arrays); the
other keys are read by the commands that need them:

``targets``   ``{"Y1": .., "Y2": ..}`` overrides the computed targets
              (classify, solve, minimize)
``n_high``    mode index for ``solve`` (default: the smallest valid one)
``state``     state for ``evaluate``, e.g. ``{"kind": "kms", "beta": 2}``
``points``    ``[[dt, chi], ...]`` for ``evaluate``; with ``eps`` and ``n_max``
``sweep``     ``{"axes": {NAME: [values] | {"start", "stop", "count"}}}``

Sweep axis names are the parameter keys, ``alpha1``..``alpha5``,
``beta1``..``beta3`` and ``c_prime`` (set through alpha3).  Exit codes:
0 success, 2 invalid input, 3 singular renormalisation, 4 no solution,
5 solver failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .exceptions import (
    DomainError,
    InvalidParametersError,
    NoSolutionError,
    SingularRenormalizationError,
    SolverFailureError,
)
from .semiclassical import (
    SemiclassicalTargets,
    classify,
    construct_two_mode,
    minimal_n_high,
    targets,
    verify_solution,
)
from .spectral import ModelParams
from .states import SymmetricState, energy_pressure_reg, energy_pressure_ren, two_point
from .thermodynamics import kms_temperature_solve, solve_entropy_minimizer

__all__ = ["main", "SWEEP_COLUMNS", "EVALUATE_COLUMNS"]

EXIT_INVALID = 2
EXIT_SINGULAR = 3
EXIT_NO_SOLUTION = 4
EXIT_SOLVER = 5

SWEEP_COLUMNS = ["Y1", "Y2", "qf", "full", "boundary", "status"]
EVALUATE_COLUMNS = ["dt", "chi", "re", "im", "E_reg", "P_reg", "E_ren", "P_ren"]
_CONFIG_KEYS = {"params", "targets", "n_high", "state", "points", "eps", "n_max", "sweep", "tol"}


class ConfigError(DomainError):
    """Malformed run configuration."""


def _load_config(path: str) -> dict:
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict) or "params" not in cfg:
        raise ConfigError("config must be a JSON object with a 'params' entry")
    unknown = set(cfg) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    return cfg


def _params(cfg: dict) -> ModelParams:
    if not isinstance(cfg["params"], dict):
        raise ConfigError("'params' must be an object")
    return ModelParams.from_dict(cfg["params"])


def _targets(cfg: dict, params: ModelParams, tol: float) -> SemiclassicalTargets:
    explicit = cfg.get("targets")
    if explicit is None:
        return targets(params, tol)
    try:
        return SemiclassicalTargets.from_values(params, explicit["Y1"], explicit["Y2"])
    except (KeyError, TypeError) as exc:
        raise ConfigError("'targets' needs numeric 'Y1' and 'Y2'") from exc


def cmd_targets(cfg: dict, args) -> dict:
    return targets(_params(cfg), args.tol).to_dict()


def cmd_classify(cfg: dict, args) -> dict:
    t = _targets(cfg, _params(cfg), args.tol)
    return {"Y1": t.y1, "Y2": t.y2, **classify(t).to_dict()}


def cmd_solve(cfg: dict, args) -> dict:
    t = _targets(cfg, _params(cfg), args.tol)
    cls = classify(t)
    n_high = args.n_high if args.n_high is not None else cfg.get("n_high")
    if n_high is None:
        n_high = minimal_n_high(t)
    state = construct_two_mode(t, int(n_high))
    r1, r2 = verify_solution(state, t)
    return {
        "Y1": t.y1,
        "Y2": t.y2,
        "classification": cls.to_dict(),
        "n_high": int(n_high),
        "state": state.to_dict(),
        "residuals": [r1, r2],
    }


def cmd_minimize(cfg: dict, args) -> dict:
    t = _targets(cfg, _params(cfg), args.tol)
    result = solve_entropy_minimizer(t)
    out = {"Y1": t.y1, "Y2": t.y2, "classification": classify(t).to_dict(), **result.to_dict()}
    out["kms_beta"] = kms_temperature_solve(t)
    return out


def cmd_evaluate(cfg: dict, args) -> dict:
    params = _params(cfg)
    try:
        state = SymmetricState.from_dict(cfg.get("state", {"kind": "ground"}))
    except (KeyError, TypeError, AttributeError) as exc:
        raise ConfigError(f"malformed 'state': {exc}") from exc
    e_reg, p_reg = energy_pressure_reg(state, params)
    e_ren, p_ren = energy_pressure_ren(state, params)
    eps = float(cfg.get("eps", 1e-4))
    n_max = int(cfg.get("n_max", 10_000))
    pts = []
    for item in cfg.get("points", []):
        try:
            dt, chi = float(item[0]), float(item[1])
        except (TypeError, ValueError, IndexError) as exc:
            raise ConfigError("each point must be [dt, chi]") from exc
        w = two_point(state, params, dt, chi, eps, n_max)
        pts.append({"dt": dt, "chi": chi, "re": w.real, "im": w.imag})
    return {
        "state": state.to_dict(),
        "E_reg": e_reg,
        "P_reg": p_reg,
        "E_ren": e_ren,
        "P_ren": p_ren,
        "eps": eps,
        "n_max": n_max,
        "two_point": pts,
    }


_RENORM_AXES = {f"alpha{i + 1}": ("alpha", i) for i in range(5)}
_RENORM_AXES.update({f"beta{i + 1}": ("beta", i) for i in range(3)})
_PARAM_AXES = {"a", "Lambda", "m", "xi", "kappa"}


def _axis_values(name: str, spec) -> list[float]:
    if isinstance(spec, dict):
        try:
            start, stop, count = float(spec["start"]), float(spec["stop"]), int(spec["count"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"axis {name!r}: range needs start, stop, count") from exc
        if count < 1:
            raise ConfigError(f"axis {name!r}: count must be positive")
        return [float(v) for v in np.linspace(start, stop, count)]
    if isinstance(spec, list) and spec:
        try:
            return [float(v) for v in spec]
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"axis {name!r}: values must be numbers") from exc
    raise ConfigError(f"axis {name!r}: expected a non-empty list or a range object")


def _apply_axes(base: dict, point: dict) -> dict:
    d = json.loads(json.dumps(base))
    d.setdefault("alpha", [0.0] * 5)
    d.setdefault("beta", [0.0] * 3)
    for name, value in point.items():
        if name in _PARAM_AXES:
            d[name] = value
        elif name in _RENORM_AXES:
            key, i = _RENORM_AXES[name]
            d[key][i] = value
    if "c_prime" in point:
        al = d["alpha"]
        # c' = (3 alpha3 + alpha4 + alpha5)/6
        al[2] = (6.0 * point["c_prime"] - al[3] - al[4]) / 3.0
    return d


def _sweep_cell(base: dict, point: dict, tol: float) -> dict:
    row = dict(point)
    try:
        t = targets(ModelParams.from_dict(_apply_axes(base, point)), tol)
    except SingularRenormalizationError:
        row.update(Y1=None, Y2=None, qf=None, full=None, boundary=None, status="singular")
        return row
    except InvalidParametersError:
        row.update(Y1=None, Y2=None, qf=None, full=None, boundary=None, status="invalid")
        return row
    row.update(Y1=t.y1, Y2=t.y2, **classify(t).to_dict(), status="ok")
    return row


def _threads() -> int:
    raw = os.environ.get("ESU_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError as exc:
        raise ConfigError(f"ESU_THREADS must be an integer, got {raw!r}") from exc
    return max(1, n)


def cmd_sweep(cfg: dict, args) -> dict:
    sweep = cfg.get("sweep")
    if not isinstance(sweep, dict) or not isinstance(sweep.get("axes"), dict) or not sweep["axes"]:
        raise ConfigError("sweep needs a non-empty 'axes' object")
    names = list(sweep["axes"])
    for name in names:
        if name not in _PARAM_AXES and name not in _RENORM_AXES and name != "c_prime":
            raise ConfigError(f"unknown sweep axis {name!r}")
    _params(cfg)  # validate the base point
    grids = [_axis_values(n, sweep["axes"][n]) for n in names]
    points = [dict(zip(names, combo)) for combo in itertools.product(*grids)]
    base = cfg["params"]
    with ThreadPoolExecutor(max_workers=min(_threads(), len(points))) as pool:
        rows = list(pool.map(lambda pt: _sweep_cell(base, pt, args.tol), points))
    return {"axes": names, "columns": names + SWEEP_COLUMNS, "rows": rows}


COMMANDS = {
    "targets": cmd_targets,
    "classify": cmd_classify,
    "solve": cmd_solve,
    "minimize": cmd_minimize,
    "evaluate": cmd_evaluate,
    "sweep": cmd_sweep,
}


def _flatten(obj, prefix=""):
    """Dotted-key leaves of a nested report, in key order."""
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}{k}.")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        yield prefix[:-1], obj


def to_csv(command: str, report: dict) -> str:
    """CSV projection of a report: table rows for sweep/evaluate, one row otherwise."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if command == "sweep":
        cols = report["columns"]
        writer.writerow(cols)
        for row in report["rows"]:
            writer.writerow(["" if row[c] is None else row[c] for c in cols])
    elif command == "evaluate":
        writer.writerow(EVALUATE_COLUMNS)
        pts = report["two_point"] or [{"dt": "", "chi": "", "re": "", "im": ""}]
        for pt in pts:
            writer.writerow([pt["dt"], pt["chi"], pt["re"], pt["im"],
                             report["E_reg"], report["P_reg"], report["E_ren"], report["P_ren"]])
    else:
        flat = list(_flatten(report))
        writer.writerow([k for k, _ in flat])
        writer.writerow(["" if v is None else v for _, v in flat])
    return buf.getvalue()


def render(command: str, report: dict, fmt: str) -> str:
    if fmt == "csv":
        return to_csv(command, report)
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="esu", description=__doc__.split("\n\n")[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", required=True, help="JSON run configuration")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--n-high", type=int, default=None, help="mode index N for 'solve'")
    parser.add_argument("--tol", type=float, default=1e-12, help="series tail tolerance")
    return parser


def _fail(code: int, exc: Exception) -> int:
    print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if not args.tol > 0:
            raise ConfigError("--tol must be positive")
        cfg = _load_config(args.config)
        report = COMMANDS[args.command](cfg, args)
        text = render(args.command, report, args.format)
    except SingularRenormalizationError as exc:
        return _fail(EXIT_SINGULAR, exc)
    except NoSolutionError as exc:
        return _fail(EXIT_NO_SOLUTION, exc)
    except SolverFailureError as exc:
        return _fail(EXIT_SOLVER, exc)
    except DomainError as exc:
        return _fail(EXIT_INVALID, exc)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
