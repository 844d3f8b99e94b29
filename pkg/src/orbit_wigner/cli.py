"""Command-line front end.

    orbit-wigner eval --N 10 --E 1 --point 0,0,0,0
    orbit-wigner grid --N 50 --plane orbit --extent 2 --res 400 --out field.csv
    orbit-wigner selftest

Exit status: 0 on success, 2 when a validation suite fails, 1 on usage or
domain errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import acceptance
from .asymptotics import projector_limit
from .errors import ConfigurationError, DomainError, NumericalIntegrityError, OracleError
from .phase_space import PhasePoint, QuantumNumbers, build_frame
from .validation import (
    pointwise_scan,
    projector_average,
    rate_fit,
    reference_point,
    rows_to_csv,
    scaling_scan,
    weak_limit_test,
)
from .wigner_exact import (
    ConstantObservable,
    EnergyObservable,
    GaussianObservable,
    Slice,
    WignerEvaluator,
    wigner_grid,
)

COMMANDS = ("eval", "grid", "scaling", "pointwise", "weak-limit", "projector", "selftest")
EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    N: int = 10
    d: int = 2
    E: float = 1.0
    method: str = "exact"
    m: int | None = None
    point: str | None = None
    plane: str = "orbit"
    extent: float = 2.0
    res: int = 101
    u_min: float = -0.4
    u_max: float = 0.4
    w_max: float = 0.0
    steps: int | None = None
    K: int = 4096
    out: str | None = None
    format: str = "csv"

    @property
    def quad_order(self) -> int:
        return self.N + 4 if self.m is None else self.m

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        return cls(**json.loads(text))

    def to_argv(self) -> list:
        argv = [self.command]
        for f in fields(self):
            if f.name == "command":
                continue
            v = getattr(self, f.name)
            if v is None:
                continue
            argv += ["--" + f.name.replace("_", "-"), repr(v) if isinstance(v, float) else str(v)]
        return argv


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orbit-wigner", description="Wigner distributions of orbital coherent states.")
    p.add_argument("command", choices=COMMANDS, help="what to run")
    p.add_argument("--N", type=int, default=10, help="level N (for scans: the largest level)")
    p.add_argument("--d", type=int, default=2, help="configuration-space dimension (default 2)")
    p.add_argument("--E", type=float, default=1.0, help="energy E (default 1)")
    p.add_argument("--method", choices=("exact", "quadrature", "oracle"), default="exact", help="evaluator")
    p.add_argument("--m", type=int, default=None, help="Gauss-Hermite order per axis (default N + 4)")
    p.add_argument("--point", default=None, help="phase point as 2d comma-separated reals x1..xd,xi1..xid")
    p.add_argument(
        "--plane",
        default="orbit",
        help="grid slice: 'orbit', 'normal', or two spanning vectors 'a1,..,a2d;b1,..,b2d'",
    )
    p.add_argument("--extent", type=float, default=2.0, help="half-width of the grid slice")
    p.add_argument("--res", type=int, default=101, help="grid points per axis")
    p.add_argument("--u-min", dest="u_min", type=float, default=-0.4, help="scaling scan: smallest u")
    p.add_argument("--u-max", dest="u_max", type=float, default=0.4, help="scaling scan: largest u")
    p.add_argument("--w-max", dest="w_max", type=float, default=0.0, help="scaling scan: largest w1 (0: w = 0 only)")
    p.add_argument("--steps", type=int, default=None, help="scan resolution: u points for scaling (default 40), levels for pointwise (default 4)")
    p.add_argument("--K", type=int, default=4096, help="projector: number of CP^1 samples")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    return p


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(**vars(ns))


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _parse_vec(text: str, n: int) -> np.ndarray:
    try:
        v = np.array([float(t) for t in text.split(",")])
    except ValueError as exc:
        raise UsageError(f"cannot parse vector {text!r}") from exc
    if v.size != n:
        raise UsageError(f"expected {n} comma-separated numbers, got {v.size}")
    return v


def _slice(cfg: RunConfig) -> Slice:
    d = cfg.d
    zero = PhasePoint(np.zeros(d), np.zeros(d))
    if cfg.plane == "orbit":
        a = reference_point(1.0, d).as_array() / math.sqrt(2.0)
        b = np.zeros(2 * d)
        b[1], b[d] = 1.0 / math.sqrt(2.0), -1.0 / math.sqrt(2.0)
        return Slice(zero, PhasePoint.from_array(cfg.extent * a), PhasePoint.from_array(cfg.extent * b), "orbit")
    if cfg.plane == "normal":
        base = reference_point(cfg.E, d)
        frame = build_frame(base, cfg.E)
        radial = base.as_array() / np.linalg.norm(base.as_array())
        v1 = frame.normals[0].as_array()
        v1 = v1 / np.linalg.norm(v1)
        return Slice(
            base, PhasePoint.from_array(cfg.extent * radial), PhasePoint.from_array(cfg.extent * v1), "normal"
        )
    parts = cfg.plane.split(";")
    if len(parts) != 2:
        raise UsageError("--plane must be 'orbit', 'normal' or 'a1,..;b1,..'")
    a, b = (_parse_vec(s, 2 * d) for s in parts)
    return Slice(zero, PhasePoint.from_array(cfg.extent * a), PhasePoint.from_array(cfg.extent * b), "explicit")


def _emit(cfg: RunConfig, text: str):
    if cfg.out is None:
        sys.stdout.write(text)
        return
    try:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {cfg.out}: {exc}") from exc


def _meta(cfg: RunConfig) -> str:
    return f"# qn={cfg.N},{cfg.d},{cfg.E!r} method {cfg.method} m {cfg.quad_order}"


def _table(cfg: RunConfig, header: list, rows: list, summary: dict) -> str:
    if cfg.format == "json":
        doc = dict(summary)
        doc["rows"] = [dict(zip(header, r)) for r in rows]
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"
    lines = [_meta(cfg), ",".join(header)]
    for r in rows:
        lines.append(",".join(f"{v:.17g}" if isinstance(v, float) else str(v) for v in r))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _evaluator(cfg: RunConfig) -> WignerEvaluator:
    return WignerEvaluator(QuantumNumbers(cfg.N, cfg.d, cfg.E), m=cfg.quad_order, method=cfg.method)


def cmd_eval(cfg: RunConfig) -> int:
    ev = _evaluator(cfg)
    pt = np.zeros(2 * cfg.d) if cfg.point is None else _parse_vec(cfg.point, 2 * cfg.d)
    val = ev(pt)
    cols = [f"x{k + 1}" for k in range(cfg.d)] + [f"xi{k + 1}" for k in range(cfg.d)]
    _emit(cfg, _table(cfg, cols + ["W"], [[*map(float, pt), val]], {"qn": [cfg.N, cfg.d, cfg.E], "method": cfg.method, "m": ev.m}))
    if cfg.out is not None:
        print(f"W = {val:.17g}  (N={cfg.N}, d={cfg.d}, E={cfg.E}, method={cfg.method}, m={ev.m})")
    return EXIT_OK


def cmd_grid(cfg: RunConfig) -> int:
    ev = _evaluator(cfg)
    field = wigner_grid(ev, _slice(cfg), (cfg.res, cfg.res))
    _emit(cfg, field.to_json() + "\n" if cfg.format == "json" else field.to_csv())
    if cfg.out is not None:
        v = field.values
        print(f"grid {cfg.res}x{cfg.res} on {field.slice.name} plane written to {cfg.out}; W in [{v.min():.6g}, {v.max():.6g}]")
    return EXIT_OK


def cmd_scaling(cfg: RunConfig) -> int:
    qn = QuantumNumbers(cfg.N, cfg.d, cfg.E)
    steps = 40 if cfg.steps is None else cfg.steps
    if steps < 1:
        raise UsageError("--steps must be positive")
    u = np.linspace(cfg.u_min, cfg.u_max, steps)
    w = [0.0] if cfg.w_max == 0 else np.linspace(0.0, cfg.w_max, steps)
    rows = scaling_scan(qn, u, w)
    err = max(abs(r.exact - r.predicted) for r in rows)
    top = max(abs(r.predicted) for r in rows)
    summary = {"claim": "hybrid scaling profile", "sup_error": err, "sup_prediction": top}
    if cfg.format == "json":
        text = _table(cfg, ["u", "w", "exact", "predicted", "error_scale", "corrected"], [[r.u, list(r.w), r.exact, r.predicted, r.error_scale, r.corrected] for r in rows], summary)
    else:
        text = _meta(cfg) + "\n" + rows_to_csv(rows)
    _emit(cfg, text)
    print(f"scaling N={cfg.N}: sup|N^-5/3 W - leading| = {err:.4e} ({err / top:.2%} of sup prediction)", file=sys.stderr if cfg.out is None else sys.stdout)
    return EXIT_OK


def _levels(cfg: RunConfig):
    k = 4 if cfg.steps is None else cfg.steps
    if k < 3:
        raise UsageError("pointwise scans need --steps >= 3")
    dbl = sorted({max(1, int(round(cfg.N / 2**j))) for j in range(k)})
    lin = sorted({max(1, int(round(cfg.N * (j + 1) / k))) for j in range(k)})
    return dbl, lin


def cmd_pointwise(cfg: RunConfig) -> int:
    dbl, lin = _levels(cfg)
    reports = {
        "on-orbit": pointwise_scan(dbl, "on-orbit", cfg.E, cfg.d),
        "interior": pointwise_scan(dbl, "interior", cfg.E, cfg.d, t=0.5),
        "off-shell": pointwise_scan(lin, "off-shell", cfg.E, cfg.d),
    }
    rows, summary = [], {}
    for name, rep in reports.items():
        rows += [[name, n, e] for n, e in zip(rep.N, rep.errors)]
        summary[name] = {"target_exponent": rep.target_exponent, "fitted_exponent": rep.exponent, "residual": rep.residual}
    _emit(cfg, _table(cfg, ["regime", "N", "error"], rows, summary))
    line = "; ".join(f"{k}: exponent {v.exponent:.3f}" for k, v in reports.items())
    print(f"pointwise {line}", file=sys.stderr if cfg.out is None else sys.stdout)
    return EXIT_OK


def cmd_weak_limit(cfg: RunConfig) -> int:
    Ns = sorted({max(1, cfg.N // 4), max(1, cfg.N // 2), cfg.N})
    g = GaussianObservable(0.7 * math.sqrt(cfg.E), reference_point(cfg.E).as_array())
    rows = []
    pairs = []
    for N in Ns:
        qn = QuantumNumbers(N, 2, cfg.E)
        for name, obs in (("constant", ConstantObservable()), ("energy", EnergyObservable()), ("gaussian", g)):
            r = weak_limit_test(obs, qn)
            rows.append([name, N, r.lhs, r.rhs, r.error])
            if name == "gaussian":
                pairs.append((N, r.error))
    summary = {"claim": "weak limit", "target_exponent": -1.0}
    if len(pairs) >= 3:
        summary["fitted_exponent"] = rate_fit(pairs).exponent
    _emit(cfg, _table(cfg, ["observable", "N", "lhs", "rhs", "error"], rows, summary))
    return EXIT_OK


def cmd_projector(cfg: RunConfig) -> int:
    qn = QuantumNumbers(cfg.N, 2, cfg.E)
    p = reference_point(cfg.E) if cfg.point is None else PhasePoint.from_array(_parse_vec(cfg.point, 4))
    est = projector_average(p, qn, cfg.K)
    resc = cfg.N ** (-5.0 / 3.0) * est.value if cfg.N else float("nan")
    summary = {"limit_at_orbit": projector_limit(0.0, cfg.E), "K": cfg.K}
    _emit(cfg, _table(cfg, ["value", "value_half", "error_estimate", "rescaled"], [[est.value, est.value_half, est.error_estimate, resc]], summary))
    return EXIT_OK


def cmd_selftest(cfg: RunConfig) -> int:
    lines = []
    results = acceptance.run_all(echo=lambda s: (print(s), lines.append(s)))
    failed = [r.number for r in results if not r.passed]
    summary = f"selftest: {len(results) - len(failed)}/{len(results)} criteria passed"
    if failed:
        summary += "; failed: " + ", ".join(map(str, failed))
    print(summary)
    if cfg.out is not None:
        if cfg.format == "json":
            doc = [{"criterion": r.number, "title": r.title, "pass": r.passed, "detail": r.lines} for r in results]
            _emit(cfg, json.dumps(doc, indent=1) + "\n")
        else:
            _emit(cfg, "\n".join(lines + [summary]) + "\n")
    return EXIT_FAILED if failed else EXIT_OK


HANDLERS = {
    "eval": cmd_eval,
    "grid": cmd_grid,
    "scaling": cmd_scaling,
    "pointwise": cmd_pointwise,
    "weak-limit": cmd_weak_limit,
    "projector": cmd_projector,
    "selftest": cmd_selftest,
}


def run(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
        return HANDLERS[cfg.command](cfg)
    except UsageError as exc:
        print(f"orbit-wigner: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ConfigurationError) as exc:
        print(f"orbit-wigner: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalIntegrityError, OracleError) as exc:
        print(f"orbit-wigner: numerical check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


def main():
    sys.exit(run())
