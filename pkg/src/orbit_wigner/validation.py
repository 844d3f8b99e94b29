"""Experiment drivers comparing exact Wigner values with asymptotic predictions."""

from __future__ import annotations

import io
import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .asymptotics import edge_profile, predict_pointwise, predict_scaling
from .errors import DomainError
from .phase_space import PhasePoint, QuantumNumbers, build_frame, cp1_lattice, scaling_point
from .wigner_exact import (
    ConstantObservable,
    EnergyObservable,
    WignerEvaluator,
    wigner_moment,
    wigner_orbit_many,
)

__all__ = [
    "ConvergenceReport",
    "ScalingRow",
    "WeakLimitResult",
    "ProjectorEstimate",
    "rate_fit",
    "reference_point",
    "scaling_scan",
    "pointwise_scan",
    "pointwise_errors",
    "weak_limit_test",
    "orbit_average",
    "projector_average",
    "rows_to_csv",
]

ENVELOPE_WINDOW = 8


@dataclass(frozen=True)
class ConvergenceReport:
    """Log-log least-squares fit of errors against N."""

    N: tuple
    errors: tuple
    exponent: float
    residual: float
    claim: str = ""
    target_exponent: float | None = None

    def summary(self, passed: bool | None = None) -> dict:
        return {
            "claim": self.claim,
            "target_exponent": self.target_exponent,
            "fitted_exponent": self.exponent,
            "pass": passed,
        }

    def to_csv(self) -> str:
        lines = ["N,error"] + [f"{n},{e:.17g}" for n, e in zip(self.N, self.errors)]
        return "\n".join(lines) + "\n"

    def to_json(self, passed: bool | None = None) -> str:
        doc = self.summary(passed)
        doc.update({"N": list(self.N), "errors": list(self.errors), "residual": self.residual})
        return json.dumps(doc, indent=1)


def rate_fit(pairs, claim: str = "", target_exponent: float | None = None) -> ConvergenceReport:
    """Fit error = C N^p by least squares in log-log coordinates."""
    pairs = list(pairs)
    if len(pairs) < 3:
        raise DomainError("rate_fit needs at least 3 (N, error) pairs")
    n = np.array([p[0] for p in pairs], dtype=float)
    e = np.array([p[1] for p in pairs], dtype=float)
    if np.any(~(e > 0)) or np.any(~(n > 0)):
        raise DomainError("rate_fit needs positive N and errors")
    x, y = np.log(n), np.log(e)
    slope, icept = np.polyfit(x, y, 1)
    res = float(np.sqrt(np.mean((y - (slope * x + icept)) ** 2)))
    return ConvergenceReport(
        tuple(int(v) if float(v).is_integer() else float(v) for v in n),
        tuple(float(v) for v in e),
        float(slope),
        res,
        claim,
        target_exponent,
    )


def reference_point(E: float, d: int = 2) -> PhasePoint:
    """gamma0(0) = sqrt(E)(1, 0, ..; 0, 1, ..) embedded in T*R^d."""
    x = np.zeros(d)
    xi = np.zeros(d)
    x[0] = xi[1] = math.sqrt(E)
    return PhasePoint(x, xi)


# ---------------------------------------------------------------------------
# scaling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScalingRow:
    u: float
    w: tuple
    exact: float
    predicted: float
    error_scale: float
    corrected: float


def scaling_scan(qn: QuantumNumbers, u_grid, w_grid=None) -> list:
    """Compare N^{-(d-1/3)} W with the leading uniform term on a (u, w) grid.

    ``w_grid`` holds transverse vectors of length 2(d-1) (scalars are read
    as multiples of the first normal). Defaults to w = 0.
    """
    d, N = qn.d, qn.N
    if N < 1:
        raise DomainError("scaling scans need N >= 1")
    frame = build_frame(reference_point(qn.E, d), qn.E)
    ev = WignerEvaluator(qn)
    k = 2 * (d - 1)
    if w_grid is None:
        w_grid = [np.zeros(k)]
    ws = []
    for w in w_grid:
        w = np.atleast_1d(np.asarray(w, dtype=float))
        if w.size == 1 and k > 1:
            w = np.concatenate([w, np.zeros(k - 1)])
        ws.append(w)
    scale = N ** (-(d - 1.0 / 3.0))
    rows = []
    for u in u_grid:
        prof = edge_profile(float(u))
        for w in ws:
            p = scaling_point(frame, float(u), w)
            pred = predict_scaling(prof, w, qn)
            rows.append(
                ScalingRow(float(u), tuple(w.tolist()), scale * ev(p), pred.value, pred.error_scale, pred.corrected)
            )
    return rows


def rows_to_csv(rows) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    cols = list(asdict(rows[0]).keys())
    buf.write(",".join(cols) + "\n")
    for r in rows:
        vals = []
        for c in cols:
            v = getattr(r, c)
            if isinstance(v, tuple):
                vals.append(";".join(f"{x:.17g}" for x in v))
            elif isinstance(v, float):
                vals.append(f"{v:.17g}")
            else:
                vals.append(str(v))
        buf.write(",".join(vals) + "\n")
    return buf.getvalue()


# ---------------------------------------------------------------------------
# pointwise regimes
# ---------------------------------------------------------------------------


def _regime_point(regime: str, E: float, d: int, t: float) -> PhasePoint:
    base = reference_point(E, d)
    if regime == "on-orbit":
        return base
    if regime == "interior":
        return PhasePoint(t * base.x, t * base.xi)
    if regime == "off-shell":
        x = np.zeros(d)
        x[0] = math.sqrt(E)
        return PhasePoint(x, np.zeros(d))
    if regime == "origin":
        return PhasePoint(np.zeros(d), np.zeros(d))
    raise DomainError(f"unknown regime {regime!r}")


def pointwise_errors(N_list, regime: str, E: float = 1.0, d: int = 2, t: float = 0.5):
    """Raw per-N errors against the regime prediction (absolute values for decay regimes)."""
    p = _regime_point(regime, E, d, t)
    out = []
    for N in N_list:
        qn = QuantumNumbers(int(N), d, E)
        w = WignerEvaluator(qn)(p)
        pred = predict_pointwise(regime, qn, t if regime == "interior" else None)
        if regime == "on-orbit":
            out.append(abs(N ** pred.scale_exponent * w - pred.value))
        elif regime == "interior":
            out.append(abs(N ** pred.scale_exponent * w))
        elif regime == "off-shell":
            out.append(abs(w))
        else:
            out.append(abs(w - pred.value) / abs(pred.value))
    return out


def pointwise_scan(N_list, regime: str, E: float = 1.0, d: int = 2, t: float = 0.5, window: int = ENVELOPE_WINDOW):
    """Convergence report for one pointwise regime.

    For the interior regime the value oscillates in N, so each error is the
    maximum of |N^{-(d-1/3)} W| over the window N, N+1, ..., N+window-1.
    """
    N_list = [int(n) for n in N_list]
    targets = {"on-orbit": -2.0 / 3.0, "interior": -1.0 / 6.0, "off-shell": -math.inf, "origin": None}
    if regime not in targets:
        raise DomainError(f"unknown regime {regime!r}")
    if regime == "interior":
        errs = []
        for N in N_list:
            errs.append(max(pointwise_errors(range(N, N + window), regime, E, d, t)))
    else:
        errs = pointwise_errors(N_list, regime, E, d, t)
    if regime == "origin":
        # exact identity: report the relative errors without a rate
        floor = [max(e, 1e-300) for e in errs]
        return rate_fit(zip(N_list, floor), claim="origin identity", target_exponent=None)
    return rate_fit(zip(N_list, errs), claim=f"{regime} pointwise rate", target_exponent=targets[regime])


# ---------------------------------------------------------------------------
# weak limit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeakLimitResult:
    lhs: float
    rhs: float
    error: float


def orbit_average(observable, E: float, nodes: int = 512) -> float:
    """(1/2pi) int_0^{2pi} a(gamma0(t)) dt by the periodic trapezoid rule."""
    if isinstance(observable, ConstantObservable):
        return observable.value
    if isinstance(observable, EnergyObservable):
        return E
    t = 2.0 * math.pi * np.arange(nodes) / nodes
    r = math.sqrt(E)
    pts = np.stack([r * np.cos(t), r * np.sin(t), -r * np.sin(t), r * np.cos(t)], axis=-1)
    return math.fsum(observable(pts).tolist()) / nodes


def weak_limit_test(observable, qn: QuantumNumbers) -> WeakLimitResult:
    if qn.N > 20:
        raise DomainError("weak-limit integration is capped at N <= 20")
    lhs = wigner_moment(WignerEvaluator(qn), observable)
    rhs = orbit_average(observable, qn.E)
    return WeakLimitResult(lhs, rhs, abs(lhs - rhs))


# ---------------------------------------------------------------------------
# projector
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProjectorEstimate:
    value: float
    value_half: float
    error_estimate: float
    K: int


def projector_average(p: PhasePoint, qn: QuantumNumbers, K: int) -> ProjectorEstimate:
    """(N+1) times the CP^1 average of the coherent-state Wigner functions at p.

    Orbits come from the spherical Fibonacci lattice of size K; the
    error estimate is the difference from the lattice of size K // 2.
    """
    if qn.d != 2:
        raise DomainError("projector averages are implemented for d = 2")
    if K < 2:
        raise DomainError("K must be at least 2")
    ev = WignerEvaluator(qn)

    def avg(k):
        vals = wigner_orbit_many(ev, cp1_lattice(k), p)
        return (qn.N + 1) * math.fsum(vals.tolist()) / k

    full, half = avg(K), avg(K // 2)
    return ProjectorEstimate(full, half, abs(full - half), K)
