"""Wigner distributions of orbital coherent states.

Three evaluation paths are provided for the planar state on the reference
orbit gamma0:

``exact``
    The Wigner integral after the contour shift v -> s - 2i xi is a
    degree-2N polynomial against a Gaussian. Integrating that polynomial in
    closed form gives

        W(x, xi) = (-1)^N (N+1)^2 / (pi E)^2 * exp(-(N+1)|z|^2 / E)
                   * L_N((N+1) |p|^2 / E),

    with z = x + i xi, p = conj(z_1 - i z_2) and L_N the Laguerre
    polynomial. L_N is evaluated by its scaled three-term recurrence, which
    is stable and accurate to a few ulp up to N = 400 and beyond.

``quadrature``
    The same shifted integral summed on an m x m tensor Gauss-Hermite
    lattice. Exact in exact arithmetic for m >= N + 1, but the node terms
    are exponentially larger than their sum on the orbit, so the
    evaluator measures the cancellation and refuses results it cannot
    certify.

``oracle``
    Adaptive nested quadrature of the unshifted integral over a truncated
    box. Slow; meant for cross-checks at N <= 24.
"""

from __future__ import annotations

import cmath
import json
import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy import integrate

from .errors import ConfigurationError, DomainError, NumericalIntegrityError, OracleError
from .numerics import compensated_sum, gauss_hermite, laguerre_log, log_gamma
from .phase_space import (
    PhasePoint,
    QuantumNumbers,
    UnitaryMap,
    apply_unitary,
    to_complex,
)

__all__ = [
    "METHODS",
    "WignerEvaluator",
    "WignerField",
    "Slice",
    "ConstantObservable",
    "EnergyObservable",
    "GaussianObservable",
    "wigner_gamma0_2d",
    "wigner_gamma0_direct",
    "wigner_orbit",
    "wigner_d",
    "wigner_d_direct",
    "wigner_moment",
    "wigner_grid",
    "origin_value",
]

METHODS = ("exact", "quadrature", "oracle")
MAX_N = 400
ORACLE_MAX_N = 24
IMAG_TOL = 1e-8
THREADS_ENV = "ORBIT_WIGNER_THREADS"


def origin_value(N: int, E: float) -> float:
    """(-1)^N (N+1)^2 / (pi E)^2, the planar value at the origin."""
    return (-1) ** N * (N + 1) ** 2 / (math.pi * E) ** 2


@lru_cache(maxsize=64)
def _rule(m: int):
    return gauss_hermite(m)


def _as_coords(p, d=None) -> np.ndarray:
    if isinstance(p, PhasePoint):
        c = p.as_array()
    else:
        c = np.asarray(p, dtype=float)
    if d is not None and c.shape[-1] != 2 * d:
        raise DomainError(f"expected {2 * d} phase-space coordinates, got {c.shape[-1]}")
    return c


# ---------------------------------------------------------------------------
# planar kernels
# ---------------------------------------------------------------------------


def _w2_closed(N: int, E: float, X: np.ndarray) -> np.ndarray:
    """Vectorized planar Wigner function; X has shape (..., 4) as (x1, x2, xi1, xi2)."""
    x1, x2, k1, k2 = (X[..., i] for i in range(4))
    r2 = x1 * x1 + x2 * x2 + k1 * k1 + k2 * k2
    p2 = (x1 + k2) ** 2 + (x2 - k1) ** 2
    beta = (N + 1) / E
    sign, log_l = laguerre_log(N, beta * p2)
    log_abs = 2.0 * math.log(N + 1) - 2.0 * math.log(math.pi * E) - beta * r2 + log_l
    with np.errstate(under="ignore"):
        return (-1) ** N * sign * np.exp(log_abs)


def _w2_quadrature(N: int, E: float, X: np.ndarray, m: int) -> float:
    x1, x2, k1, k2 = (float(X[i]) for i in range(4))
    rule = _rule(m)
    alpha = (N + 1) / (4.0 * E)
    s, lw = rule.scaled(alpha)
    s1, s2 = np.meshgrid(s, s, indexing="ij")
    log_w = lw[:, None] + lw[None, :]
    # shifted contour v = s - 2 i xi absorbs the plane wave into the Gaussian
    v1 = s1 - 2j * k1
    v2 = s2 - 2j * k2
    a = (x1 + v1 / 2) + 1j * (x2 + v2 / 2)
    b = (x1 - v1 / 2) - 1j * (x2 - v2 / 2)
    if N == 0:
        log_mag = log_w
        phase = np.zeros_like(log_w)
    else:
        with np.errstate(divide="ignore"):
            log_mag = N * (np.log(np.abs(a)) + np.log(np.abs(b))) + log_w
        phase = N * (np.angle(a) + np.angle(b))
    log_pref = (
        (N + 3) * math.log(N + 1)
        - math.log(4.0)
        - 3.0 * math.log(math.pi)
        - (N + 3) * math.log(E)
        - log_gamma(N + 1.0)
        - (N + 1) * (x1 * x1 + x2 * x2 + k1 * k1 + k2 * k2) / E
    )
    # factor out the largest term so the node sum stays in range
    shift = float(np.max(log_mag))
    terms = np.exp(log_mag - shift) * np.exp(1j * phase)
    total = compensated_sum(terms.ravel())
    mass = math.fsum(np.abs(terms).ravel().tolist())
    scale = math.exp(log_pref + shift) if log_pref + shift < 700 else math.inf
    value = complex(total) * scale
    bound = IMAG_TOL * (abs(value.real) + (N + 1) ** 2 / E**2)
    # each term carries O(N) roundings from the powers
    noise = (4 * N + 8) * np.finfo(float).eps * mass * scale
    if not math.isfinite(noise) or noise > bound:
        raise NumericalIntegrityError(
            f"Gauss-Hermite sum cancels too strongly at N={N}: rounding bound {noise:.3g} exceeds {bound:.3g}"
        )
    if abs(value.imag) > bound:
        raise NumericalIntegrityError(f"imaginary part {value.imag:.3g} exceeds {bound:.3g}")
    return value.real


def wigner_gamma0_direct(qn: QuantumNumbers, p, tol: float = 1e-9) -> float:
    """Planar Wigner function by nested adaptive quadrature of the defining integral.

    The integrand phi(x + v/2) conj(phi(x - v/2)) exp(-i <v, xi>/hbar) is
    integrated over a box |v_j| <= R, with R chosen from the Gaussian
    envelope so the discarded tail is far below ``tol * (N+1)^2 / E^2``.
    """
    N, E = qn.N, qn.E
    if qn.d != 2 and not (isinstance(p, PhasePoint) and p.d == 2):
        raise DomainError("the planar oracle needs d = 2")
    if N > ORACLE_MAX_N:
        raise DomainError(f"oracle limited to N <= {ORACLE_MAX_N}")
    x1, x2, k1, k2 = (float(c) for c in _as_coords(p, 2))
    beta = (N + 1) / E
    scale = (N + 1) ** 2 / E**2
    log_c2 = (N + 1) * math.log(beta) - math.log(math.pi) - log_gamma(N + 1.0)
    log_norm = log_c2 - 2.0 * math.log(2.0 * math.pi) + 2.0 * math.log(beta)
    x_sq = x1 * x1 + x2 * x2

    # |integrand| <= exp(log_norm) s^N exp(-beta s), s = |x|^2 + |v|^2/4
    def envelope(R):
        s = x_sq + R * R / 4.0
        return log_norm + (N * math.log(s) if N else 0.0) - beta * s

    R = 2.0 * math.sqrt(max(N / beta, 1e-12)) + 1.0
    target = math.log(tol * scale * 1e-4)
    while envelope(R) > target:
        R *= 1.25

    def integrand(v2, v1):
        a = complex(x1 + v1 / 2, x2 + v2 / 2)
        b = complex(x1 - v1 / 2, -(x2 - v2 / 2))
        s = x_sq + (v1 * v1 + v2 * v2) / 4.0
        log_mag = log_norm - beta * s
        poly = (a * b) ** N
        val = poly * cmath.exp(complex(log_mag, -beta * (v1 * k1 + v2 * k2)))
        return val.real

    opts = {"limit": 400, "epsabs": tol * scale / 8.0, "epsrel": 0.0}
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            val, err = integrate.nquad(integrand, [[-R, R], [-R, R]], opts=[opts, opts])
        except integrate.IntegrationWarning as exc:
            raise OracleError(f"direct oracle did not converge: {exc}") from exc
    if err > tol * scale:
        raise OracleError(f"direct oracle error estimate {err:.3g} exceeds {tol * scale:.3g}")
    return float(val)


# ---------------------------------------------------------------------------
# evaluator
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WignerEvaluator:
    """Configured evaluator for the state on gamma0 (planar factor in d >= 3).

    ``m`` is the Gauss-Hermite order per axis. It must be at least N + 2
    for the ``exact`` and ``quadrature`` methods; the closed-form path does
    not consume nodes but keeps the contract so a configuration can switch
    methods without becoming invalid.
    """

    qn: QuantumNumbers
    m: int | None = None
    method: str = "exact"
    oracle_tol: float = field(default=1e-9, compare=False)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ConfigurationError(f"unknown method {self.method!r}; choose from {METHODS}")
        if self.qn.N > MAX_N:
            raise DomainError(f"N <= {MAX_N} supported, got {self.qn.N}")
        m = self.qn.N + 4 if self.m is None else int(self.m)
        if self.method in ("exact", "quadrature") and m < self.qn.N + 2:
            raise ConfigurationError(f"m = {m} < N + 2 = {self.qn.N + 2}")
        if m > 1024:
            raise ConfigurationError("m must not exceed 1024")
        object.__setattr__(self, "m", m)

    @property
    def rule(self):
        return _rule(self.m)

    def planar(self, X) -> float:
        """Planar Wigner value at 4 coordinates, energy taken from the planar factor."""
        qn2 = QuantumNumbers(self.qn.N, 2, self.qn.energy_2d)
        X = np.asarray(X, dtype=float)
        if self.method == "exact":
            return float(_w2_closed(qn2.N, qn2.E, X))
        if self.method == "quadrature":
            return _w2_quadrature(qn2.N, qn2.E, X, self.m)
        return wigner_gamma0_direct(qn2, X, tol=self.oracle_tol)

    def __call__(self, p) -> float:
        c = _as_coords(p, self.qn.d)
        if self.qn.d == 2:
            return self.planar(c)
        return wigner_d(self, c)

    def evaluate_many(self, X) -> np.ndarray:
        """Values at an array of points of shape (..., 2d)."""
        X = np.asarray(X, dtype=float)
        d = self.qn.d
        if X.shape[-1] != 2 * d:
            raise DomainError(f"expected trailing dimension {2 * d}")
        if self.method == "exact":
            planar = X[..., [0, 1, d, d + 1]]
            vals = _w2_closed(self.qn.N, self.qn.energy_2d, planar)
            if d > 2:
                vals = vals * _transverse_factor(self.qn, X)
            return vals
        flat = X.reshape(-1, 2 * d)
        out = np.array([self(row) for row in flat])
        return out.reshape(X.shape[:-1])


def wigner_gamma0_2d(ev: WignerEvaluator, p) -> float:
    """Planar Wigner function of the coherent state on gamma0."""
    if ev.qn.d != 2:
        raise DomainError("wigner_gamma0_2d requires d = 2")
    return ev.planar(_as_coords(p, 2))


def wigner_orbit(ev: WignerEvaluator, U: UnitaryMap, p: PhasePoint) -> float:
    """Wigner function of the state on the orbit U gamma0, evaluated at p.

    Uses metaplectic covariance: W_U(p) = W_0(U^dagger p).
    """
    if not isinstance(p, PhasePoint):
        p = PhasePoint.from_array(p)
    return wigner_gamma0_2d(ev, apply_unitary(U, p, adjoint=True))


def wigner_orbit_many(ev: WignerEvaluator, vecs: np.ndarray, p: PhasePoint) -> np.ndarray:
    """Values at ``p`` for many orbits, given as unit vectors f_k = U_k e0 (shape (K, 2)).

    Only the class of U_k e0 enters: |<e0, U^dagger z>| = |<U e0, z>|.
    """
    N, E = ev.qn.N, ev.qn.E
    z = to_complex(p)
    inner = vecs.conj() @ z
    p2 = 2.0 * np.abs(inner) ** 2
    beta = (N + 1) / E
    sign, log_l = laguerre_log(N, beta * p2)
    r2 = float(np.vdot(z, z).real)
    log_abs = 2.0 * math.log(N + 1) - 2.0 * math.log(math.pi * E) - beta * r2 + log_l
    return (-1) ** N * sign * np.exp(log_abs)


# ---------------------------------------------------------------------------
# d dimensions
# ---------------------------------------------------------------------------


def _transverse_factor(qn: QuantumNumbers, X: np.ndarray):
    d = qn.d
    hbar = qn.hbar
    t = X[..., 2:d] ** 2 + X[..., d + 2 : 2 * d] ** 2
    return (math.pi * hbar) ** (2 - d) * np.exp(-t.sum(axis=-1) / hbar)


def wigner_d(ev: WignerEvaluator, p) -> float:
    """Wigner function of the d-dimensional product state.

    The planar factor is evaluated at the common hbar = E / (N + d/2), i.e.
    with planar energy hbar (N + 1), and multiplied by the ground-state
    Wigner functions of the transverse oscillators.
    """
    d = ev.qn.d
    c = _as_coords(p, d)
    planar = c[[0, 1, d, d + 1]]
    return float(ev.planar(planar) * _transverse_factor(ev.qn, c))


def _log_norm_d(N: int, d: int, hbar: float) -> float:
    """log of the normalizing constant of the d-dimensional product state."""
    return -0.5 * (N + 1) * math.log(hbar) - 0.5 * math.log(math.pi) - 0.5 * log_gamma(N + 1.0) - 0.25 * (
        d - 2
    ) * math.log(math.pi * hbar)


def wigner_d_direct(qn: QuantumNumbers, p, nodes: int = 96, tol: float = 1e-9) -> float:
    """Brute-force tensor Gauss-Legendre evaluation of the d = 3 Wigner integral.

    The full three-dimensional integrand is sampled on a box chosen from the
    Gaussian envelope; the rule is refined by half again its node count and
    an :class:`OracleError` is raised if the two results disagree beyond
    ``tol * (N+1)^3 / E^3``.
    """
    if qn.d != 3:
        raise DomainError("the brute-force oracle is implemented for d = 3")
    if qn.N > 12:
        raise DomainError("brute-force d = 3 oracle limited to N <= 12")
    c = _as_coords(p, 3)
    N, hbar = qn.N, qn.hbar
    x, xi = c[:3], c[3:]
    log_norm = 2.0 * _log_norm_d(N, 3, hbar) - 3.0 * math.log(2.0 * math.pi * hbar)
    x_sq = float(x @ x)
    s_max = max(x_sq, N * hbar)

    def envelope(R):
        s = x_sq + R * R / 4.0
        return log_norm + (N * math.log(s) if N else 0.0) - s / hbar

    R = 2.0 * math.sqrt(s_max) + 1.0
    scale = ((N + 1) / qn.E) ** 3
    while envelope(R) > math.log(tol * scale * 1e-6):
        R *= 1.2

    def run(n):
        t, w = np.polynomial.legendre.leggauss(n)
        v = R * t
        w = R * w
        v1, v2 = np.meshgrid(v, v, indexing="ij")
        w12 = np.outer(w, w)
        parts = []
        for v3, w3 in zip(v, w):
            a = (x[0] + v1 / 2) + 1j * (x[1] + v2 / 2)
            b = (x[0] - v1 / 2) - 1j * (x[1] - v2 / 2)
            s = x_sq + (v1 * v1 + v2 * v2 + v3 * v3) / 4.0
            ph = -(v1 * xi[0] + v2 * xi[1] + v3 * xi[2]) / hbar
            vals = (a * b) ** N * np.exp(log_norm - s / hbar + 1j * ph)
            parts.append(float(np.sum((w12 * w3 * vals).real)))
        return math.fsum(parts)

    first = run(nodes)
    second = run(nodes + nodes // 2)
    if abs(first - second) > tol * scale:
        raise OracleError(f"3D oracle not converged: {first!r} vs {second!r}")
    return second


# ---------------------------------------------------------------------------
# moments
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstantObservable:
    value: float = 1.0


@dataclass(frozen=True)
class EnergyObservable:
    """The Hamiltonian (|x|^2 + |xi|^2) / 2."""


@dataclass(frozen=True)
class GaussianObservable:
    """exp(-|X - center|^2 / (2 sigma^2)) on T*R^2."""

    sigma: float
    center: tuple = (0.0, 0.0, 0.0, 0.0)

    def __post_init__(self):
        if not self.sigma > 0:
            raise DomainError("sigma must be positive")
        c = self.center.as_array() if isinstance(self.center, PhasePoint) else np.asarray(self.center, float)
        if c.shape != (4,):
            raise DomainError("Gaussian observables live on T*R^2")
        object.__setattr__(self, "center", tuple(float(v) for v in c))

    def __call__(self, X):
        X = np.asarray(X, dtype=float)
        diff = X - np.asarray(self.center)
        return np.exp(-np.sum(diff * diff, axis=-1) / (2.0 * self.sigma**2))


def _half_square(X):
    return 0.5 * np.sum(X * X, axis=-1)


def wigner_moment(ev: WignerEvaluator, observable) -> float:
    """Integral of observable * W over T*R^2 by merged-Gaussian tensor Gauss-Hermite.

    W is a degree-2N polynomial times exp(-beta |X|^2). Each supported
    observable is a polynomial of degree <= 2 times a Gaussian, so the two
    Gaussians merge into one weight exp(-P |X - c'|^2) and the remaining
    polynomial is integrated exactly with m = N + 6 nodes per axis.
    """
    if ev.qn.d != 2:
        raise DomainError("moments are implemented for d = 2")
    N, E = ev.qn.N, ev.qn.E
    beta = (N + 1) / E
    poly = None
    factor = 1.0
    gam, c = 0.0, np.zeros(4)
    if isinstance(observable, ConstantObservable):
        factor = observable.value
    elif isinstance(observable, EnergyObservable):
        poly = _half_square
    elif isinstance(observable, GaussianObservable):
        gam = 1.0 / (2.0 * observable.sigma**2)
        c = np.asarray(observable.center)
    else:
        raise ConfigurationError(f"unsupported observable {observable!r}")

    prec = beta + gam
    center = gam * c / prec
    log_k = -beta * gam / prec * float(c @ c)

    s, lw = _rule(N + 6).scaled(prec)
    grids = np.meshgrid(*([s] * 4), indexing="ij")
    X = np.stack([g + center[i] for i, g in enumerate(grids)], axis=-1)
    log_w = lw[:, None, None, None] + lw[None, :, None, None] + lw[None, None, :, None] + lw[None, None, None, :]
    p2 = (X[..., 0] + X[..., 3]) ** 2 + (X[..., 1] - X[..., 2]) ** 2
    sign, log_l = laguerre_log(N, beta * p2)
    with np.errstate(under="ignore"):
        vals = sign * np.exp(log_w + log_l)
    if poly is not None:
        vals = vals * poly(X)
    total = compensated_sum(vals.ravel())
    return factor * origin_value(N, E) * math.exp(log_k) * total


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Slice:
    """Affine plane origin + s span1 + t span2 with s, t in [-1, 1]."""

    origin: PhasePoint
    span1: PhasePoint
    span2: PhasePoint
    name: str = "custom"

    def describe(self) -> str:
        f = lambda p: ";".join(f"{v:.17g}" for v in p.as_array())  # noqa: E731
        return f"{self.name}:origin={f(self.origin)}:u={f(self.span1)}:v={f(self.span2)}"

    def lattice(self, n1: int, n2: int) -> np.ndarray:
        s = np.linspace(-1.0, 1.0, n1) if n1 > 1 else np.zeros(1)
        t = np.linspace(-1.0, 1.0, n2) if n2 > 1 else np.zeros(1)
        o, a, b = self.origin.as_array(), self.span1.as_array(), self.span2.as_array()
        return o + s[:, None, None] * a + t[None, :, None] * b


@dataclass(frozen=True)
class WignerField:
    """Sampled Wigner values on a plane, with metadata for export."""

    qn: QuantumNumbers
    method: str
    m: int
    slice: Slice
    points: np.ndarray  # (n1, n2, 2d)
    values: np.ndarray  # (n1, n2)

    @property
    def resolution(self):
        return self.values.shape

    def header(self) -> str:
        q = self.qn
        return f"# qn={q.N},{q.d},{q.E!r} method {self.method} m {self.m} slice={self.slice.describe()}"

    def to_csv(self) -> str:
        d = self.qn.d
        cols = [f"x{k + 1}" for k in range(d)] + [f"xi{k + 1}" for k in range(d)]
        lines = [self.header(), ",".join(["i", "j", *cols, "W"])]
        n1, n2 = self.values.shape
        for i in range(n1):
            for j in range(n2):
                coords = ",".join(f"{v:.17g}" for v in self.points[i, j])
                lines.append(f"{i},{j},{coords},{self.values[i, j]:.17g}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        q = self.qn
        doc = {
            "qn": {"N": q.N, "d": q.d, "E": q.E},
            "method": self.method,
            "m": self.m,
            "slice": {
                "name": self.slice.name,
                "origin": self.slice.origin.as_array().tolist(),
                "span1": self.slice.span1.as_array().tolist(),
                "span2": self.slice.span2.as_array().tolist(),
            },
            "resolution": list(self.values.shape),
            "points": self.points.tolist(),
            "values": self.values.tolist(),
        }
        return json.dumps(doc, indent=1)


def _thread_count() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise ConfigurationError(f"{THREADS_ENV} must be an integer") from exc
    return min(8, os.cpu_count() or 1)


def wigner_grid(ev: WignerEvaluator, sl: Slice, resolution, threads: int | None = None) -> WignerField:
    """Evaluate ``ev`` on an n1 x n2 lattice of the slice.

    Rows are distributed over a thread pool; every value depends only on its
    own point, so the result does not depend on the thread count.
    """
    n1, n2 = (resolution, resolution) if np.isscalar(resolution) else resolution
    n1, n2 = int(n1), int(n2)
    if not (1 <= n1 <= 2048 and 1 <= n2 <= 2048):
        raise DomainError("grid resolution must lie in [1, 2048] per axis")
    if sl.origin.d != ev.qn.d:
        raise DomainError("slice dimension does not match the evaluator")
    pts = sl.lattice(n1, n2)
    threads = threads or _thread_count()
    chunks = np.array_split(np.arange(n1), min(threads * 4, n1))
    chunks = [c for c in chunks if c.size]
    out = np.empty((n1, n2))

    def work(rows):
        return rows, ev.evaluate_many(pts[rows])

    if threads == 1 or len(chunks) == 1:
        results = list(map(work, chunks))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, chunks))
    for rows, vals in results:
        out[rows] = vals
    pts.setflags(write=False)
    out.setflags(write=False)
    return WignerField(ev.qn, ev.method, ev.m, sl, pts, out)
