"""Special functions and quadrature primitives.

Airy Ai/Ai', log-gamma, log-space Gauss-Hermite rules, a scaled Laguerre
recurrence and compensated summation. Every routine here is pure; the
module-level Airy anchor table is built once at import and never mutated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError

__all__ = [
    "QuadratureRule",
    "airy_ai",
    "airy_ai_prime",
    "log_gamma",
    "gauss_hermite",
    "compensated_sum",
    "laguerre_log",
]

# ---------------------------------------------------------------------------
# Airy function
# ---------------------------------------------------------------------------

AI0 = 1.0 / (3.0 ** (2.0 / 3.0) * math.gamma(2.0 / 3.0))
AIP0 = -1.0 / (3.0 ** (1.0 / 3.0) * math.gamma(1.0 / 3.0))

_ANCHOR_STEP = 0.5
_ANCHOR_EDGE = 10.0
_N_TAYLOR = 40
_N_ASYMP = 26


def _asymptotic_coefficients(n):
    u = np.empty(n)
    u[0] = 1.0
    for k in range(1, n):
        u[k] = u[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
    k = np.arange(n)
    v = -(6 * k + 1) / (6 * k - 1) * u
    return u, v


_U, _V = _asymptotic_coefficients(_N_ASYMP)
_SIGN = (-1.0) ** np.arange(_N_ASYMP)


def _asymptotic_right(x):
    """Ai, Ai' for x >= 10 from the exponentially decaying expansion."""
    zeta = (2.0 / 3.0) * x**1.5
    inv = 1.0 / zeta
    powers = inv[..., None] ** np.arange(_N_ASYMP)
    su = (powers * (_SIGN * _U)).sum(axis=-1)
    sv = (powers * (_SIGN * _V)).sum(axis=-1)
    # exp(-zeta) underflows to 0 past x ~ 105, which is the intended value.
    e = np.exp(-zeta) / (2.0 * math.sqrt(math.pi))
    q = x**0.25
    return e / q * su, -e * q * sv


def _asymptotic_left(x):
    """Ai, Ai' for x <= -10 from the oscillatory expansion."""
    z = -x
    zeta = (2.0 / 3.0) * z**1.5
    inv = 1.0 / zeta
    n2 = _N_ASYMP // 2
    even = np.arange(0, 2 * n2, 2)
    odd = even + 1
    alt = (-1.0) ** np.arange(n2)
    pe = inv[..., None] ** even
    po = inv[..., None] ** odd
    p_u = (pe * (alt * _U[even])).sum(axis=-1)
    q_u = (po * (alt * _U[odd])).sum(axis=-1)
    p_v = (pe * (alt * _V[even])).sum(axis=-1)
    q_v = (po * (alt * _V[odd])).sum(axis=-1)
    c = np.cos(zeta - math.pi / 4)
    s = np.sin(zeta - math.pi / 4)
    q = z**0.25
    rp = 1.0 / math.sqrt(math.pi)
    ai = rp / q * (c * p_u + s * q_u)
    aip = rp * q * (s * p_v - c * q_v)
    return ai, aip


def _taylor_step(x0, f0, d0, h):
    """Advance (Ai, Ai') from x0 to x0 + h with the local series of y'' = x y."""
    a_prev2 = np.zeros_like(f0)  # a_{n-1}
    a_prev = f0  # a_n at n = 0
    a_cur = d0  # a_{n+1}
    val = f0 + d0 * h
    der = d0.copy()
    hp = h * 1.0  # h^(n) tracked for derivative accumulation
    hn = h * h  # h^(n+2)
    for n in range(0, _N_TAYLOR):
        a_next = (x0 * a_prev + a_prev2) / ((n + 2) * (n + 1))
        val = val + a_next * hn
        der = der + (n + 2) * a_next * hp
        a_prev2, a_prev, a_cur = a_prev, a_cur, a_next
        hp = hp * h
        hn = hn * h
    return val, der


def _build_anchor_table():
    xs = np.arange(-_ANCHOR_EDGE, _ANCHOR_EDGE + 0.5 * _ANCHOR_STEP, _ANCHOR_STEP)
    ai = np.empty_like(xs)
    aip = np.empty_like(xs)
    i0 = int(round(_ANCHOR_EDGE / _ANCHOR_STEP))
    ai[i0], aip[i0] = AI0, AIP0
    # Left of zero both solutions oscillate, so stepping outward is neutral.
    for i in range(i0, 0, -1):
        f, d = _taylor_step(np.array(xs[i]), np.array(ai[i]), np.array(aip[i]), -_ANCHOR_STEP)
        ai[i - 1], aip[i - 1] = f, d
    # Right of zero Ai is recessive: march inward from the asymptotic edge value.
    f, d = _asymptotic_right(np.array(xs[-1]))
    ai[-1], aip[-1] = f, d
    for i in range(len(xs) - 1, i0 + 1, -1):
        f, d = _taylor_step(np.array(xs[i]), np.array(ai[i]), np.array(aip[i]), -_ANCHOR_STEP)
        ai[i - 1], aip[i - 1] = f, d
    for arr in (xs, ai, aip):
        arr.setflags(write=False)
    return xs, ai, aip


_ANCHOR_X, _ANCHOR_AI, _ANCHOR_AIP = _build_anchor_table()


def _airy_pair(x):
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("Airy function requires finite arguments")
    ai = np.empty_like(x)
    aip = np.empty_like(x)
    right = x >= _ANCHOR_EDGE
    left = x <= -_ANCHOR_EDGE
    mid = ~(right | left)
    if right.any():
        ai[right], aip[right] = _asymptotic_right(x[right])
    if left.any():
        ai[left], aip[left] = _asymptotic_left(x[left])
    if mid.any():
        xm = x[mid]
        idx = np.rint((xm + _ANCHOR_EDGE) / _ANCHOR_STEP).astype(int)
        x0 = _ANCHOR_X[idx]
        ai[mid], aip[mid] = _taylor_step(x0, _ANCHOR_AI[idx], _ANCHOR_AIP[idx], xm - x0)
    return ai, aip


def airy_ai(x):
    """Airy function Ai(x) for real ``x`` (scalar or array).

    Uses local Taylor expansions about a table of anchors on [-10, 10] and the
    standard asymptotic expansions outside it.
    """
    ai, _ = _airy_pair(x)
    return ai if ai.ndim else float(ai)


def airy_ai_prime(x):
    """Derivative Ai'(x); same method and domain as :func:`airy_ai`."""
    _, aip = _airy_pair(x)
    return aip if aip.ndim else float(aip)


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not (x > 0 and math.isfinite(x)):
        raise DomainError(f"log_gamma requires a finite x > 0, got {x!r}")
    return math.lgamma(x)


# ---------------------------------------------------------------------------
# Gauss-Hermite
# ---------------------------------------------------------------------------

_MAX_ORDER = 1024


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Hermite rule for the weight exp(-x^2), weights kept as logs."""

    order: int
    nodes: np.ndarray
    log_weights: np.ndarray

    @property
    def weights(self) -> np.ndarray:
        return np.exp(self.log_weights)

    def scaled(self, precision: float, center: float = 0.0):
        """Nodes and log-weights for the weight exp(-precision (x - center)^2)."""
        r = math.sqrt(precision)
        return center + self.nodes / r, self.log_weights - math.log(r)


def _orthonormal_hermite_log(m, x):
    """Return (p_{m-1}, p_m, log_scale) for orthonormal Hermite polynomials.

    The true values are p * exp(log_scale); rescaling keeps the recurrence
    finite for large m and |x|.
    """
    p_prev = np.zeros_like(x)
    p = np.full_like(x, math.pi**-0.25)
    log_scale = np.zeros_like(x)
    for n in range(m):
        p_next = (x * math.sqrt(2.0) * p - math.sqrt(n) * p_prev) / math.sqrt(n + 1)
        p_prev, p = p, p_next
        big = np.abs(p) > 1e150
        if big.any():
            s = np.abs(p[big])
            p[big] /= s
            p_prev[big] /= s
            log_scale[big] += np.log(s)
    return p_prev, p, log_scale


def gauss_hermite(m: int) -> QuadratureRule:
    """Gauss-Hermite rule of order ``m`` (1 <= m <= 1024).

    Nodes come from the symmetric Jacobi matrix and are polished by Newton
    steps; weights are produced as logarithms via the Christoffel-Darboux
    identity w_k = 1 / (m p_{m-1}(x_k)^2), so nothing underflows.
    """
    if not (isinstance(m, (int, np.integer)) and 1 <= m <= _MAX_ORDER):
        raise DomainError(f"Gauss-Hermite order must be an integer in [1, {_MAX_ORDER}], got {m!r}")
    m = int(m)
    if m == 1:
        nodes = np.zeros(1)
    else:
        off = np.sqrt(np.arange(1, m) / 2.0)
        nodes = eigh_tridiagonal(np.zeros(m), off, eigvals_only=True)
        for _ in range(3):
            pm1, pm, _scale = _orthonormal_hermite_log(m, nodes)
            nodes = nodes - pm / (math.sqrt(2.0 * m) * pm1)
        nodes = np.sort(nodes)
        nodes = 0.5 * (nodes - nodes[::-1])
    pm1, _pm, log_scale = _orthonormal_hermite_log(m, nodes)
    log_w = -math.log(m) - 2.0 * (np.log(np.abs(pm1)) + log_scale)
    log_w = 0.5 * (log_w + log_w[::-1])
    nodes.setflags(write=False)
    log_w.setflags(write=False)
    return QuadratureRule(order=m, nodes=nodes, log_weights=log_w)


# ---------------------------------------------------------------------------
# Summation
# ---------------------------------------------------------------------------


def compensated_sum(terms: Iterable[complex]) -> complex:
    """Sum with compensation for rounding (exactly rounded per component).

    Real and imaginary parts are accumulated separately with ``math.fsum``.
    Real input yields a float, anything complex yields a complex.
    """
    arr = np.asarray(list(terms) if not isinstance(terms, np.ndarray) else terms).ravel()
    if arr.size == 0:
        return 0.0
    if np.iscomplexobj(arr):
        return complex(math.fsum(arr.real.tolist()), math.fsum(arr.imag.tolist()))
    return math.fsum(arr.astype(float).tolist())


# ---------------------------------------------------------------------------
# Laguerre
# ---------------------------------------------------------------------------


def laguerre_log(n: int, x):
    """Sign and log-magnitude of the Laguerre polynomial L_n at ``x``.

    Three-term recurrence with per-element rescaling, so values far beyond
    the double range are representable as ``sign * exp(log_abs)``. Exact
    zeros give sign 0 and log_abs = -inf.
    """
    x = np.asarray(x, dtype=float)
    if n < 0:
        raise DomainError("Laguerre degree must be nonnegative")
    if x.ndim == 0:
        s, la = laguerre_log(n, x.reshape(1))
        return s[0], la[0]
    l_prev = np.ones_like(x)
    log_scale = np.zeros_like(x)
    if n == 0:
        return np.sign(l_prev), log_scale
    l_cur = 1.0 - x
    for k in range(1, n):
        l_next = ((2 * k + 1 - x) * l_cur - k * l_prev) / (k + 1)
        l_prev, l_cur = l_cur, l_next
        mag = np.maximum(np.abs(l_prev), np.abs(l_cur))
        rescale = (mag > 1e100) | ((mag < 1e-100) & (mag > 0))
        if rescale.any():
            s = mag[rescale]
            l_cur[rescale] /= s
            l_prev[rescale] /= s
            log_scale[rescale] += np.log(s)
    with np.errstate(divide="ignore"):
        log_abs = np.log(np.abs(l_cur)) + log_scale
    return np.sign(l_cur), log_abs
