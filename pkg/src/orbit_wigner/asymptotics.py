"""Asymptotic predictions for the Wigner function near the orbit.

The normal coordinate u measures the radial offset (1 + u)(x, xi) from the
energy surface. The uniform Airy expansion is built from the edge profile

    a(u)  interface coordinate, a(u)^{3/2} = (3i/4) [Phi(v+) - Phi(v-)]
    b(u)  = u (u + 2) = (i/2) [Phi(v+) + Phi(v-)]
    mu00  leading amplitude, mu10 the amplitude of the Ai' term

where Phi is the one-dimensional phase left after the transverse
stationary phase, and v+- = +-2i sqrt(u(u+2)) are its two saddles.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericalIntegrityError
from .numerics import airy_ai, airy_ai_prime
from .phase_space import QuantumNumbers

__all__ = [
    "EdgeProfile",
    "SaddleData",
    "ScalingPrediction",
    "PointwisePrediction",
    "SegmentAreas",
    "phi_of",
    "dphi",
    "saddles",
    "a_three_halves",
    "a_of",
    "edge_profile",
    "mu00",
    "mu10",
    "mu00_closed_form",
    "predict_scaling",
    "predict_limit",
    "predict_pointwise",
    "segment_area_check",
    "projector_limit",
    "ON_ORBIT_CONSTANT",
    "MU00_AT_ZERO",
]

U_MIN, U_MAX = -0.95, 2.0
SERIES_RADIUS = 1e-3
MU00_AT_ZERO = 2.0 ** (5.0 / 3.0) * math.pi

# a(u) = 2^{2/3} sum_k A_k u^k near 0 (exact rationals from the closed form)
_A_SERIES = (
    0.0,
    2.0,
    1.0 / 5.0,
    -4.0 / 175.0,
    37.0 / 7875.0,
    -3698.0 / 3031875.0,
    71237.0 / 197071875.0,
    -7255672.0 / 62077640625.0,
    30316679.0 / 753799921875.0,
)
# Taylor coefficients about u = 0 of the complex amplitude formulas,
# computed at 40 digits (tools/derive_series.py).
_MU00_SERIES = (
    9.973934966328010133,
    23.93744391918722432,
    89.67042484012991968,
    209.8262610630554208,
    382.6515385217867761,
    629.4474321768701054,
    914.95722112608,
)
_MU10_SERIES = (
    7.916317428905745746,
    33.77628769666451518,
    72.58886114809954290,
    157.9704912613107709,
    274.9592685407208365,
    418.7626612911411832,
    574.68967723232,
)


def _horner(coeffs, u):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * u + c
    return acc


def _check_u(u, lo=U_MIN, hi=U_MAX):
    if not (math.isfinite(u) and lo <= u <= hi):
        raise DomainError(f"u = {u!r} outside [{lo}, {hi}]")


# ---------------------------------------------------------------------------
# phase and saddles
# ---------------------------------------------------------------------------


def phi_of(v2: complex, u: float) -> complex:
    """Phi(v2, u) = -i log[(1 + u + i v2/2)^2] + (i/4) v2^2 - v2 (1 + u), principal log."""
    w = complex(1.0 + u, 0.0) + 0.5j * v2
    w2 = w * w
    if w2 == 0 or (w2.real < 0 and abs(w2.imag) <= 1e-9 * abs(w2)):
        raise DomainError("Phi evaluated on the branch cut of the logarithm")
    return -1j * cmath.log(w2) + 0.25j * v2 * v2 - v2 * (1.0 + u)


def dphi(v2: complex, u: float) -> complex:
    """Closed-form derivative -(v2^2/4 + u(u+2)) / (1 + u + i v2/2)."""
    return -(v2 * v2 / 4.0 + u * (u + 2.0)) / (1.0 + u + 0.5j * v2)


@dataclass(frozen=True)
class SaddleData:
    u: float
    v_plus: complex
    v_minus: complex
    phi_plus: complex
    phi_minus: complex


def saddles(u: float) -> SaddleData:
    """The two critical points of Phi(., u) and the phase values there."""
    _check_u(u)
    s = cmath.sqrt(u * (u + 2.0))
    vp, vm = 2j * s, -2j * s
    return SaddleData(u, vp, vm, phi_of(vp, u), phi_of(vm, u))


# ---------------------------------------------------------------------------
# edge profile
# ---------------------------------------------------------------------------


def a_three_halves(u: float) -> complex:
    """a(u)^{3/2} from the arccos / arccosh case split (complex; imaginary for u < 0)."""
    _check_u(u, -1.0, math.inf)
    if u < 0:
        return 3j * (u + 1.0) * math.sqrt(-u * (u + 2.0)) - 3j * math.acos(1.0 + u)
    return complex(3.0 * (u + 1.0) * math.sqrt(u * (u + 2.0)) - 3.0 * math.acosh(1.0 + u), 0.0)


def a_of(u: float) -> float:
    """Interface coordinate a(u), real and with the sign of u.

    The 2/3 power is taken on the real branch: a = sign(u) |a^{3/2}|^{2/3}.
    """
    _check_u(u)
    if abs(u) < SERIES_RADIUS:
        return 2.0 ** (2.0 / 3.0) * _horner(_A_SERIES, u)
    A = a_three_halves(u)
    mag = abs(A) ** (2.0 / 3.0)
    return -mag if u < 0 else mag


@dataclass(frozen=True)
class EdgeProfile:
    u: float
    a: float
    b: float
    mu00: float


def edge_profile(u: float) -> EdgeProfile:
    _check_u(u)
    return EdgeProfile(u=float(u), a=a_of(u), b=u * (u + 2.0), mu00=mu00(u))


# ---------------------------------------------------------------------------
# amplitudes
# ---------------------------------------------------------------------------


def _g(v: complex, u: float) -> complex:
    w = 1.0 + u + 0.5j * v
    return math.sqrt(2.0) * cmath.exp(-v * v / 4.0 - 1j * v * (1.0 + u)) / cmath.sqrt(1.0 / (w * w) + 1.0)


def _saddle_amplitudes(u: float):
    """g(v+-)/T'(v+-) and sqrt(a), with T' on the branch continuous from 2^{-2/3} i at u = 0."""
    s = cmath.sqrt(u * (u + 2.0))
    ah = cmath.sqrt(a_of(u))
    tp = 1j * cmath.sqrt(((1.0 + u) * s + s * s) / (2.0 * ah))
    tm = 1j * cmath.sqrt(((1.0 + u) * s - s * s) / (2.0 * ah))
    return _g(2j * s, u) / tp, _g(-2j * s, u) / tm, ah


def _real_or_raise(z: complex, what: str) -> float:
    if abs(z.imag) > 1e-9 * abs(z.real):
        raise NumericalIntegrityError(f"{what} has imaginary residue {z.imag:.3g}")
    return z.real


def mu00(u: float) -> float:
    """Leading amplitude mu00(u) (mu00(0) = 2^{5/3} pi)."""
    _check_u(u)
    if abs(u) < SERIES_RADIUS:
        return _horner(_MU00_SERIES, u)
    gp, gm, _ = _saddle_amplitudes(u)
    return _real_or_raise(1j * math.pi * (gp + gm), "mu00")


def mu10(u: float) -> float:
    """Amplitude of the Ai' term in the uniform expansion."""
    _check_u(u)
    if abs(u) < SERIES_RADIUS:
        return _horner(_MU10_SERIES, u)
    gp, gm, ah = _saddle_amplitudes(u)
    return _real_or_raise(1j * math.pi * (gp - gm) / ah, "mu10")


def mu00_closed_form(u: float) -> float:
    """Real closed form of mu00, valid for u > 0 only."""
    if not u > 0:
        raise DomainError("the real closed form of mu00 needs u > 0")
    r = math.sqrt(u * (u + 2.0))
    q = u * (u + 2.0)
    a = a_of(u)
    t1 = math.exp(2 * (u + 1) * r) * math.sqrt((-q + (u + 1) * r) / (1 + u + r))
    t2 = math.exp(-2 * (u + 1) * r) * math.sqrt((q + (u + 1) * r) / (1 + u - r))
    return 2 * math.pi * abs(a) ** 0.25 * math.exp(q) / math.sqrt(2 * u * (u + 1) * (u + 2)) * abs(t1 + t2)


# ---------------------------------------------------------------------------
# predictions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScalingPrediction:
    """Prediction for N^{-(d-1/3)} W at a scaling point.

    ``value`` is the leading term; ``error_scale`` is |Ai'(a N^{2/3})| N^{-2/3};
    ``corrected`` adds the Ai' term with amplitude mu10, which enters at
    relative order N^{-1/3}.
    """

    value: float
    error_scale: float
    corrected: float


def predict_scaling(profile: EdgeProfile, w, qn: QuantumNumbers) -> ScalingPrediction:
    w = np.atleast_1d(np.asarray(w, dtype=float))
    if w.size != 2 * (qn.d - 1):
        raise DomainError(f"expected {2 * (qn.d - 1)} transverse coordinates")
    N, E, d = qn.N, qn.E, qn.d
    n23 = N ** (2.0 / 3.0)
    arg = profile.a * n23
    pref = math.exp(-2.0 * (N + 1) * float(w @ w) - profile.b) / (4.0 * math.pi ** (d + 1) * E**d)
    ai, aip = airy_ai(arg), airy_ai_prime(arg)
    lead = pref * profile.mu00 * ai
    corr = pref * mu10(profile.u) * aip * N ** (-1.0 / 3.0) if N > 0 else 0.0
    return ScalingPrediction(value=lead, error_scale=abs(aip) * N ** (-2.0 / 3.0) if N else math.inf, corrected=lead + corr)


def predict_limit(u: float, w, E: float, d: int = 2) -> float:
    """Rescaled limit e^{-|w|^2} Ai(2u) / (2^{1/3} pi^d E^d)."""
    w = np.atleast_1d(np.asarray(w, dtype=float))
    return math.exp(-float(w @ w)) * airy_ai(2.0 * u) / (2.0 ** (1.0 / 3.0) * math.pi**d * E**d)


def projector_limit(u: float, E: float) -> float:
    """Rescaled limit of N^{-5/3} W for the eigenspace projector, half the coherent-state limit."""
    return predict_limit(u, (0.0, 0.0), E, 2) / 2.0


@dataclass(frozen=True)
class PointwisePrediction:
    regime: str
    value: float | None
    envelope_exponent: float
    scale_exponent: float  # W is compared on the N^{scale_exponent} W scale


REGIMES = ("on-orbit", "interior", "off-shell", "origin")


def predict_pointwise(regime: str, qn: QuantumNumbers, t: float | None = None) -> PointwisePrediction:
    """Leading value or decay envelope for each pointwise regime."""
    N, E, d = qn.N, qn.E, qn.d
    if regime == "on-orbit":
        val = airy_ai(0.0) / (2.0 ** (1.0 / 3.0) * math.pi**d * E**d)
        return PointwisePrediction(regime, val, 0.0, -(d - 1.0 / 3.0))
    if regime == "interior":
        if t is None or not (0.0 < t < 1.0):
            raise DomainError("interior regime needs 0 < t < 1")
        return PointwisePrediction(regime, None, -1.0 / 6.0, -(d - 1.0 / 3.0))
    if regime == "off-shell":
        return PointwisePrediction(regime, None, -math.inf, 0.0)
    if regime == "origin":
        # with hbar = E / (N + d/2) the value is (-1)^N / (pi hbar)^d
        val = (-1) ** N * ((N + d / 2.0) / (math.pi * E)) ** d
        return PointwisePrediction(regime, val, 0.0, 0.0)
    raise DomainError(f"unknown regime {regime!r}; choose from {REGIMES}")


@dataclass(frozen=True)
class SegmentAreas:
    asymptotic_area: float
    geometric_area: float
    signed_asymptotic: float
    sign_matches: bool


def segment_area_check(u: float, E: float) -> SegmentAreas:
    """Compare |(2E/3) a^{3/2}| with the circular segment of height |u| sqrt(2E).

    ``signed_asymptotic`` is Re(-(2E/3) i a^{3/2}); it comes out negative,
    i.e. minus the segment area, and ``sign_matches`` records that.
    """
    if not (-0.9 - 1e-12 <= u < 0):
        raise DomainError("segment areas are defined for u in [-0.9, 0)")
    if not E > 0:
        raise DomainError("E must be positive")
    A = a_three_halves(u)
    signed = (-(2.0 * E / 3.0) * 1j * A).real
    asym = abs((2.0 * E / 3.0) * A)
    R = math.sqrt(2.0 * E)
    h = -u * R
    geo = R * R * math.acos(1.0 - h / R) - (R - h) * math.sqrt(2.0 * R * h - h * h)
    return SegmentAreas(asym, geo, signed, signed >= 0)


ON_ORBIT_CONSTANT = airy_ai(0.0) / (2.0 ** (1.0 / 3.0) * math.pi**2)
