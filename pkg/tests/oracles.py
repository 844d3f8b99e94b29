"""Independent reference implementations used by the tests.

Nothing here imports orbit_wigner: each oracle starts from a definition and
uses mpmath or scipy for the heavy lifting.
"""

from __future__ import annotations

import math
from functools import lru_cache

import mpmath as mp
from scipy.special import eval_genlaguerre


@lru_cache(maxsize=16)
def _hermite_rule(m: int, dps: int):
    with mp.workdps(dps):
        return mp.gauss_quadrature(m, "hermite")


def wigner_planar_mp(N: int, E: float, X, dps: int | None = None) -> float:
    """W(x, xi) of c (y1 + i y2)^N exp(-|y|^2 / 2 hbar), hbar = E / (N + 1).

    Straight from the Wigner integral: after v -> s - 2i xi the integrand is
    a polynomial of degree 2N in s against exp(-|s|^2 / 4 hbar), which a
    high-precision Gauss-Hermite rule of order N + 1 integrates exactly.
    """
    dps = dps or 30 + N
    m = N + 1
    nodes, weights = _hermite_rule(m, dps)
    with mp.workdps(dps):
        x1, x2, k1, k2 = (mp.mpf(float(c)) for c in X)
        hbar = mp.mpf(E) / (N + 1)
        c2 = 1 / (mp.pi * hbar ** (N + 1) * mp.factorial(N))
        pref = c2 / (2 * mp.pi * hbar) ** 2 * mp.exp(-(x1**2 + x2**2 + k1**2 + k2**2) / hbar) * 4 * hbar
        total = mp.mpf(0)
        for t1, w1 in zip(nodes, weights):
            v1 = 2 * mp.sqrt(hbar) * t1 - 2j * k1
            for t2, w2 in zip(nodes, weights):
                v2 = 2 * mp.sqrt(hbar) * t2 - 2j * k2
                a = (x1 + v1 / 2) + 1j * (x2 + v2 / 2)
                b = (x1 - v1 / 2) - 1j * (x2 - v2 / 2)
                total += w1 * w2 * (a * b) ** N
        return float((pref * total).real)


def projector_wigner(N: int, E: float, X) -> float:
    """Wigner function of the level-N eigenprojector of the planar oscillator.

    With hbar = E / (N + 1) and r^2 = |x|^2 + |xi|^2 it is
    (-1)^N (pi hbar)^{-2} exp(-r^2 / hbar) L_N^{(1)}(2 r^2 / hbar).
    """
    hbar = E / (N + 1)
    r2 = float(sum(c * c for c in X))
    return (-1) ** N / (math.pi * hbar) ** 2 * math.exp(-r2 / hbar) * float(eval_genlaguerre(N, 1, 2 * r2 / hbar))


def airy_mp(x: float):
    return float(mp.airyai(x)), float(mp.airyai(x, derivative=1))


def airy_envelope(x: float) -> float:
    """Size of Ai near x: |x|^{-1/4} on the oscillatory side, the decaying factor on the right."""
    if x <= 1.0:
        return max(1.0, abs(x)) ** -0.25
    return x**-0.25 * math.exp(-2.0 / 3.0 * x**1.5)


def laguerre_mp(n: int, x: float, dps: int = 60):
    """L_n(x) from its explicit finite sum at high precision."""
    with mp.workdps(dps + n):
        x = mp.mpf(float(x))
        return mp.fsum(mp.binomial(n, k) * (-x) ** k / mp.factorial(k) for k in range(n + 1))
