"""Re-derive the small-u series frozen in orbit_wigner.asymptotics.

    python3 tools/derive_series.py

a(u): exact rationals from a sympy expansion of the arccosh closed form.
mu00, mu10: the complex saddle formulas are evaluated at 50 digits on
Chebyshev nodes in [-R, R] (the removable point u = 0 is never sampled), and
the interpolant is converted to monomial coefficients.

Needs the ``tools`` extra (mpmath, sympy).
"""

from __future__ import annotations

import sys

import mpmath as mp
import sympy as sp

from orbit_wigner import asymptotics

mp.mp.dps = 50
R = mp.mpf("0.25")
NODES = 40


def a_series(order=9):
    u = sp.symbols("u", positive=True)
    A = 3 * (u + 1) * sp.sqrt(u * (u + 2)) - 3 * sp.acosh(1 + u)
    # A = u^{3/2} g(u) with g analytic; a = u g^{2/3}
    g = sp.series(sp.simplify(A / u ** sp.Rational(3, 2)), u, 0, order).removeO()
    a = sp.series(u * g ** sp.Rational(2, 3), u, 0, order).removeO()
    a = sp.expand(a / 2 ** sp.Rational(2, 3))
    return [sp.nsimplify(a.coeff(u, k)) for k in range(order)]


def _a_mp(u):
    if u > 0:
        A = 3 * (u + 1) * mp.sqrt(u * (u + 2)) - 3 * mp.acosh(1 + u)
        return A ** (mp.mpf(2) / 3)
    A = 3 * (u + 1) * mp.sqrt(-u * (u + 2)) - 3 * mp.acos(1 + u)
    return -abs(A) ** (mp.mpf(2) / 3)


def _amplitudes(u):
    s = mp.sqrt(mp.mpc(u * (u + 2)))
    ah = mp.sqrt(mp.mpc(_a_mp(u)))

    def g(v):
        w = 1 + u + v * 0.5j
        return mp.sqrt(2) * mp.exp(-v * v / 4 - 1j * v * (1 + u)) / mp.sqrt(1 / (w * w) + 1)

    tp = 1j * mp.sqrt(((1 + u) * s + s * s) / (2 * ah))
    tm = 1j * mp.sqrt(((1 + u) * s - s * s) / (2 * ah))
    return g(2j * s) / tp, g(-2j * s) / tm, ah


def mu00_mp(u):
    gp, gm, _ = _amplitudes(u)
    return (1j * mp.pi * (gp + gm)).real


def mu10_mp(u):
    gp, gm, ah = _amplitudes(u)
    return (1j * mp.pi * (gp - gm) / ah).real


def taylor_from_chebyshev(f, order):
    n = NODES
    xs = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / n) for k in range(n)]
    fs = [f(R * x) for x in xs]
    cheb = [2 * mp.fsum(fs[k] * mp.cos(mp.pi * j * (k + mp.mpf(1) / 2) / n) for k in range(n)) / n for j in range(n)]
    cheb[0] /= 2
    # T_j expanded in powers of x, then x = u / R
    mono = [mp.mpf(0)] * n
    for j, c in enumerate(cheb):
        for k, t in enumerate(_cheb_coeffs(j)):
            mono[k] += c * t
    return [mono[k] / R**k for k in range(order)]


def _cheb_coeffs(j):
    x = sp.symbols("x")
    p = sp.Poly(sp.chebyshevt(j, x), x)
    return [int(p.coeff_monomial(x**k)) for k in range(j + 1)]


def main():
    ok = True
    a = a_series()
    print("a(u) / 2^{2/3}:", ", ".join(str(c) for c in a))
    for k, (exact, frozen) in enumerate(zip(a, asymptotics._A_SERIES)):
        if abs(float(exact) - frozen) > 1e-15 * max(1.0, abs(frozen)):
            ok = False
            print(f"  a_{k}: derived {exact} frozen {frozen}")
    for name, f, frozen in (
        ("mu00", mu00_mp, asymptotics._MU00_SERIES),
        ("mu10", mu10_mp, asymptotics._MU10_SERIES),
    ):
        coeffs = taylor_from_chebyshev(f, len(frozen))
        print(f"{name}:")
        for k, (c, fz) in enumerate(zip(coeffs, frozen)):
            rel = abs(float(c) - fz) / abs(fz)
            flag = "" if rel < 1e-12 else "  MISMATCH"
            ok &= not flag
            print(f"  {k}: {mp.nstr(c, 20):>26}  frozen {fz!r:>24}  rel {rel:.1e}{flag}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
