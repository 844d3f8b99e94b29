"""Acceptance checks, one function per criterion.

Each check computes its quantities from the library, compares them with a
fixed tolerance and returns a :class:`CriterionResult`. The checks are
shared by ``tests/test_acceptance.py`` and the ``selftest`` command.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .asymptotics import (
    MU00_AT_ZERO,
    _saddle_amplitudes,
    a_of,
    a_three_halves,
    edge_profile,
    mu00,
    mu00_closed_form,
    predict_limit,
    projector_limit,
    saddles,
    segment_area_check,
)
from .numerics import airy_ai
from .phase_space import PhasePoint, QuantumNumbers, rotate_in_orbit_plane
from .validation import (
    pointwise_scan,
    projector_average,
    rate_fit,
    reference_point,
    scaling_scan,
    weak_limit_test,
)
from .wigner_exact import (
    ConstantObservable,
    EnergyObservable,
    GaussianObservable,
    WignerEvaluator,
    origin_value,
    wigner_d_direct,
    wigner_gamma0_direct,
    wigner_moment,
)

SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool = True
    lines: list = field(default_factory=list)

    def check(self, ok: bool, text: str):
        self.passed = self.passed and bool(ok)
        self.lines.append(f"  [{'ok' if ok else 'FAIL'}] {text}")
        return ok

    def note(self, text: str):
        self.lines.append(f"  [info] {text}")

    def headline(self) -> str:
        return f"criterion {self.number:2d} {'PASS' if self.passed else 'FAIL'}: {self.title}"


def _random_ball(rng, radius, dim=4):
    v = rng.normal(size=dim)
    return v / np.linalg.norm(v) * radius * rng.uniform() ** (1.0 / dim)


def c01_origin_identity() -> CriterionResult:
    r = CriterionResult(1, "origin identity (-1)^N (N+1)^2/(pi^2 E^2), N <= 60")
    worst = 0.0
    for E in (0.5, 1.0, 2.0):
        for N in range(61):
            w = WignerEvaluator(QuantumNumbers(N, 2, E))(np.zeros(4))
            ref = origin_value(N, E)
            worst = max(worst, abs(w - ref) / abs(ref))
    r.check(worst <= 1e-9, f"max relative error {worst:.3e} <= 1e-9")
    return r


def c02_normalization() -> CriterionResult:
    r = CriterionResult(2, "normalization and energy moment")
    for E in (1.0, 2.0):
        for N in (0, 5, 10, 20):
            ev = WignerEvaluator(QuantumNumbers(N, 2, E))
            one = wigner_moment(ev, ConstantObservable())
            h = wigner_moment(ev, EnergyObservable())
            r.check(abs(one - 1) <= 1e-8, f"E={E} N={N}: int W = {one:.15f}")
            r.check(abs(h / E - 1) <= 1e-8, f"E={E} N={N}: int H W / E = {h / E:.15f}")
    return r


def c03_rotation_invariance() -> CriterionResult:
    r = CriterionResult(3, "rotation invariance in the orbit plane, N = 100")
    rng = np.random.default_rng(SEED + 3)
    ev = WignerEvaluator(QuantumNumbers(100, 2, 1.0))
    worst = 0.0
    for _ in range(100):
        theta = rng.uniform(0, 2 * math.pi)
        p = PhasePoint.from_array(_random_ball(rng, 1.6))
        a, b = ev(p), ev(rotate_in_orbit_plane(theta, p))
        scale = max(abs(a), abs(b))
        if scale > 0:
            worst = max(worst, abs(a - b) / scale)
    r.check(worst <= 1e-9, f"max relative deviation {worst:.3e} <= 1e-9")
    return r


def c04_oracle_equivalence() -> CriterionResult:
    r = CriterionResult(4, "exact evaluator vs direct quadrature oracle, N <= 16")
    rng = np.random.default_rng(SEED + 4)
    worst = 0.0
    for _ in range(50):
        N = int(rng.integers(0, 17))
        E = float(rng.choice([0.5, 1.0, 2.0]))
        qn = QuantumNumbers(N, 2, E)
        X = _random_ball(rng, 3.0 * math.sqrt(E))
        ex = WignerEvaluator(qn)(X)
        orc = wigner_gamma0_direct(qn, X)
        worst = max(worst, abs(ex - orc) / ((N + 1) ** 2 / E**2))
    r.check(worst <= 1e-7, f"max |exact - oracle| / ((N+1)^2/E^2) = {worst:.3e} <= 1e-7")
    return r


def c05_on_orbit_rate() -> CriterionResult:
    r = CriterionResult(5, "on-orbit Airy constant, error exponent in [-0.85, -0.5]")
    rep = pointwise_scan([25, 50, 100, 200], "on-orbit")
    r.note("errors " + ", ".join(f"N={n}: {e:.4e}" for n, e in zip(rep.N, rep.errors)))
    r.check(-0.85 <= rep.exponent <= -0.5, f"fitted exponent {rep.exponent:.4f} in [-0.85, -0.5]")
    r.check(rep.residual <= 0.15, f"fit residual {rep.residual:.4f} <= 0.15")
    return r


def c06_scaling_profile() -> CriterionResult:
    r = CriterionResult(6, "hybrid scaling profile on u in [-0.4, 0.4]")
    u = np.linspace(-0.4, 0.4, 40)
    sup = {}
    sup_corr = {}
    for N in (50, 200):
        rows = scaling_scan(QuantumNumbers(N, 2, 1.0), u)
        ex = np.array([x.exact for x in rows])
        pr = np.array([x.predicted for x in rows])
        co = np.array([x.corrected for x in rows])
        sup[N] = (float(np.max(np.abs(ex - pr))), float(np.max(np.abs(pr))))
        sup_corr[N] = float(np.max(np.abs(ex - co)))
    rel = sup[200][0] / sup[200][1]
    ratio = sup[50][0] / sup[200][0]
    lo, hi = 4 ** (2 / 3) / 3, 3 * 4 ** (2 / 3)
    r.check(rel <= 0.05, f"N=200 sup error / sup prediction = {rel:.4f} <= 0.05")
    r.check(lo <= ratio <= hi, f"sup error ratio N=50/N=200 = {ratio:.4f} in [{lo:.4f}, {hi:.4f}]")
    r.note(
        f"with the mu10 Ai' correction: N=200 relative sup error {sup_corr[200] / sup[200][1]:.4f}, "
        f"ratio {sup_corr[50] / sup_corr[200]:.4f}"
    )
    return r


def c07_gaussian_factor() -> CriterionResult:
    r = CriterionResult(7, "transverse Gaussian factor at u = 0, N = 200")
    N = 200
    w = np.linspace(0.0, math.sqrt(4.0 / (2 * (N + 1))), 41)
    rows = scaling_scan(QuantumNumbers(N, 2, 1.0), [0.0], w)
    ex = np.array([x.exact for x in rows])
    dev = float(np.max(np.abs(ex / ex[0] - np.exp(-2 * (N + 1) * w**2))))
    r.check(dev <= 0.05, f"sup |W(w)/W(0) - exp(-2(N+1)w^2)| = {dev:.3e} <= 0.05")
    return r


def c08_rescaled_limit() -> CriterionResult:
    r = CriterionResult(8, "rescaled limit at (u', w') = (1, (1, 0))")
    lim = predict_limit(1.0, (1.0, 0.0), 1.0)
    errs = []
    for N in (50, 100, 200):
        u = 1.0 / (2 * N) ** (2 / 3)
        w = 1.0 / math.sqrt(2 * N)
        row = scaling_scan(QuantumNumbers(N, 2, 1.0), [u], [w])[0]
        errs.append(abs(row.exact / lim - 1.0))
        r.note(f"N={N}: rescaled value {row.exact:.6e}, limit {lim:.6e}, relative error {errs[-1]:.4f}")
    r.check(errs[0] > errs[1] > errs[2], "errors strictly decreasing")
    r.check(errs[-1] <= 0.05, f"final relative error {errs[-1]:.4f} <= 0.05")
    return r


def c09_interior_decay() -> CriterionResult:
    r = CriterionResult(9, "interior decay envelope at t = 0.5")
    rep = pointwise_scan(list(range(25, 201)), "interior", t=0.5)
    r.check(rep.exponent <= -0.10, f"envelope exponent {rep.exponent:.4f} <= -0.10")
    return r


def c10_off_shell_decay() -> CriterionResult:
    r = CriterionResult(10, "off-shell decay at (sqrt E, 0, 0, 0)")
    rep = pointwise_scan([20, 40, 60, 80], "off-shell")
    r.note("values " + ", ".join(f"{e:.3e}" for e in rep.errors))
    r.check(rep.exponent <= -4, f"fitted exponent {rep.exponent:.3f} <= -4")
    return r


def c11_weak_limit() -> CriterionResult:
    r = CriterionResult(11, "weak limit towards the orbit average")
    E = 1.0
    g = GaussianObservable(0.7 * math.sqrt(E), reference_point(E).as_array())
    pairs = []
    for N in (4, 8, 16):
        res = weak_limit_test(g, QuantumNumbers(N, 2, E))
        pairs.append((N, res.error))
        r.note(f"N={N}: lhs {res.lhs:.10f}, rhs {res.rhs:.10f}, error {res.error:.4e}")
    rep = rate_fit(pairs)
    r.check(rep.exponent <= -0.8, f"fitted exponent {rep.exponent:.4f} <= -0.8")
    worst = max(weak_limit_test(ConstantObservable(), QuantumNumbers(N, 2, E)).error for N in (4, 8, 16, 20))
    r.check(worst <= 1e-9, f"constant observable error {worst:.2e} <= 1e-9")
    return r


def c12_edge_profile() -> CriterionResult:
    r = CriterionResult(12, "edge profile a(u), b(u) vs saddle values of Phi")
    worst_a = worst_b = 0.0
    for u in np.linspace(-0.9, 2.0, 40):
        s = saddles(float(u))
        worst_a = max(worst_a, abs(0.75j * (s.phi_plus - s.phi_minus) - a_three_halves(float(u))))
        worst_b = max(worst_b, abs(0.5j * (s.phi_plus + s.phi_minus) - u * (u + 2)))
    r.check(worst_a <= 1e-10, f"max |a^(3/2) closed - saddle| = {worst_a:.2e} <= 1e-10")
    r.check(worst_b <= 1e-10, f"max |b - saddle| = {worst_b:.2e} <= 1e-10")
    ratio = a_of(1e-4) / 1e-4 / 2 ** (5 / 3)
    r.check(abs(ratio - 1) <= 1e-3, f"a(1e-4)/(1e-4 * 2^(5/3)) = {ratio:.8f}")
    exact_b = all(edge_profile(float(u)).b == float(u) * (float(u) + 2) for u in np.linspace(-0.9, 2.0, 40))
    r.check(exact_b, "b(u) == u(u+2) exactly")
    return r


def c13_mu00() -> CriterionResult:
    r = CriterionResult(13, "mu00 complex formula vs real closed form")
    worst = 0.0
    for u in (0.1, 0.25, 0.5, 1.0, 2.0):
        worst = max(worst, abs(mu00(u) / mu00_closed_form(u) - 1))
    r.check(worst <= 1e-8, f"max relative difference {worst:.2e} <= 1e-8")
    for u in (1e-7, -1e-7):
        gp, gm, _ = _saddle_amplitudes(u)
        raw = (1j * math.pi * (gp + gm)).real
        dev = abs(raw / MU00_AT_ZERO - 1)
        r.check(dev <= 1e-6, f"complex formula at u={u:g}: relative distance to 2^(5/3) pi {dev:.2e} <= 1e-6")
    return r


def c14_segment_area() -> CriterionResult:
    r = CriterionResult(14, "segment-area interpretation of a(u)^(3/2)")
    worst = 0.0
    for E in (1.0, 2.0):
        for u in (-0.1, -0.3, -0.5, -0.7, -0.9):
            s = segment_area_check(u, E)
            worst = max(worst, abs(s.asymptotic_area - s.geometric_area) / s.geometric_area)
    r.check(worst <= 1e-10, f"max relative difference {worst:.2e} <= 1e-10")
    r.note("signed value -(2E/3) i a^(3/2) is minus the segment area under principal branches")
    return r


def c15_airy() -> CriterionResult:
    r = CriterionResult(15, "Airy evaluator")
    h = 1e-4
    x = np.linspace(-10.0, 5.0, 301)
    res = (airy_ai(x + h) - 2 * airy_ai(x) + airy_ai(x - h)) / h**2 - x * airy_ai(x)
    worst = float(np.max(np.abs(res)))
    r.check(worst <= 1e-6, f"max ODE residual on [-10, 5] = {worst:.2e} <= 1e-6")
    gamma_form = math.gamma(1 / 3) * 12 ** (1 / 3) / (4 * math.pi**3 * math.sqrt(3)) * 2 ** (1 / 3) * math.pi**2
    dev = abs(airy_ai(0.0) / gamma_form - 1)
    r.check(dev <= 1e-12, f"Ai(0) vs Gamma identity: relative difference {dev:.2e} <= 1e-12")
    return r


def c16_projector() -> CriterionResult:
    r = CriterionResult(16, "projector average over CP^1, N = 50, K = 4096")
    N, K, E = 50, 4096, 1.0
    qn = QuantumNumbers(N, 2, E)
    est = projector_average(reference_point(E), qn, K)
    rel = abs(N ** (-5 / 3) * est.value / projector_limit(0.0, E) - 1)
    r.check(rel <= 0.10, f"N^(-5/3) W_Pi(gamma0(0)) vs Ai(0)/(2^(4/3) pi^2): relative {rel:.4f} <= 0.10")
    origin = PhasePoint.from_array(np.zeros(4))
    vals = [projector_average(origin, qn, k).value for k in (64, 1024, 4096)]
    ref = (N + 1) * origin_value(N, E)
    dev = max(abs(v / ref - 1) for v in vals)
    r.check(dev <= 1e-12, f"origin value K-independent: max relative deviation {dev:.2e} <= 1e-12")
    for H in (0.5, 0.75, 1.0, 1.25, 1.5):
        rad = math.sqrt(2 * H * E)
        a = PhasePoint.from_array([rad / math.sqrt(2), 0, 0, rad / math.sqrt(2)])
        b = PhasePoint.from_array([rad, 0, 0, 0])
        ea, eb = projector_average(a, qn, K), projector_average(b, qn, K)
        diff = abs(ea.value - eb.value)
        tol = ea.error_estimate + eb.error_estimate
        r.check(diff <= tol, f"H={H * E}: |W_Pi(a) - W_Pi(b)| = {diff:.3e} <= estimated error {tol:.3e}")
    return r


def c17_product_formula() -> CriterionResult:
    r = CriterionResult(17, "d = 3 product formula")
    rng = np.random.default_rng(SEED + 17)
    worst = 0.0
    for _ in range(10):
        N = int(rng.integers(0, 9))
        qn = QuantumNumbers(N, 3, 1.0)
        X = _random_ball(rng, 1.8, dim=6)
        worst = max(worst, abs(WignerEvaluator(qn)(X) - wigner_d_direct(qn, X)))
    r.check(worst <= 1e-6, f"max |product formula - 3D oracle| = {worst:.2e} <= 1e-6")
    N, E = 2, 1.0
    qn = QuantumNumbers(N, 3, E)
    val = WignerEvaluator(qn)(np.zeros(6))
    stated = (-1) ** N * (N + 1) ** 3 / (math.pi**2 * E**3)
    r.check(abs(val / stated - 1) <= 1e-9, f"origin N=2: computed {val:.10f} vs (-1)^N (N+1)^3/(pi^2 E^3) = {stated:.10f}")
    oracle = wigner_d_direct(qn, np.zeros(6))
    consistent = (-1) ** N * (N + 1.5) ** 3 / (math.pi * E) ** 3
    r.note(f"3D oracle at the origin {oracle:.10f}; (-1)^N (N+d/2)^d/(pi E)^d = {consistent:.10f}")
    return r


CRITERIA = (
    c01_origin_identity,
    c02_normalization,
    c03_rotation_invariance,
    c04_oracle_equivalence,
    c05_on_orbit_rate,
    c06_scaling_profile,
    c07_gaussian_factor,
    c08_rescaled_limit,
    c09_interior_decay,
    c10_off_shell_decay,
    c11_weak_limit,
    c12_edge_profile,
    c13_mu00,
    c14_segment_area,
    c15_airy,
    c16_projector,
    c17_product_formula,
)


def run_all(echo=print) -> list:
    results = []
    for fn in CRITERIA:
        res = fn()
        results.append(res)
        if echo:
            echo(res.headline())
            for line in res.lines:
                echo(line)
    return results
