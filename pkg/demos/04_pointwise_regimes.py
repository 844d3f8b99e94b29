"""
Pointwise behaviour in three regimes
====================================

On the orbit N^{-5/3} W tends to a constant, inside the orbit it decays
(with oscillations) and off the energy surface it is exponentially small.
"""

from orbit_wigner.asymptotics import ON_ORBIT_CONSTANT
from orbit_wigner.validation import pointwise_errors, pointwise_scan

# the interior check looks at a window of 8 levels above each N, so stay below 393
Ns = [25, 50, 100, 200, 390]
print("on-orbit limit", ON_ORBIT_CONSTANT)
for regime, kw in (("on-orbit", {}), ("interior", {"t": 0.5})):
    rep = pointwise_scan(Ns, regime, **kw)
    print(f"{regime:9s} errors {[f'{e:.2e}' for e in rep.errors]}  fitted exponent {rep.exponent:+.3f}")

print("off-shell |W|", [f"{e:.1e}" for e in pointwise_errors([10, 20, 40, 80], "off-shell")])
