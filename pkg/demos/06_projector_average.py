"""
Averaging over all orbits
=========================

Averaging (N+1) W over the CP^1 family of orbits on the energy surface gives
the Wigner function of the eigenspace projector, whose rescaled value on the
surface tends to half the coherent-state limit.
"""


from orbit_wigner import QuantumNumbers
from orbit_wigner.asymptotics import projector_limit
from orbit_wigner.validation import projector_average, reference_point

p = reference_point(1.0)
for K in (256, 1024, 4096):
    est = projector_average(p, QuantumNumbers(50), K)
    print(f"K={K:5d}  value {est.value:.10f}  |Q_K - Q_K/2| {est.error_estimate:.2e}")

print("rescaled N^-5/3 value", 50 ** (-5 / 3) * est.value, "limit", projector_limit(0.0, 1.0))
