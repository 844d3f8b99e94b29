"""
Exact Wigner values of an orbital coherent state
================================================

The state concentrated on the circular orbit gamma0 has a Wigner function
that can be written as a Gaussian times a Laguerre polynomial. Here we
evaluate it three ways and watch the tensor Gauss-Hermite sum run into
cancellation on the orbit as N grows.
"""

import numpy as np

from orbit_wigner import QuantumNumbers, WignerEvaluator, gamma0
from orbit_wigner.errors import NumericalIntegrityError

# a point on the orbit, and one slightly outside it
on_orbit = gamma0(0.0, 1.0)
outside = 1.05 * on_orbit.as_array()

for N in (2, 10, 20):
    qn = QuantumNumbers(N, d=2, E=1.0)
    exact = WignerEvaluator(qn)
    quad = WignerEvaluator(qn, method="quadrature")
    oracle = WignerEvaluator(qn, method="oracle")
    print(f"N={N:3d}  exact {exact(on_orbit):+.12f}  quadrature {quad(on_orbit):+.12f}  nquad {oracle(on_orbit):+.12f}")

# the origin value is (-1)^N (N+1)^2 / (pi E)^2
for N in (7, 8):
    print(N, WignerEvaluator(QuantumNumbers(N))(np.zeros(4)), (-1) ** N * (N + 1) ** 2 / np.pi**2)

# at N = 100 the node terms on the orbit are ~1e30 times their sum
qn = QuantumNumbers(100)
try:
    WignerEvaluator(qn, method="quadrature")(on_orbit)
except NumericalIntegrityError as exc:
    print("quadrature refused:", exc)
print("closed form at N=100:", WignerEvaluator(qn)(on_orbit), WignerEvaluator(qn)(outside))
