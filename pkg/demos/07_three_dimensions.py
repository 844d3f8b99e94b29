"""
Three degrees of freedom
========================

In d = 3 the state is the planar coherent state times a ground state in
the third direction, all at hbar = E / (N + 3/2). A brute-force 3D
integral confirms the factorization.
"""

import numpy as np

from orbit_wigner import QuantumNumbers, WignerEvaluator
from orbit_wigner.asymptotics import predict_pointwise
from orbit_wigner.wigner_exact import wigner_d_direct

qn = QuantumNumbers(4, d=3, E=1.0)
ev = WignerEvaluator(qn)
for X in (np.zeros(6), np.array([0.6, 0.1, -0.2, 0.0, 0.5, 0.3])):
    print(X, ev(X), wigner_d_direct(qn, X))

print("origin", ev(np.zeros(6)), predict_pointwise("origin", qn).value)
