"""
Airy scaling across the orbit
=============================

Near the orbit N^{-5/3} W is described by Ai(a(u) N^{2/3}) times a slowly
varying amplitude. The leading term leaves a relative error of order
N^{-1/3}; adding the Ai' term with amplitude mu10 removes most of it.
"""

import numpy as np

from orbit_wigner import QuantumNumbers
from orbit_wigner.validation import scaling_scan

u = np.linspace(-0.3, 0.3, 13)
for N in (50, 100, 200, 400):
    rows = scaling_scan(QuantumNumbers(N), u)
    top = max(abs(r.predicted) for r in rows)
    lead = max(abs(r.exact - r.predicted) for r in rows) / top
    corr = max(abs(r.exact - r.corrected) for r in rows) / top
    print(f"N={N:4d}  leading term {lead:.4f}  with Ai' term {corr:.5f}  N^-1/3 = {N ** (-1 / 3):.4f}")

# one column of the N = 200 scan
for r in scaling_scan(QuantumNumbers(200), u)[::3]:
    print(f"u={r.u:+.2f}  exact {r.exact:+.4e}  leading {r.predicted:+.4e}  corrected {r.corrected:+.4e}")
