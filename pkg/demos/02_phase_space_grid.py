"""
Sampling W on a plane
=====================

The orbit plane contains gamma0 as a circle of radius sqrt(2E). A grid shows
the ring where W is large and the interference fringes inside it.
Set ORBIT_WIGNER_THREADS to change the number of worker threads; the output
does not depend on it.
"""

import math
import sys

import numpy as np

from orbit_wigner import PhasePoint, QuantumNumbers, Slice, WignerEvaluator, wigner_grid

N = 40
ev = WignerEvaluator(QuantumNumbers(N))

r = 1.6 / math.sqrt(2)
plane = Slice(
    origin=PhasePoint(np.zeros(2), np.zeros(2)),
    span1=PhasePoint([r, 0.0], [0.0, r]),
    span2=PhasePoint([0.0, r], [-r, 0.0]),
    name="orbit",
)
field = wigner_grid(ev, plane, (41, 41))

# coarse text picture: '#' strongly positive, '-' strongly negative
v = field.values / np.abs(field.values).max()
for row in v[::2]:
    print("".join("#" if x > 0.2 else "+" if x > 0.02 else "-" if x < -0.02 else " " for x in row[::1]))

# the ring sits at distance sqrt(2E) from the origin in this plane
radius = np.linalg.norm(field.points, axis=-1)
ring = np.abs(radius - math.sqrt(2.0)) < 0.05
print("mean W on the ring", field.values[ring].mean(), " inside", field.values[radius < 1.0].mean())

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(field.to_csv())
