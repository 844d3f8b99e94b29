"""
Weak limit onto the orbit
=========================

Integrated against a smooth observable, W approaches the time average of
that observable along gamma0.
"""


from orbit_wigner import ConstantObservable, EnergyObservable, GaussianObservable, QuantumNumbers
from orbit_wigner.validation import rate_fit, reference_point, weak_limit_test

g = GaussianObservable(0.7, tuple(reference_point(1.0).as_array()))
pairs = []
for N in (2, 4, 8, 12, 16, 20):
    qn = QuantumNumbers(N)
    res = weak_limit_test(g, qn)
    pairs.append((N, res.error))
    print(f"N={N:2d}  moment {res.lhs:.8f}  orbit average {res.rhs:.8f}  error*N {res.error * N:.4f}")

print("fitted exponent", rate_fit(pairs).exponent)
print("constant", weak_limit_test(ConstantObservable(), QuantumNumbers(20)).error)
print("energy  ", weak_limit_test(EnergyObservable(), QuantumNumbers(20)).error)
