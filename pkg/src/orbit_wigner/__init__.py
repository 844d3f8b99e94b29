"""Wigner distributions of orbital coherent states of the isotropic oscillator.

Exact evaluation, uniform Airy-type asymptotics near the classical orbit and
the experiment drivers that compare the two.
"""

from .errors import ConfigurationError, DomainError, NumericalIntegrityError, OracleError
from .numerics import airy_ai, airy_ai_prime, compensated_sum, gauss_hermite, laguerre_log, log_gamma
from .phase_space import (
    OrbitFrame,
    PhasePoint,
    QuantumNumbers,
    UnitaryMap,
    apply_unitary,
    build_frame,
    gamma0,
    hamiltonian,
    rotate_in_orbit_plane,
    sample_cp1,
    scaling_point,
)
from .wigner_exact import (
    ConstantObservable,
    EnergyObservable,
    GaussianObservable,
    Slice,
    WignerEvaluator,
    WignerField,
    wigner_d,
    wigner_gamma0_2d,
    wigner_grid,
    wigner_moment,
    wigner_orbit,
)
from .asymptotics import EdgeProfile, a_of, edge_profile, mu00, mu10, predict_limit, predict_scaling
from .validation import ConvergenceReport, pointwise_scan, projector_average, rate_fit, scaling_scan, weak_limit_test

__version__ = "0.1.0"

__all__ = [
    "ConfigurationError",
    "DomainError",
    "NumericalIntegrityError",
    "OracleError",
    "airy_ai",
    "airy_ai_prime",
    "compensated_sum",
    "gauss_hermite",
    "laguerre_log",
    "log_gamma",
    "OrbitFrame",
    "PhasePoint",
    "QuantumNumbers",
    "UnitaryMap",
    "apply_unitary",
    "build_frame",
    "gamma0",
    "hamiltonian",
    "rotate_in_orbit_plane",
    "sample_cp1",
    "scaling_point",
    "ConstantObservable",
    "EnergyObservable",
    "GaussianObservable",
    "Slice",
    "WignerEvaluator",
    "WignerField",
    "wigner_d",
    "wigner_gamma0_2d",
    "wigner_grid",
    "wigner_moment",
    "wigner_orbit",
    "EdgeProfile",
    "a_of",
    "edge_profile",
    "mu00",
    "mu10",
    "predict_limit",
    "predict_scaling",
    "ConvergenceReport",
    "pointwise_scan",
    "projector_average",
    "rate_fit",
    "scaling_scan",
    "weak_limit_test",
]
