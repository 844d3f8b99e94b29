"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class ConfigurationError(ValueError):
    """An evaluator or run was configured inconsistently."""


class NumericalIntegrityError(ArithmeticError):
    """A computed value failed a self-consistency check."""


class OracleError(RuntimeError):
    """A reference quadrature did not converge within its budget."""
