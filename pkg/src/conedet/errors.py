"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so the math layers should
raise the most specific type that applies instead of bare ValueError.
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigurationError(DomainError):
    """A configuration object violates its structural invariants."""


class ConvergenceError(RuntimeError):
    """A numerical routine failed to reach the requested tolerance."""
