"""Exception types shared across the library."""


class DomainError(ValueError):
    """An input lies outside the physical or numerical domain of an operation."""


class SingularResonanceError(DomainError):
    """A lossless unit-reflectivity cavity was evaluated exactly on resonance.

    The radiation-pressure redistribution factor diverges there; perfect
    mirrors must be handled through the closed-form path instead.
    """


class ConvergenceError(RuntimeError):
    """A quadrature or summation failed to reach the requested accuracy."""
