"""Exception types shared across the package."""


class TetraIsingError(Exception):
    """Base class for all package-specific errors."""


class UnknownGraphError(TetraIsingError, ValueError):
    """Requested a built-in graph that does not exist."""


class CouplingError(TetraIsingError, ValueError):
    """Couplings missing, malformed, or sitting on a forbidden value."""


class PoleError(TetraIsingError, ZeroDivisionError):
    """Evaluation requested at a pole (Y = -1 for the duality map, a Fisher
    zero for the Westbury check, a vanishing denominator in a zero
    parametrization)."""


class AdmissibilityError(TetraIsingError, ValueError):
    """Spin triple violates the triangular inequalities or the parity
    constraint where an admissible triple is required."""


class DegenerateGeometryError(TetraIsingError, ValueError):
    """Geometric input is degenerate (collinear points, zero radicand,
    triangle inequality violated, ...)."""


class FlatTetrahedronError(DegenerateGeometryError):
    """Tetrahedron has exactly zero volume."""


class LorentzianRegimeError(TetraIsingError, ValueError):
    """Edge lengths give a negative squared volume; the Euclidean
    parametrizations implemented here do not cover this regime."""
