"""Exception hierarchy shared by the geometry engine."""


class GeometryError(ArithmeticError):
    """Base class for evaluation failures at a specific chart point."""

    reason = "geometry error"


class DivisionNearZero(GeometryError):
    reason = "singular denominator"


class SqrtDomain(GeometryError):
    reason = "sqrt domain"


class OrderTooHigh(ValueError):
    pass


class DomainExcluded(GeometryError):
    reason = "excluded band"


class DegenerateMetric(GeometryError):
    reason = "degenerate metric"


class ParabolicPoint(GeometryError):
    reason = "parabolic point"


class SingularDenominator(GeometryError):
    reason = "singular denominator"
