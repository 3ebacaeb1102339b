"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A constructor parameter violates its precondition."""


class ParseError(ValueError):
    """A textual distribution spec could not be parsed."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class CapabilityError(TypeError):
    """A check needs a surface (pdf, quantile) the distribution lacks."""
