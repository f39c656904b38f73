"""Exception hierarchy shared by every lochmf package."""


class LochmfError(Exception):
    """Base class for all library errors."""
    pass


class DomainError(LochmfError, ValueError):
    """An input lies outside the domain of an operation (bad discriminant, weight, point, degree)."""
    pass


class BudgetInfeasibleError(LochmfError):
    """A requested error budget cannot be met with the given parameters."""
    pass


class WallCollisionError(LochmfError):
    """A point lies on a wall S_Q (or on several) where the operation needs it elsewhere."""

    def __init__(self, message: str, forms: tuple = ()):
        super().__init__(message)
        self.forms = forms
