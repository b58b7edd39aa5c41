"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: ValidationError -> 2,
NumericsError -> 3, I/O errors -> 4.
"""


class ValidationError(ValueError):
    """Bad inputs: parameters out of range, mismatched schemes, bad configs."""


class DomainError(ValidationError):
    """A coordinate fell outside a profile or potential domain."""


class RangeError(ValidationError):
    """A target value fell outside the image of a map (e.g. mu outside mu(domain))."""


class SingularityError(ValidationError):
    """An expression hit a pole inside the requested window."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class NumericsError(RuntimeError):
    """An iterative numeric procedure failed to converge."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
