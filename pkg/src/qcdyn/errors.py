"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside its documented domain."""


class NotHermitianError(ValueError):
    """A matrix required to be Hermitian fails the Hermiticity check."""


class ConvergenceError(RuntimeError):
    """An iterative solver hit its sweep limit without converging."""


class PhysicalityError(ValueError):
    """A density matrix violates Hermiticity, unit trace, or positivity."""


class QuadratureError(ValueError):
    """A quadrature specification is invalid for the requested rule."""


class UnknownAxisError(ValueError):
    """A parameter-sweep axis name is not one of the supported axes."""


class ParseError(ValueError):
    """A configuration document is syntactically malformed."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class ValidationError(ValueError):
    """A configuration key holds a value that fails validation."""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")
