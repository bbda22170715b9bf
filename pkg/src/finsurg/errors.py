"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """An argument violates a documented precondition."""


class InvalidPresentationError(InvalidArgumentError):
    """A Seifert presentation has a fiber with gcd(alpha, omega) != 1."""


class NotNegativeDefiniteError(InvalidArgumentError):
    """The plumbing of a presentation is not negative definite (e >= 0).

    Reverse the orientation first.
    """


class UnsupportedShapeError(InvalidArgumentError):
    """The plumbing engine only handles exactly three exceptional fibers."""


class UnsupportedSurgeryError(InvalidArgumentError):
    """Only integral (q = 1) surgery d-invariants are implemented."""


class ReducibleSurgeryError(InvalidArgumentError):
    """p/q = rs surgery on T(r,s) is reducible and has no multiplicity triple."""


class SearchExhaustedError(RuntimeError):
    """A bounded search ran past its cap without finding a witness."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed, e.g. a Spin^c count differs from |H_1|."""

    def __init__(self, message, expected=None, found=None):
        super().__init__(message)
        self.expected = expected
        self.found = found
