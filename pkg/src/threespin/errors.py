"""Exception types raised across the package."""


class ThreeSpinError(Exception):
    """Base class for all errors raised by threespin."""


class NotSymmetric(ThreeSpinError, ValueError):
    pass


class NoConvergence(ThreeSpinError, ArithmeticError):
    pass


class BadIndex(ThreeSpinError, ValueError):
    pass


class BadPair(ThreeSpinError, ValueError):
    pass


class ComplexRoots(ThreeSpinError, ArithmeticError):
    pass


class InvalidState(ThreeSpinError, ValueError):
    """Input is not a valid (positive semidefinite) two-qubit state."""


class ZeroCoupling(ThreeSpinError, ValueError):
    """The analytic eigensystem needs a nonzero exchange coupling J."""


class NonPositiveTemperature(ThreeSpinError, ValueError):
    pass


class PathMismatch(ThreeSpinError, AssertionError):
    """Closed-form and numeric concurrences disagree beyond tolerance."""
