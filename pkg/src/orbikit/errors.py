"""Exception hierarchy shared by every orbikit module."""


class OrbikitError(Exception):
    """Base class; the CLI maps every subclass to exit code 2."""


class PortraitError(OrbikitError, ValueError):
    pass


class RiemannHurwitzViolation(PortraitError):
    pass


class FiberOverflow(PortraitError):
    pass


class NotForwardClosed(PortraitError):
    pass


class DanglingImage(NotForwardClosed):
    pass


class UnknownPoint(PortraitError, KeyError):
    pass


class InternalInconsistency(OrbikitError, RuntimeError):
    pass


class NotNonHyperbolic(OrbikitError, ValueError):
    pass


class UnknownCase(OrbikitError, ValueError):
    pass


class RankMismatch(OrbikitError, ValueError):
    pass


class IllegalAssignment(OrbikitError, ValueError):
    pass


class NotFullCover(OrbikitError, ValueError):
    pass


class NotTorusCase(UnknownCase):
    pass


class AssertionFailure(OrbikitError, AssertionError):
    """Both A and R.A have eigenvalue 1; the eigenvalue-avoidance step has no way out."""


class DegenerateIterate(OrbikitError, ArithmeticError):
    def __init__(self, n, message=None):
        self.n = n
        super().__init__(message or f"det(A^{n} - I) = 0: A^{n} has eigenvalue 1")


class SingularMatrix(OrbikitError, ArithmeticError):
    pass


class AllSingular(OrbikitError, ArithmeticError):
    pass


class EnumerationCapExceeded(OrbikitError, ValueError):
    pass
