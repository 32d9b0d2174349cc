"""
    Exceptions raised by the interlacekit library.

    All of them derive from NoTracebackException so that a failure
    reaching the command line is reported as a one line message
    instead of a traceback.
"""

from interlacekit.cli.exceptionhandler import NoTracebackException


class InterlaceKitError(NoTracebackException):
    """
        Base class for all library errors
    """
    pass


class ZeroPolynomialError(InterlaceKitError):
    pass


class EndpointRootError(InterlaceKitError):
    """
        Raised by sturm_count when an interval endpoint is itself a
        root of the polynomial. The caller is expected to nudge the
        endpoint (see exact.nudge_off_root) and retry.
    """

    def __init__(self, endpoint):
        self.endpoint = endpoint
        super().__init__(
            "interval endpoint {} is a root of the polynomial".format(
                endpoint))


class DimensionError(InterlaceKitError):
    pass


class SingularMatrixError(InterlaceKitError):
    pass


class ClassPreconditionError(InterlaceKitError):
    pass


class LatticeBoundError(InterlaceKitError):
    pass


class GeneratorBudgetError(InterlaceKitError):
    pass


class MatrixParseError(InterlaceKitError):
    pass
