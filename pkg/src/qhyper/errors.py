"""Exception hierarchy shared by every module."""


class QHyperError(Exception):
    """Base class for all errors raised by qhyper."""


class InvalidArgument(QHyperError, ValueError):
    """An argument violates a documented precondition."""


class ModeError(QHyperError):
    """An operation was requested in a numeric mode that does not support it."""


class PoleError(QHyperError, ZeroDivisionError):
    """A denominator factor vanished (or fell below the float guard).

    ``index`` carries the offending Pochhammer index or lattice multi-index
    when known.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ConvergenceError(QHyperError):
    """An adaptive sum or product hit its term cap before the tail was small."""


class SamplingError(QHyperError):
    """The parameter sampler exhausted its redraw budget."""
