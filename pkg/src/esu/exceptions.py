"""Exception hierarchy shared by all modules."""


class ESUError(Exception):
    """Base class for errors raised by this package."""


class DomainError(ESUError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidParametersError(DomainError):
    """Model parameters violate a construction invariant (e.g. c <= -1)."""


class SingularRenormalizationError(ESUError, ZeroDivisionError):
    """The effective-coupling denominator 1 - kappa*(alpha2 m^2 + beta2 Lambda) vanishes."""


class SingularSupportError(DomainError):
    """Point pair lies on the singular support of the parametrix (coincident or null)."""


class ModeInKernelError(DomainError):
    """Queried mode has a_n = 0 and therefore no finite occupation eigenvalue."""


class NoSolutionError(ESUError):
    """The semi-classical equations admit no solution for the requested construction."""


class SolverFailureError(ESUError, RuntimeError):
    """A root search failed to bracket or converge."""

    def __init__(self, message, diagnostics=None, **extra):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {}, **extra)
