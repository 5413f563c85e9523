class BetaProcError(Exception):
    """Base class for every error raised by betaproc."""


class DomainError(BetaProcError, ValueError):
    """An argument lies outside the domain of an operation."""


class SpecialFunctionOverflow(BetaProcError, OverflowError):
    """A special function value is not representable in double precision."""


class QuadratureError(BetaProcError, RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance."""


class ConvergenceError(BetaProcError, RuntimeError):
    """An iterative solver (eigensolver, linear program) failed."""


class BranchCutError(BetaProcError, ValueError):
    """A transform was evaluated on its branch cut."""


class MeasureMismatchError(BetaProcError, ValueError):
    """Two atomic measures do not share the atom set an operation requires."""


class SizeLimitError(BetaProcError, ValueError):
    """An input exceeds the size an operation accepts."""


class ConfigError(BetaProcError, ValueError):
    """An experiment configuration failed validation."""


class StoreError(BetaProcError, OSError):
    """Reading or writing a result file failed."""
