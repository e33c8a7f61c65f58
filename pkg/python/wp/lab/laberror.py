class LabError(Exception):
    """
    Base class of all errors raised by the geometry computations. The exit code
    is used by the command-line script when the error is not handled.
    """

    exit_code = 3

    def __init__(self, *args, partial=None):
        super().__init__(*args)
        self.partial = partial          # Partial result computed before the failure, if any


class ConfigError(LabError):
    exit_code = 2


class DomainError(LabError, ValueError):
    pass


class NotHyperbolic(LabError):
    pass


class SharedEndpoint(LabError):
    pass


class UnsupportedTopology(LabError):
    pass


class NonPositiveLength(LabError, ValueError):
    pass


class RelationResidualTooLarge(LabError):
    pass


class BudgetExceeded(LabError):
    exit_code = 4


class TailNotConvergent(LabError):
    pass


class NotPositiveDefinite(LabError):
    pass


class NonConvergentRefinement(LabError):
    pass


class StepTooLarge(LabError):
    pass


class LeftThickPart(LabError):
    pass


class NumericalError(LabError):
    pass
