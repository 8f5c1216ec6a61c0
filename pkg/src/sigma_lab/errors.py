"""Exception hierarchy shared by every module of the lab."""


class SigmaLabError(Exception):
    """Base class for all errors raised by sigma_lab."""


class SpaceValidationError(SigmaLabError):
    """A proposed open family violates the space axioms."""


class MissingEmptyOrFull(SpaceValidationError):
    pass


class NotClosedUnderUnion(SpaceValidationError):
    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = pair


class NotClosedUnderIntersection(SpaceValidationError):
    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = pair


class GroundMismatch(SigmaLabError):
    """Two subsets (or a subset and a space) live over different ground sets."""


class TooLarge(SigmaLabError):
    """Requested size exceeds a hard guard of the algorithm."""


class FormulationMismatch(SigmaLabError):
    """Two formulations of the same predicate disagreed.

    This always indicates either an implementation bug or a finite
    refutation of a published equivalence; it is never swallowed.
    """


class ParseError(SigmaLabError):
    pass


class UnknownLaw(SigmaLabError):
    pass


class LawFailed(SigmaLabError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SchemaMismatch(SigmaLabError):
    pass


class UnsupportedQuery(SigmaLabError):
    pass


class UnknownClaim(SigmaLabError):
    pass
