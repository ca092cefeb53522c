"""Exception hierarchy shared by every polyfew module."""


class PolytopeError(ValueError):
    """Base class for all polyfew errors."""


class IndexOutOfRange(PolytopeError):
    pass


class InvariantViolation(PolytopeError):
    """Raised when incidence data fails a structural check.

    ``clause`` names the violated condition, e.g. ``"facet containment"``.
    """

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        msg = clause if not detail else f"{clause}: {detail}"
        super().__init__(msg)


class UndefinedForPoint(PolytopeError):
    pass


class OracleLimitExceeded(PolytopeError):
    pass


class LatticeNotGraded(PolytopeError):
    pass


class UndefinedForZero(PolytopeError):
    pass


class OutOfDomain(PolytopeError):
    pass


class NotPolytopal(PolytopeError):
    pass


class UnsupportedAlpha(PolytopeError):
    pass
