"""Exception types shared across the package."""


class CmcLabError(Exception):
    """Base class for all cmclab errors."""


class ChartMismatch(CmcLabError):
    pass


class IdealPointError(CmcLabError):
    pass


class NoSuchArc(CmcLabError):
    pass


class InfiniteLength(CmcLabError):
    pass


class OpenBoundary(CmcLabError):
    pass


class NonFinite(CmcLabError):
    pass


class DomainError(CmcLabError):
    pass


class SingularPoint(CmcLabError):
    pass


class CriticalH(CmcLabError):
    """|H| >= 1/2 requested where only subcritical mean curvature is supported."""


class EmptyDomain(CmcLabError):
    pass


class OutsideDomain(CmcLabError):
    pass


class CaseMismatch(CmcLabError):
    pass


class TooFewSamples(CmcLabError):
    pass


class WindowTooShort(CmcLabError):
    pass


class DegenerateCell(CmcLabError):
    pass


class NoConvergence(CmcLabError):
    def __init__(self, message, residual=None, history=None):
        super().__init__(message)
        self.residual = residual
        self.history = history or []


class BarrierViolation(CmcLabError):
    pass


class CurveOutsideMesh(CmcLabError):
    pass


class MalformedDomain(CmcLabError):
    pass


class CombinatorialBlowup(CmcLabError):
    pass


class GeometryWarning(UserWarning):
    """Non-fatal: boundary curvature does not guarantee solvability."""
