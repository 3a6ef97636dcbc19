"""Exception hierarchy shared by all surfcat modules.

Every domain error carries a stable machine-readable ``code`` so the CLI and
the HTTP service can serialize failures uniformly.
"""
from __future__ import annotations


class SurfcatError(Exception):
    code = "SurfcatError"

    def __init__(self, detail: str = ""):
        super().__init__(detail or self.code)
        self.detail = detail or self.code


class NonManifoldGluing(SurfcatError):
    code = "NonManifoldGluing"


class SelfFoldedTriangle(SurfcatError):
    code = "SelfFoldedTriangle"


class NoMarkedPointOnBoundary(SurfcatError):
    code = "NoMarkedPointOnBoundary"


class TooSmallSurface(SurfcatError):
    code = "TooSmallSurface"


class BoundaryArcFlip(SurfcatError):
    code = "BoundaryArcFlip"


class UnknownArc(SurfcatError):
    code = "UnknownArc"


class UnknownArrow(SurfcatError):
    code = "UnknownArrow"


class ZeroStringStatus(SurfcatError):
    code = "ZeroStringStatus"


class OnPeak(SurfcatError):
    code = "OnPeak"


class NotOnPeak(SurfcatError):
    code = "NotOnPeak"


class InjectiveModule(SurfcatError):
    code = "InjectiveModule"


class ProjectiveModule(SurfcatError):
    code = "ProjectiveModule"


class ZeroParameter(SurfcatError):
    code = "ZeroParameter"


class ZeroObject(SurfcatError):
    code = "ZeroObject"


class MixedTriangulations(SurfcatError):
    code = "MixedTriangulations"


class BandArgument(SurfcatError):
    code = "BandArgument"


class NoExactStructureFound(SurfcatError):
    code = "NoExactStructureFound"


class NoCrossingPatternFound(SurfcatError):
    code = "NoCrossingPatternFound"


class NoSelfCrossingPatternFound(SurfcatError):
    code = "NoSelfCrossingPatternFound"


class FrontierExceeded(SurfcatError):
    code = "FrontierExceeded"


class InvalidLiteral(SurfcatError):
    code = "InvalidLiteral"


class InvalidString(SurfcatError):
    code = "InvalidString"
