"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class TopeGraphError(Exception):
    """Base class for every error raised by this package."""


class InvalidGraph(TopeGraphError, ValueError):
    pass


class DisconnectedGraph(InvalidGraph):
    pass


class NotPartialCube(TopeGraphError):
    """The input graph cannot be isometrically embedded in a hypercube."""

    reason = "NotPartialCube"


class NotBipartite(NotPartialCube):
    reason = "NotBipartite"


class NonConvexWSet(NotPartialCube):
    reason = "NonConvexWSet"

    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"W-set of edge {edge[0]}-{edge[1]} is not convex")
        self.edge = edge


class TooManyClasses(NotPartialCube):
    reason = "TooManyClasses"


class BadIndex(TopeGraphError, IndexError):
    pass


class InvalidExpansion(TopeGraphError, ValueError):
    pass


class NotConvex(TopeGraphError, ValueError):
    pass


class NotAntipodal(TopeGraphError, ValueError):
    pass


class NotAffine(TopeGraphError, ValueError):
    pass


class ParameterError(TopeGraphError, ValueError):
    pass


class EmptyResult(TopeGraphError, ValueError):
    pass


class NoTopes(TopeGraphError, ValueError):
    pass


class NotPartialCubeSystem(TopeGraphError, ValueError):
    pass


class InternalMismatch(TopeGraphError, AssertionError):
    """Two independent constructions that must agree did not."""


class EnumerationAborted(TopeGraphError):
    """Raised when an enumeration exceeds its time budget."""


class FormatError(TopeGraphError, ValueError):
    pass
