"""Exception types shared across the package."""

from __future__ import annotations


class SscBoundError(Exception):
    """Base class for all package-specific errors."""


class InvalidEdge(SscBoundError, ValueError):
    """Edge endpoint out of range, or a self-loop."""


class TooSmall(SscBoundError, ValueError):
    """Graph family requires more nodes than requested."""


class BadParams(SscBoundError, ValueError):
    """Generator parameter outside its valid range."""


class DisconnectedAfterRetries(SscBoundError, RuntimeError):
    """Connected random graph requested but resampling never produced one."""


class Disconnected(SscBoundError, ValueError):
    """Operation requires a connected graph."""


class GraphDisconnected(SscBoundError, ValueError):
    """Some node is unreachable from a leader, so its distance vector is undefined."""


class InputTooLarge(SscBoundError, ValueError):
    """Exhaustive solver invoked above its point-count cap."""


class TableTooLarge(SscBoundError, RuntimeError):
    """Dynamic-programming table would exceed the configured cell cap."""


class TooFewLeaders(SscBoundError, ValueError):
    """Bound needs more leaders than provided."""


class WrongFamily(SscBoundError, ValueError):
    """Bound only applies to a specific graph family."""


class BadWeights(SscBoundError, ValueError):
    """Edge weight vector malformed or not strictly positive."""


class TooLarge(SscBoundError, ValueError):
    """Dense numeric oracle invoked above its size cap."""


class InvariantViolation(SscBoundError, AssertionError):
    """A cross-method dominance relation failed; indicates a solver bug."""
