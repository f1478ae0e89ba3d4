"""Exception hierarchy.

Every numerical failure raised by the library derives from
:class:`IcosolveError`, so callers (and the CLI) can separate math
failures from programming errors with a single ``except``.
"""

from __future__ import annotations


class IcosolveError(Exception):
    """Base class for all library failures."""


class ComplexParseError(IcosolveError, ValueError):
    """Malformed complex literal.  ``column`` is 1-based."""

    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column}: {text!r}")
        self.text = text
        self.column = column


class DegenerateReduction(IcosolveError):
    """The quadratic Tschirnhaus step needs p != 0."""


class DegenerateCoefficients(IcosolveError):
    """A coefficient combination that some formula divides by vanishes."""


class LiftAmbiguity(IcosolveError):
    pass


class LiftCollision(IcosolveError):
    pass


class VertexSingularity(IcosolveError):
    """f vanishes: the point lies on the vertex orbit, where J is infinite."""


class FormRangeError(IcosolveError, ValueError):
    pass


class SeriesDivergence(IcosolveError):
    pass


class UnreachableRegion(IcosolveError):
    pass


class PoleError(IcosolveError):
    pass


class NearSingularJ(IcosolveError):
    """J sits on (or numerically at) a branch point 0 or 1."""


class BranchInconsistency(IcosolveError):
    pass


class DenominatorCollapse(IcosolveError):
    pass


class BranchSelectionFailed(IcosolveError):
    """No branch choice produced roots that pass the residual gate.

    ``attempts`` holds one diagnostic record per branch choice tried.
    """

    def __init__(self, message: str, attempts=()):
        super().__init__(message)
        self.attempts = list(attempts)


class NoConvergence(IcosolveError):
    """Root iteration hit its iteration cap.

    The partial estimates and last per-root corrections are kept so
    callers can still inspect them.
    """

    def __init__(self, message: str, values=(), corrections=(), iterations=0):
        super().__init__(message)
        self.values = list(values)
        self.corrections = list(corrections)
        self.iterations = iterations
