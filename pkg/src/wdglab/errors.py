"""Exception types shared across the package."""


class WdgError(Exception):
    """Base class for all wdglab errors."""


class BadIndexError(WdgError):
    """Vertex index out of range, or an assignment of the wrong length."""


class SelfLoopError(WdgError):
    """An edge joins a vertex to itself (the diagonal is always zero)."""


class DuplicateEdgeError(WdgError):
    """Two edges share the same vertex pair after canonicalization."""


class NotSymmetricError(WdgError):
    """A matrix expected to be symmetric is not."""


class NonzeroDiagonalError(WdgError):
    """A matrix expected to have zero diagonal does not."""


class ShapeMismatchError(WdgError):
    """Matrix shapes are incompatible for the requested operation."""


class LimitExceededError(WdgError):
    """A brute-force enumeration would exceed the configured size limit."""


class DegenerateGraphError(WdgError):
    """The graph's value is constant (max - min = 0), so it cannot be rescaled."""


class SizeBudgetExceededError(WdgError):
    """A composition stage would exceed the configured entry budget."""


class EmptyTemplateError(WdgError):
    """An edge template with no edges was supplied where one is required."""


class InfeasibleError(WdgError):
    """No feasible solution was found (budget exhausted or provably impossible)."""


class IncompleteCsopError(WdgError):
    """Projector dimensions do not sum to the total space dimension."""


class DocumentError(WdgError):
    """A serialized document failed validation."""
