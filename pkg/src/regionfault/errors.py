"""Exception types shared across the package.

The CLI maps these onto exit codes: input problems exit 2, internal
invariant violations exit 3.
"""


class RegionFaultError(Exception):
    """Base class for all package-specific errors."""


class DegenerateLayout(RegionFaultError):
    """Two layout features coincide or touch improperly."""


class UnclosedEvent(RegionFaultError):
    """A surviving link references a failed node."""


class NotPlanarEmbedding(RegionFaultError):
    """Face tracing of a rotation system violates Euler's formula."""


class MalformedRotation(RegionFaultError):
    """Rotation system does not match the graph's incidence structure."""


class OrderingFailure(RegionFaultError):
    """No valid canonical ordering exists; signals a broken triangulation."""


class NotACycle(RegionFaultError):
    """An augmentation claimed feasible is not a spanning cycle."""


class InfiniteCostEdge(RegionFaultError):
    """An augmentation contains a link with infinite cost."""


class NotComplementEdge(RegionFaultError):
    """An augmentation link is not in the complement of the base link set."""


class ParseError(RegionFaultError):
    """Input file is syntactically unreadable."""


class ValidationError(RegionFaultError):
    """Input parsed but violates a structural invariant."""
