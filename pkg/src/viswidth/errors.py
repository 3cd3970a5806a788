"""Exception hierarchy.

Input problems (bad JSON, non-simple polygons, invalid chords) derive from
:class:`InputError`; everything else signals a broken invariant inside the
library and should never happen on valid input.
"""


class VisWidthError(Exception):
    pass


class InputError(VisWidthError, ValueError):
    pass


class PolygonFormatError(InputError):
    pass


class NotSimpleError(InputError):
    pass


class PointOutsidePolygon(InputError):
    pass


class InvalidChord(InputError):
    pass


class EndpointNotOnBoundary(InvalidChord):
    pass


class SegmentLeavesPolygon(InvalidChord):
    pass


class NotAReflexVertex(InputError):
    pass


class EmptyInterval(InputError):
    pass


class InternalError(VisWidthError, RuntimeError):
    pass


class InternalDisconnectedInterval(InternalError):
    """A reflex vertex saw two separate pieces of one chord."""


class RestrictorOutsideR(InternalError):
    pass


class CyclicGraph(InternalError):
    pass


class NestingViolation(InternalError, AssertionError):
    pass


class StretchSearchDiverged(InternalError):
    pass
