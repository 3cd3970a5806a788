"""Point and chord visibility width of simple polygons, in exact arithmetic."""

from .comb import (
    CombStructure,
    build_comb,
    certify_spike_isolation,
    comb_expected_widths,
    generate_comb,
    zero_stretch_comb,
)
from .errors import (
    CyclicGraph,
    EmptyInterval,
    EndpointNotOnBoundary,
    InputError,
    InternalDisconnectedInterval,
    InternalError,
    InvalidChord,
    NestingViolation,
    NotAReflexVertex,
    NotSimpleError,
    PointOutsidePolygon,
    PolygonFormatError,
    RestrictorOutsideR,
    SegmentLeavesPolygon,
    StretchSearchDiverged,
    VisWidthError,
)
from .geometry import (
    Chord,
    Intersection,
    IntersectionKind,
    Location,
    Orientation,
    Point,
    Segment,
    SimplePolygon,
    contains_point,
    is_simple,
    make_chord,
    orientation,
    reflex_vertices,
    segments_intersect,
)
from .restriction import (
    RestrictionGraph,
    build_restriction_graph,
    check_graph_properties,
    path_visibility_witness,
    visible_reflex_set,
)
from .visibility import (
    ChordInterval,
    VisibilityRegion,
    WeakVisibilityRegion,
    chord_interval,
    restrictors_of,
    sees,
    visibility_polygon,
    weak_visibility,
)
from .widths import (
    Method,
    WidthResult,
    chord_reflex_count,
    cvw,
    pvw,
    reflex_depth,
    restriction_size_bound,
)

__version__ = "0.1.0"
