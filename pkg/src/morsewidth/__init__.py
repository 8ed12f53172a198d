"""Morse-word presentations of knots and tangles: width and trunk
invariants, knot-type-preserving rewrites, search over positions, and a
bracket-polynomial check that rewrites never change the knot.
"""

from .errors import (
    BracketMismatch,
    BudgetExceeded,
    InvalidMove,
    ParseError,
    UnknownName,
    ValidationError,
    Violation,
)
from .events import (
    EventKind,
    MorseEvent,
    MorseWord,
    TangleWord,
    cap,
    component_count,
    cross,
    cup,
    require_knot,
    validate,
)
from .invariants import (
    THICK,
    THIN,
    NEITHER,
    EmbeddingReport,
    Gap,
    LevelProfile,
    average_trunk,
    bridge_count,
    connected_sum,
    critical_count,
    embedding_report,
    height,
    is_bridge_position,
    level_profile,
    otp_compare,
    otp_vector,
    proportion,
    rep_upper_bound,
    tangle_trunk,
    trunk,
    waist_upper_bound,
    width,
)
from .moves import (
    LENGTH_DELTA,
    Move,
    MoveKind,
    WRITHE_CHANGING,
    apply_move,
    canonical_key,
    enumerate_moves,
    inverse_move,
)
from .search import (
    ClassifiedPosition,
    Objective,
    ObjectiveKind,
    PositionClasses,
    SearchConfig,
    SearchResult,
    beam_search,
    classify_positions,
    exhaustive_min,
)
from .bracket import (
    DELTA,
    MAX_STATE_SUM_CROSSINGS,
    LaurentPoly,
    PlanarDiagram,
    jones_normalized,
    kauffman_bracket,
    planar_diagram,
    writhe,
)
from .textio import parse, render_profile, serialize
from .catalog import (
    catalog,
    entries,
    pad_with_fingers,
    profile_from_extrema,
    realize_profile,
    torus_plat,
)

__version__ = "0.1.0"

__all__ = [
    "BracketMismatch",
    "BudgetExceeded",
    "InvalidMove",
    "ParseError",
    "UnknownName",
    "ValidationError",
    "Violation",
    "EventKind",
    "MorseEvent",
    "MorseWord",
    "TangleWord",
    "cap",
    "component_count",
    "cross",
    "cup",
    "require_knot",
    "validate",
    "THICK",
    "THIN",
    "NEITHER",
    "EmbeddingReport",
    "Gap",
    "LevelProfile",
    "average_trunk",
    "bridge_count",
    "connected_sum",
    "critical_count",
    "embedding_report",
    "height",
    "is_bridge_position",
    "level_profile",
    "otp_compare",
    "otp_vector",
    "proportion",
    "rep_upper_bound",
    "tangle_trunk",
    "trunk",
    "waist_upper_bound",
    "width",
    "LENGTH_DELTA",
    "Move",
    "MoveKind",
    "WRITHE_CHANGING",
    "apply_move",
    "canonical_key",
    "enumerate_moves",
    "inverse_move",
    "ClassifiedPosition",
    "Objective",
    "ObjectiveKind",
    "PositionClasses",
    "SearchConfig",
    "SearchResult",
    "beam_search",
    "classify_positions",
    "exhaustive_min",
    "DELTA",
    "MAX_STATE_SUM_CROSSINGS",
    "LaurentPoly",
    "PlanarDiagram",
    "jones_normalized",
    "kauffman_bracket",
    "planar_diagram",
    "writhe",
    "parse",
    "render_profile",
    "serialize",
    "catalog",
    "entries",
    "pad_with_fingers",
    "profile_from_extrema",
    "realize_profile",
    "torus_plat",
]
