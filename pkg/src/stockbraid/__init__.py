"""stockbraid: braid words from stock price crossings, knot invariants of
their closures, and the anyonic outcome probability of the plat-closed
interference braid."""

from .braid import (
    BraidWord,
    Generator,
    WordFormatError,
    compose,
    format_word,
    free_reduce,
    inverse,
    parse_word,
    permutation,
    writhe,
)
from .bracket import (
    CrossingCapExceeded,
    bracket_eval,
    bracket_poly,
    bracket_poly_state_sum,
    jones_eval,
    jones_from_bracket,
    kauffman_invariant,
    verify_jones_skein,
)
from .closure import (
    ClosedBraid,
    ClosureError,
    DiagramStats,
    component_count,
    diagram_stats,
    minima_count,
    plat_close,
    trace_close,
)
from .crossings import (
    CrossingEvent,
    CrossingSign,
    audit_log,
    build_braid,
    classify_crossing,
    detect_crossings,
    rank_order,
)
from .laurent import LaurentPoly, poly_from_json, poly_to_json
from .market import (
    CsvFormatError,
    PriceSeries,
    WindowError,
    format_csv,
    parse_csv,
    select_window,
)
from .outcome import (
    FIBONACCI_POINT,
    GOLDEN_RATIO,
    GoldenConstant,
    OutcomeReport,
    interference_braid,
    outcome_from_stats,
    outcome_probability,
    plat_amplitude,
)
from .render import render_ascii, render_svg

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "ClosedBraid",
    "ClosureError",
    "CrossingCapExceeded",
    "CrossingEvent",
    "CrossingSign",
    "CsvFormatError",
    "DiagramStats",
    "FIBONACCI_POINT",
    "GOLDEN_RATIO",
    "Generator",
    "GoldenConstant",
    "LaurentPoly",
    "OutcomeReport",
    "PriceSeries",
    "WindowError",
    "WordFormatError",
    "audit_log",
    "bracket_eval",
    "bracket_poly",
    "bracket_poly_state_sum",
    "build_braid",
    "classify_crossing",
    "component_count",
    "compose",
    "detect_crossings",
    "diagram_stats",
    "format_csv",
    "format_word",
    "free_reduce",
    "interference_braid",
    "inverse",
    "jones_eval",
    "jones_from_bracket",
    "kauffman_invariant",
    "minima_count",
    "outcome_from_stats",
    "outcome_probability",
    "parse_csv",
    "parse_word",
    "permutation",
    "plat_amplitude",
    "plat_close",
    "poly_from_json",
    "poly_to_json",
    "rank_order",
    "render_ascii",
    "render_svg",
    "select_window",
    "trace_close",
    "verify_jones_skein",
    "writhe",
]
