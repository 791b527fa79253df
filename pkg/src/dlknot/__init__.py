"""Gauss-code calculus for knot diagrams decorated with signed double lines.

The package models knots in a thickened surface times a circle through
abstract cyclic codes of crossing passages and signed double-line markers,
together with the local move calculus acting on them, winding-parity
invariants, double-line elimination with replayable certificates, the
one-crossing catalog, sewed 2-component links, and a bounded equivalence
search.
"""

from .catalog import (
    OneCrossing,
    degree_k_family,
    essential_count_closed_form,
    family_rows,
    invariant_key,
    one_crossing,
    partner,
    stretch_family,
)
from .diagram import (
    OVER,
    UNDER,
    DiagramError,
    DlDiagram,
    DoubleLine,
    Passage,
    WindingParity,
    canonicalize,
    canonically_equal,
    degree,
    invariant_record,
    parity_profile,
    parse,
    raw_winding_sum,
    serialize,
    winding_parity,
)
from .links import (
    Clasp,
    Obstruction,
    SeparabilityVerdict,
    SewedLink,
    link_family_rows,
    linking_number,
    make_L,
    parse_sewed,
    separability_check,
    serialize_sewed,
    to_dl_diagram,
)
from .moves import (
    ALL_KINDS,
    MoveError,
    MoveInstance,
    MoveTrace,
    ReplayError,
    apply,
    enumerate_moves,
    invert,
    mk,
    replay,
)
from .projection import (
    EliminationCertificate,
    EssentialReport,
    ProjectionError,
    eliminate_double_lines,
    essential_count,
    essential_diagram,
    important_subsets,
    parity_projection,
    strip_double_lines,
)
from .search import SearchResult, bfs_search

__version__ = "0.1.0"

__all__ = [
    "ALL_KINDS",
    "Clasp",
    "DiagramError",
    "DlDiagram",
    "DoubleLine",
    "EliminationCertificate",
    "EssentialReport",
    "MoveError",
    "MoveInstance",
    "MoveTrace",
    "Obstruction",
    "OneCrossing",
    "OVER",
    "Passage",
    "ProjectionError",
    "ReplayError",
    "SearchResult",
    "SeparabilityVerdict",
    "SewedLink",
    "UNDER",
    "WindingParity",
    "apply",
    "bfs_search",
    "canonicalize",
    "canonically_equal",
    "degree",
    "degree_k_family",
    "eliminate_double_lines",
    "enumerate_moves",
    "essential_count",
    "essential_count_closed_form",
    "essential_diagram",
    "family_rows",
    "important_subsets",
    "invariant_key",
    "invariant_record",
    "invert",
    "link_family_rows",
    "linking_number",
    "make_L",
    "mk",
    "one_crossing",
    "parity_profile",
    "parity_projection",
    "parse",
    "parse_sewed",
    "partner",
    "raw_winding_sum",
    "replay",
    "separability_check",
    "serialize",
    "serialize_sewed",
    "stretch_family",
    "strip_double_lines",
    "to_dl_diagram",
    "winding_parity",
]
