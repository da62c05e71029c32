"""Link projections as combinatorial maps, and their verifiers."""

from .canonical import canonical_form, canonical_labelling, canonical_map
from .gluing import (
    DiagramError,
    DiagramFormatError,
    GluingSpec,
    IncompleteGluingError,
    format_diagram,
    parse_diagram,
    read_diagram,
    write_diagram,
)
from .maps import (
    ConnectivityError,
    OrientabilityError,
    SurfaceMap,
    ValenceError,
    from_gluing,
    genus,
    mirror,
    orbits,
    relabel,
    to_gluing,
)
from .verify import (
    SHADED,
    WHITE,
    CheckerboardColoring,
    DiagramReport,
    TwoCutWitness,
    checkerboard,
    components,
    gear_shift_edge_classes,
    two_cut_candidates,
    vertex_face_sizes,
    vertex_pattern,
    verify,
    weakly_prime,
)

__all__ = [
    "CheckerboardColoring",
    "ConnectivityError",
    "DiagramError",
    "DiagramFormatError",
    "DiagramReport",
    "GluingSpec",
    "IncompleteGluingError",
    "OrientabilityError",
    "SHADED",
    "SurfaceMap",
    "TwoCutWitness",
    "ValenceError",
    "WHITE",
    "canonical_form",
    "canonical_labelling",
    "canonical_map",
    "checkerboard",
    "components",
    "format_diagram",
    "from_gluing",
    "gear_shift_edge_classes",
    "genus",
    "mirror",
    "orbits",
    "parse_diagram",
    "read_diagram",
    "relabel",
    "to_gluing",
    "two_cut_candidates",
    "vertex_face_sizes",
    "vertex_pattern",
    "verify",
    "weakly_prime",
    "write_diagram",
]
