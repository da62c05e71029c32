"""Quasiregular tilings of closed surfaces and the link diagrams they carry."""

from .enumerate import (
    EnumeratedDiagram,
    EnumerationResult,
    SearchLimits,
    SearchTooLargeError,
    enumerate_diagrams,
    find_knots,
)
from .geometry import (
    GeometryError,
    PolygonGeometry,
    WedgeAngles,
    dihedral_check,
    gauss_bonnet_residual,
    interior_angles,
    polygon_geometry,
    regular_cross_ratio,
    wedge_angles,
)
from .signatures import (
    CountBound,
    InvalidGenusError,
    TilingSignature,
    count_bounds,
    enumerate_signatures,
    special_case_k1,
    table_order,
)

__version__ = "0.1.0"

__all__ = [
    "CountBound",
    "EnumeratedDiagram",
    "EnumerationResult",
    "GeometryError",
    "InvalidGenusError",
    "PolygonGeometry",
    "SearchLimits",
    "SearchTooLargeError",
    "TilingSignature",
    "WedgeAngles",
    "count_bounds",
    "dihedral_check",
    "enumerate_diagrams",
    "enumerate_signatures",
    "find_knots",
    "gauss_bonnet_residual",
    "interior_angles",
    "polygon_geometry",
    "regular_cross_ratio",
    "special_case_k1",
    "table_order",
    "wedge_angles",
]
