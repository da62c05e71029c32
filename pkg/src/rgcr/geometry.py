"""Hyperbolic trigonometry of quasiregular ``[n, m, n, m]`` tilings.

Angles are in radians.  A regular polygon with ``x`` sides and interior
angle ``a`` has half-edge length ``h`` with ``cosh h = cos(pi/x) / sin(a/2)``
(right triangle centre / vertex / edge midpoint).  Two polygons meeting
twice at every vertex must have ``a_n + a_m = pi``; equating their edge
lengths then gives ``tan(a_n / 2) = cos(pi/n) / cos(pi/m)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .signatures import TilingSignature

__all__ = [
    "DEFAULT_TOLERANCE",
    "GeometryError",
    "PolygonGeometry",
    "WedgeAngles",
    "interior_angles",
    "polygon_geometry",
    "gauss_bonnet_residual",
    "wedge_angles",
    "dihedral_check",
    "regular_cross_ratio",
]

DEFAULT_TOLERANCE = 1e-9


class GeometryError(ValueError):
    """Input outside the Euclidean/hyperbolic range handled here."""


@dataclass(frozen=True)
class PolygonGeometry:
    n: int
    alpha: float
    edge_length: float
    area: float
    flat: bool

    @property
    def alpha_degrees(self) -> float:
        return math.degrees(self.alpha)


@dataclass(frozen=True)
class WedgeAngles:
    """Dihedral angles of one face-centred bipyramid wedge.

    ``A`` sits at the apex axis, ``D`` on the polygon edge, and the four
    remaining edges carry half the interior angle.
    """

    A: float
    B: float
    C: float
    D: float
    E: float
    F: float


def interior_angles(n: int, m: int) -> tuple[float, float]:
    """Interior angles of the regular n-gon and m-gon of the tiling.

    The second angle is computed as ``pi - alpha_n`` so the pair is
    supplementary by construction.
    """
    if n < 3 or m < 3:
        raise GeometryError(f"polygons need at least 3 sides, got ({n}, {m})")
    if (n - 2) * (m - 2) < 4:
        raise GeometryError(f"[{n},{m},{n},{m}] is spherical")
    alpha_n = 2.0 * math.atan(math.cos(math.pi / n) / math.cos(math.pi / m))
    return alpha_n, math.pi - alpha_n


def polygon_geometry(n: int, alpha: float, tolerance: float = DEFAULT_TOLERANCE) -> PolygonGeometry:
    """Area, edge length and flatness of the regular n-gon with angle ``alpha``.

    A polygon within ``tolerance`` of the Euclidean angle ``(n-2)pi/n`` is
    reported flat, with zero area and zero edge length (no canonical scale).
    """
    if n < 3:
        raise GeometryError(f"polygons need at least 3 sides, got {n}")
    euclid = (n - 2) * math.pi / n
    if not (0.0 < alpha <= euclid + tolerance):
        raise GeometryError(f"interior angle {alpha!r} outside (0, {euclid!r}] for n={n}")
    if abs(alpha - euclid) <= tolerance:
        return PolygonGeometry(n, alpha, 0.0, 0.0, True)
    area = (n - 2) * math.pi - n * alpha
    edge = 2.0 * math.acosh(math.cos(math.pi / n) / math.sin(alpha / 2.0))
    return PolygonGeometry(n, alpha, edge, area, False)


def gauss_bonnet_residual(sig: TilingSignature) -> float:
    """Total tile area minus ``4 pi (g - 1)``; zero for a consistent signature."""
    if sig.k_n is None:
        raise GeometryError("the torus signature carries no tile counts")
    alpha_n, alpha_m = interior_angles(sig.n, sig.m)
    area_n = (sig.n - 2) * math.pi - sig.n * alpha_n
    area_m = (sig.m - 2) * math.pi - sig.m * alpha_m
    return sig.k_n * area_n + sig.k_m * area_m - 4.0 * math.pi * (sig.g - 1)


def wedge_angles(n: int, alpha: float) -> WedgeAngles:
    if not 0.0 < alpha < math.pi:
        raise GeometryError(f"interior angle {alpha!r} outside (0, pi)")
    half = alpha / 2.0
    return WedgeAngles(A=2.0 * math.pi / n, B=half, C=half, D=math.pi - alpha, E=half, F=half)


def dihedral_check(alpha_n: float, alpha_m: float) -> float:
    """Dihedral angle along a crossing edge of the checkerboard polyhedron.

    Each wedge contributes half of its ``D`` angle; the sum is ``pi/2``
    exactly when the two interior angles are supplementary.
    """
    if not (0.0 < alpha_n < math.pi and 0.0 < alpha_m < math.pi):
        raise GeometryError("interior angles must lie in (0, pi)")
    return (math.pi - alpha_n + math.pi - alpha_m) / 2.0


def regular_cross_ratio(x: int) -> float:
    """Cross-ratio of four consecutive vertices of a regular ideal x-gon.

    Undefined for triangles, where ``2 cos(2 pi / 3) + 1`` vanishes.
    """
    if x < 3:
        raise GeometryError(f"polygons need at least 3 sides, got {x}")
    if x == 3:
        raise GeometryError("cross-ratio is singular for x = 3 (zero denominator)")
    return 1.0 + 1.0 / (2.0 * math.cos(2.0 * math.pi / x) + 1.0)
