"""Tiling signatures of right-angled alternating links on a genus-g surface.

A signature ``(g, n, m, k_n, k_m)`` records the two polygon types of a
quasiregular ``[n, m, n, m]`` tiling and how many of each tile a genus-g
quotient carries.  Everything here is exact: integrality of the tile counts
is decided with :class:`fractions.Fraction`, never with floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

__all__ = [
    "InvalidGenusError",
    "TilingSignature",
    "CountBound",
    "enumerate_signatures",
    "signature_from_pair",
    "count_bounds",
    "special_case_k1",
    "table_order",
]


class InvalidGenusError(ValueError):
    """Raised when a genus lies outside the domain of an operation."""


@dataclass(frozen=True, order=True)
class TilingSignature:
    """Polygon types and tile counts for one genus.

    ``n <= m`` always.  For the torus (``g == 1``) the counts are not
    determined by the area equation and are ``None`` unless a concrete
    quotient size has been chosen with :meth:`with_counts`.
    """

    g: int
    n: int
    m: int
    k_n: Optional[int] = None
    k_m: Optional[int] = None

    def __post_init__(self):
        if self.g < 1:
            raise InvalidGenusError(f"genus must be >= 1, got {self.g}")
        if self.n < 3 or self.m < self.n:
            raise ValueError(f"need 3 <= n <= m, got n={self.n}, m={self.m}")
        if (self.k_n is None) != (self.k_m is None):
            raise ValueError("k_n and k_m must both be given or both omitted")
        if self.k_n is None:
            if self.g != 1:
                raise ValueError("tile counts are required for genus >= 2")
        else:
            if self.k_n < 1 or self.k_m < 1:
                raise ValueError("tile counts must be positive")
            if self.k_n * self.n != self.k_m * self.m:
                raise ValueError(
                    f"k_n*n != k_m*m: {self.k_n}*{self.n} != {self.k_m}*{self.m}"
                )
        curvature = (self.n - 2) * (self.m - 2)
        if self.g == 1 and curvature != 4:
            raise ValueError(f"[{self.n},{self.m},{self.n},{self.m}] is not Euclidean")
        if self.g >= 2:
            if curvature <= 4:
                raise ValueError(f"[{self.n},{self.m},{self.n},{self.m}] is not hyperbolic")
            if area_defect(self.n, self.m, self.k_n) != 4 * (self.g - 1):
                raise ValueError(f"counts do not satisfy the area equation at genus {self.g}")

    @property
    def bounded(self) -> bool:
        return self.k_n is not None

    @property
    def num_edges(self) -> int:
        """Edges of a diagram built from this signature (needs counts)."""
        if self.k_n is None:
            raise ValueError("signature has no tile counts")
        return (self.k_n * self.n + self.k_m * self.m) // 2

    def with_counts(self, k_n: int, k_m: int) -> "TilingSignature":
        """Return a copy with explicit tile counts (torus quotients only)."""
        if self.g != 1:
            raise ValueError("tile counts are fixed by the genus when g >= 2")
        return TilingSignature(self.g, self.n, self.m, k_n, k_m)

    def table_row(self) -> tuple:
        """``(g, m, n, k_m, k_n)``, the column order of the printed table."""
        return (self.g, self.m, self.n, self.k_m, self.k_n)


@dataclass(frozen=True)
class CountBound:
    """Upper bounds for genus ``g``: tiling pairs, and links overall."""

    g: int
    pair_bound: Fraction
    link_bound: Fraction


def area_defect(n: int, m: int, k_n: int) -> Fraction:
    """``k_n * (n - 2 - 2n/m)``, i.e. the tile area in units of pi."""
    return k_n * (n - 2 - Fraction(2 * n, m))


def _counts(g: int, n: int, m: int):
    denom = n * m - 2 * m - 2 * n
    if denom <= 0:
        return None
    k_n = Fraction(4 * (g - 1) * m, denom)
    if k_n.denominator != 1 or k_n <= 0:
        return None
    k_m = k_n * n / m
    if k_m.denominator != 1:
        return None
    return int(k_n), int(k_m)


def signature_from_pair(g: int, n: int, m: int) -> Optional[TilingSignature]:
    """Solve the area equations for the tile counts of an ``(n, m)`` pair.

    Returns ``None`` when either count fails to be a positive integer,
    including the spherical and Euclidean pairs.  Order of ``n`` and ``m``
    does not matter; the result is normalized to ``n <= m``.
    """
    if g < 2:
        raise InvalidGenusError(f"signature_from_pair needs g >= 2, got {g}")
    if n < 3 or m < 3:
        raise ValueError(f"polygons need at least 3 sides, got n={n}, m={m}")
    n, m = min(n, m), max(n, m)
    counts = _counts(g, n, m)
    if counts is None:
        return None
    return TilingSignature(g, n, m, *counts)


def enumerate_signatures(g: int) -> list[TilingSignature]:
    """All signatures for genus ``g``, sorted by ``(m, n)``.

    For ``g >= 2`` every pair ``3 <= n <= m <= 12g - 6`` is tried; larger
    ``m`` cannot occur because ``k_m >= 1`` and ``n >= 3`` force
    ``m/3 <= 4g - 2``.  The torus case returns the square and trihexagonal
    tilings without counts.
    """
    if g < 1:
        raise InvalidGenusError(f"genus must be >= 1, got {g}")
    if g == 1:
        return [TilingSignature(1, 4, 4), TilingSignature(1, 3, 6)]
    found = []
    for m in range(3, 12 * g - 5):
        for n in range(3, m + 1):
            counts = _counts(g, n, m)
            if counts is not None:
                found.append(TilingSignature(g, n, m, *counts))
    return found


def table_order(signatures: list[TilingSignature]) -> list[TilingSignature]:
    """Reorder into the printed table layout.

    Rows with ``n < m`` come first, ascending in ``(m, n)``; the ``n == m``
    rows follow in descending ``m``.
    """
    mixed = sorted((s for s in signatures if s.n != s.m), key=lambda s: (s.m, s.n))
    equal = sorted((s for s in signatures if s.n == s.m), key=lambda s: -s.m)
    return mixed + equal


def special_case_k1(g: int) -> TilingSignature:
    """The single-tile-per-colour signature, two ``4g``-gons."""
    if g < 2:
        raise InvalidGenusError(f"special_case_k1 needs g >= 2, got {g}")
    return TilingSignature(g, 4 * g, 4 * g, 1, 1)


def count_bounds(g: int) -> CountBound:
    """Exact pair-count polynomial and the factorial-scaled link bound."""
    if g < 2:
        raise InvalidGenusError(f"count bounds are only derived for g >= 2, got {g}")
    pair_bound = Fraction(310 * g * g, 9) - Fraction(101 * g, 3) + 4
    return CountBound(g, pair_bound, pair_bound * factorial(84 * g - 83))
