"""Canonical labelling of connected maps, for isomorphism-free catalogs.

From a start dart, darts are renumbered in breadth-first order following
``sigma`` then ``alpha``; a connected map is rebuilt uniquely from such a
numbering.  The canonical code is the lexicographically smallest encoding
over all start darts, optionally also over the mirror map.
"""

from __future__ import annotations

from array import array

from .maps import ConnectivityError, SurfaceMap, mirror, relabel

__all__ = ["canonical_form", "canonical_map", "canonical_labelling"]


def _bfs_code(alpha, sigma, start):
    size = len(alpha)
    label = [-1] * size
    order = [start]
    label[start] = 0
    code = []
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for e in (sigma[d], alpha[d]):
            if label[e] < 0:
                label[e] = len(order)
                order.append(e)
            code.append(label[e])
    if len(order) != size:
        raise ConnectivityError("canonical form needs a connected map")
    return code, label


def canonical_labelling(smap: SurfaceMap) -> tuple[list[int], list[int]]:
    """Smallest BFS code of ``smap`` and the relabelling producing it."""
    best = None
    best_label = None
    for start in range(smap.num_darts):
        code, label = _bfs_code(smap.alpha, smap.sigma, start)
        if best is None or code < best:
            best, best_label = code, label
    return best, best_label


def canonical_map(smap: SurfaceMap, mirror_quotient: bool = True) -> SurfaceMap:
    """Representative of the isomorphism class (mirror included by default)."""
    code, label = canonical_labelling(smap)
    if mirror_quotient:
        flipped = mirror(smap)
        mcode, mlabel = canonical_labelling(flipped)
        if mcode < code:
            return relabel(flipped, mlabel)
    return relabel(smap, label)


def canonical_form(smap: SurfaceMap, mirror_quotient: bool = True) -> bytes:
    """Byte string equal for isomorphic maps.

    With ``mirror_quotient`` a map and its mirror image share one form.
    """
    code, _ = canonical_labelling(smap)
    if mirror_quotient:
        mcode, _ = canonical_labelling(mirror(smap))
        code = min(code, mcode)
    return array("H", code).tobytes()
