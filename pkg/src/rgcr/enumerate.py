"""Exhaustive search for diagrams realizing a tiling signature.

The ``k_n`` n-gons are white and the ``k_m`` m-gons shaded; every edge
joins a white side to a shaded side, so a gluing is a bijection between
white and shaded sides.  With every polygon oriented counterclockwise and
sides glued with opposite directions the quotient is orientable, and any
orientable gluing is isomorphic to one of this form.

The search pairs sides one at a time.  A pairing ``a <-> b`` fixes the
rotation successors ``phi(a) -> b`` and ``phi(b) -> a``; partial rotation
chains longer than four darts are pruned, and a chain of exactly four
forces the pairing that closes it.  Side 0 of the first white polygon is
glued to side 0 of the first shaded polygon, which loses nothing since
rotating and permuting shaded polygons gives isomorphic maps.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .diagrams import (
    DiagramReport,
    GluingSpec,
    SurfaceMap,
    canonical_form,
    canonical_map,
    to_gluing,
    verify,
)
from .signatures import TilingSignature

__all__ = [
    "SearchLimits",
    "SearchTooLargeError",
    "EnumeratedDiagram",
    "EnumerationResult",
    "enumerate_diagrams",
    "gluing_classes",
    "find_knots",
    "polygon_layout",
]

log = logging.getLogger(__name__)


class SearchTooLargeError(RuntimeError):
    def __init__(self, num_edges: int, max_edges: int):
        self.num_edges = num_edges
        self.max_edges = max_edges
        super().__init__(f"search too large: {num_edges} edges exceeds the cap of {max_edges}")


@dataclass(frozen=True)
class SearchLimits:
    max_edges: int = 24


@dataclass(frozen=True)
class EnumeratedDiagram:
    canonical: bytes
    smap: SurfaceMap
    report: DiagramReport

    @property
    def components(self) -> int:
        return self.report.components

    def gluing(self) -> GluingSpec:
        return to_gluing(self.smap)


@dataclass(frozen=True)
class EnumerationResult:
    signature: TilingSignature
    diagrams: tuple[EnumeratedDiagram, ...]
    gluings_explored: int
    mirror_quotient: bool = True

    @property
    def knot_count(self) -> int:
        return sum(1 for d in self.diagrams if d.components == 1)

    @property
    def knots(self) -> list[EnumeratedDiagram]:
        return [d for d in self.diagrams if d.components == 1]


def polygon_layout(sig: TilingSignature) -> list[int]:
    """Side counts of the polygons, white n-gons first."""
    if sig.k_n is None:
        raise ValueError("signature needs tile counts; use TilingSignature.with_counts for the torus")
    return [sig.n] * sig.k_n + [sig.m] * sig.k_m


class _Search:
    def __init__(self, sizes: list[int], num_white: int):
        phi, phi_inv, color = [], [], []
        base = 0
        for k, s in enumerate(sizes):
            for i in range(s):
                phi.append(base + (i + 1) % s)
                phi_inv.append(base + (i - 1) % s)
                color.append(0 if k < num_white else 1)
            base += s
        self.phi = phi
        self.phi_inv = phi_inv
        self.color = color
        self.polygon = [k for k, s in enumerate(sizes) for _ in range(s)]
        self.num_polygons = len(sizes)
        self.size = base
        self.alpha = [-1] * base
        self.paired = [0] * len(sizes)
        self.start = [sum(sizes[:k]) for k in range(len(sizes))]
        self.trail: list[int] = []
        self.first_shaded = sum(sizes[:num_white])

    # -- constraint propagation -------------------------------------------

    def _chain(self, x):
        """Length of the rotation chain through ``x`` and its open ends."""
        alpha, phi, phi_inv = self.alpha, self.phi, self.phi_inv
        length = 1
        y = x
        while True:
            p = alpha[phi_inv[y]]
            if p < 0:
                break
            if p == x:
                return length, None, None
            y = p
            length += 1
            if length > 4:
                return length, None, None
        last = y
        y = x
        while True:
            a = alpha[y]
            if a < 0:
                break
            y = phi[a]
            length += 1
            if length > 4:
                return length, None, None
        return length, y, last

    def assign(self, a, b) -> bool:
        """Pair ``a`` with ``b`` and everything it forces; False on conflict."""
        alpha, color = self.alpha, self.color
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            if alpha[a] >= 0 or alpha[b] >= 0:
                if alpha[a] == b:
                    continue
                return False
            if a == b or color[a] == color[b]:
                return False
            alpha[a] = b
            alpha[b] = a
            self.paired[self.polygon[a]] += 1
            self.paired[self.polygon[b]] += 1
            self.trail.append(a)
            for x in (b, a):
                length, first, last = self._chain(x)
                if first is None:
                    if length != 4:
                        return False
                elif length == 4:
                    queue.append((self.phi_inv[last], first))
        return True

    def undo(self, mark: int) -> None:
        alpha, trail = self.alpha, self.trail
        while len(trail) > mark:
            a = trail.pop()
            self.paired[self.polygon[a]] -= 1
            self.paired[self.polygon[alpha[a]]] -= 1
            alpha[alpha[a]] = -1
            alpha[a] = -1

    # -- branching ----------------------------------------------------------

    def branch_dart(self) -> int:
        """Unpaired dart whose pairing extends the longest open chain."""
        best, best_len = -1, -1
        for p in range(self.size):
            if self.alpha[p] >= 0:
                continue
            length, _, _ = self._chain(self.phi[p])
            if length > best_len:
                best, best_len = p, length
                if length == 3:
                    break
        return best

    def options(self, p: int) -> list[int]:
        """Partners for ``p``, one representative per untouched polygon orbit.

        Polygons with no paired side are interchangeable and can be rotated
        freely, so only side 0 of the first of them is tried.
        """
        c = self.color[p]
        out = []
        fresh_done = False
        for q in range(self.size):
            if self.alpha[q] >= 0 or self.color[q] == c:
                continue
            k = self.polygon[q]
            if self.paired[k] == 0:
                if fresh_done or q != self.start[k]:
                    continue
                fresh_done = True
            out.append(q)
        return out

    def connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            k = stack.pop()
            for d in range(self.size):
                if self.polygon[d] == k:
                    other = self.polygon[self.alpha[d]]
                    if other not in seen:
                        seen.add(other)
                        stack.append(other)
        return len(seen) == self.num_polygons

    def leaf_map(self) -> SurfaceMap:
        alpha = tuple(self.alpha)
        sigma = tuple(alpha[self.phi_inv[d]] for d in range(self.size))
        return SurfaceMap(alpha, sigma)

    def run(self, found: dict, mirror_quotient: bool) -> int:
        """Depth-first search from the current state; returns leaves reached."""
        p = self.branch_dart()
        if p < 0:
            if not self.connected():
                return 0
            smap = self.leaf_map()
            key = canonical_form(smap, mirror_quotient)
            found.setdefault(key, smap)
            return 1
        leaves = 0
        for q in self.options(p):
            mark = len(self.trail)
            if self.assign(p, q):
                leaves += self.run(found, mirror_quotient)
            self.undo(mark)
        return leaves


def _start(sig: TilingSignature) -> Optional[_Search]:
    search = _Search(polygon_layout(sig), sig.k_n)
    if not search.assign(0, search.first_shaded):
        return None
    return search


def _subtree(sig: TilingSignature, pair: tuple[int, int], mirror_quotient: bool):
    search = _start(sig)
    found: dict = {}
    leaves = 0
    if search is not None and search.assign(*pair):
        leaves = search.run(found, mirror_quotient)
    return found, leaves


def _check_limits(sig: TilingSignature, limits: SearchLimits) -> None:
    edges = sum(polygon_layout(sig)) // 2
    if edges > limits.max_edges:
        raise SearchTooLargeError(edges, limits.max_edges)


def gluing_classes(
    sig: TilingSignature,
    limits: SearchLimits = SearchLimits(),
    mirror_quotient: bool = True,
    workers: int = 1,
) -> tuple[dict[bytes, SurfaceMap], int]:
    """Connected four-valent quotients of ``sig`` before any other check.

    Returns ``({canonical form: map}, number of complete gluings reached)``.
    ``workers > 1`` farms the top-level branches out to processes; the
    classes found do not depend on the partition.
    """
    _check_limits(sig, limits)
    search = _start(sig)
    found: dict = {}
    leaves = 0
    if search is None:
        return found, leaves
    p = search.branch_dart()
    if workers <= 1 or p < 0:
        leaves = search.run(found, mirror_quotient)
        return found, leaves
    tasks = [(p, q) for q in search.options(p)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_subtree, [sig] * len(tasks), tasks, [mirror_quotient] * len(tasks))
        for part, count in parts:
            leaves += count
            for key, smap in part.items():
                found.setdefault(key, smap)
    return found, leaves


def enumerate_diagrams(
    sig: TilingSignature,
    limits: SearchLimits = SearchLimits(),
    mirror_quotient: bool = True,
    workers: int = 1,
) -> EnumerationResult:
    """All verified diagrams of ``sig`` up to isomorphism, sorted by canonical form."""
    found, leaves = gluing_classes(sig, limits, mirror_quotient, workers)
    log.debug("%s: %d complete gluings, %d classes", sig, leaves, len(found))
    diagrams = []
    for key in sorted(found):
        rep = canonical_map(found[key], mirror_quotient)
        report = verify(rep, sig.n, sig.m)
        if report.ok and report.genus == sig.g:
            diagrams.append(EnumeratedDiagram(key, rep, report))
    return EnumerationResult(sig, tuple(diagrams), leaves, mirror_quotient)


def find_knots(
    sig: TilingSignature,
    limits: SearchLimits = SearchLimits(),
    mirror_quotient: bool = True,
    workers: int = 1,
) -> list[bytes]:
    """Canonical forms of the one-component diagrams of ``sig``."""
    result = enumerate_diagrams(sig, limits, mirror_quotient, workers)
    return [d.canonical for d in result.knots]
