"""Four-valent combinatorial maps on closed orientable surfaces.

Darts are the integers ``0 .. 2E - 1``.  A map is the pair

* ``alpha`` -- fixed-point-free involution pairing the two darts of an edge,
* ``sigma`` -- counterclockwise rotation of the darts leaving each vertex.

The face permutation is ``phi = sigma^-1 o alpha``; each orbit lists the
darts having one face on their left, in counterclockwise order around that
face.  Conversely ``sigma = alpha o phi^-1``, which is how a polygon gluing
is turned into a map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from .gluing import DiagramError, GluingSpec

__all__ = [
    "OrientabilityError",
    "ValenceError",
    "ConnectivityError",
    "SurfaceMap",
    "from_gluing",
    "to_gluing",
    "genus",
    "relabel",
    "mirror",
    "orbits",
]


class OrientabilityError(DiagramError):
    """The pairing flags admit no consistent orientation of the polygons."""


class ValenceError(DiagramError):
    """Some vertex of the quotient does not have exactly four corners."""


class ConnectivityError(DiagramError):
    """The map falls apart into several surfaces."""


def orbits(perm: Sequence[int]) -> list[list[int]]:
    """Cycles of a permutation, each starting at its smallest element."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        d = start
        while not seen[d]:
            seen[d] = True
            cycle.append(d)
            d = perm[d]
        cycles.append(cycle)
    return cycles


def _invert(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


@dataclass(frozen=True)
class SurfaceMap:
    """A cellularly embedded four-valent graph.

    ``origin`` optionally names each dart as ``(polygon id, side index)``;
    it is informational and ignored by equality.
    """

    alpha: tuple[int, ...]
    sigma: tuple[int, ...]
    origin: Optional[tuple[tuple[str, int], ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "sigma", tuple(self.sigma))
        size = len(self.alpha)
        if len(self.sigma) != size:
            raise DiagramError("alpha and sigma act on different dart sets")
        if size == 0 or size % 2:
            raise DiagramError(f"need a positive even number of darts, got {size}")
        for d, e in enumerate(self.alpha):
            if not 0 <= e < size or e == d or self.alpha[e] != d:
                raise DiagramError("alpha must be a fixed-point-free involution")
        if sorted(self.sigma) != list(range(size)):
            raise DiagramError("sigma is not a permutation")
        bad = [len(c) for c in orbits(self.sigma) if len(c) != 4]
        if bad:
            raise ValenceError(f"vertex valences {sorted(set(bad))} found; all must be 4")

    @property
    def num_darts(self) -> int:
        return len(self.alpha)

    @cached_property
    def sigma_inv(self) -> tuple[int, ...]:
        return _invert(self.sigma)

    @cached_property
    def phi(self) -> tuple[int, ...]:
        return tuple(self.sigma_inv[a] for a in self.alpha)

    @cached_property
    def phi_inv(self) -> tuple[int, ...]:
        return _invert(self.phi)

    @cached_property
    def vertices(self) -> list[list[int]]:
        return orbits(self.sigma)

    @cached_property
    def faces(self) -> list[list[int]]:
        return orbits(self.phi)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return [(d, e) for d, e in enumerate(self.alpha) if d < e]

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        return _index(self.vertices, self.num_darts)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        return _index(self.faces, self.num_darts)

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        return _index(self.edges, self.num_darts)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return self.num_darts // 2

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    @cached_property
    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (self.alpha[d], self.sigma[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == self.num_darts

    def face_sizes(self) -> list[int]:
        return [len(f) for f in self.faces]


def _index(groups, size):
    where = [0] * size
    for k, group in enumerate(groups):
        for d in group:
            where[d] = k
    return tuple(where)


def _orientations(spec: GluingSpec) -> dict[str, int]:
    """Choose +1/-1 per polygon so every pairing is orientation compatible."""
    adjacency: dict[str, list[tuple[str, int]]] = {pid: [] for pid, _ in spec.polygons}
    for (pa, _), (pb, _), flag in spec.pairings:
        parity = 1 if flag else -1
        adjacency[pa].append((pb, parity))
        adjacency[pb].append((pa, parity))
    sign: dict[str, int] = {}
    for root, _ in spec.polygons:
        if root in sign:
            continue
        sign[root] = 1
        stack = [root]
        while stack:
            p = stack.pop()
            for q, parity in adjacency[p]:
                want = sign[p] * parity
                if q not in sign:
                    sign[q] = want
                    stack.append(q)
                elif sign[q] != want:
                    raise OrientabilityError(
                        f"pairing flags around polygons {p!r} and {q!r} force a non-orientable quotient"
                    )
    return sign


def from_gluing(spec: GluingSpec) -> SurfaceMap:
    """Quotient map of a polygon gluing.

    Dart ``offset(P) + i`` is side ``i`` of polygon ``P``; its face is ``P``.
    Polygons whose orientation must be reversed to make the quotient
    orientable are traversed backwards.
    """
    sign = _orientations(spec)
    offset = {}
    total = 0
    for pid, n in spec.polygons:
        offset[pid] = total
        total += n

    phi = [0] * total
    origin = []
    for pid, n in spec.polygons:
        base = offset[pid]
        step = sign[pid]
        for i in range(n):
            phi[base + i] = base + (i + step) % n
            origin.append((pid, i))

    alpha = [-1] * total
    for (pa, ea), (pb, eb), _ in spec.pairings:
        a, b = offset[pa] + ea, offset[pb] + eb
        alpha[a], alpha[b] = b, a

    phi_inv = _invert(phi)
    sigma = [alpha[phi_inv[d]] for d in range(total)]
    bad = sorted({len(c) for c in orbits(sigma) if len(c) != 4})
    if bad:
        raise ValenceError(f"corner valences {bad} found; a crossing needs exactly 4 corners")
    return SurfaceMap(tuple(alpha), tuple(sigma), tuple(origin))


def to_gluing(smap: SurfaceMap, prefix: str = "F") -> GluingSpec:
    """Write a map as a gluing of its faces; inverse of :func:`from_gluing`."""
    position = {}
    polygons = []
    for k, face in enumerate(smap.faces):
        pid = f"{prefix}{k}"
        polygons.append((pid, len(face)))
        for i, d in enumerate(face):
            position[d] = (pid, i)
    pairings = [(position[d], position[e], True) for d, e in smap.edges]
    return GluingSpec(tuple(polygons), tuple(pairings))


def genus(smap: SurfaceMap) -> int:
    if not smap.is_connected:
        raise ConnectivityError("map is disconnected; genus is defined per component")
    chi = smap.euler_characteristic
    assert chi % 2 == 0, "orientable closed surface must have even Euler characteristic"
    return (2 - chi) // 2


def relabel(smap: SurfaceMap, perm: Sequence[int]) -> SurfaceMap:
    """Rename dart ``d`` to ``perm[d]``."""
    size = smap.num_darts
    alpha = [0] * size
    sigma = [0] * size
    for d in range(size):
        alpha[perm[d]] = perm[smap.alpha[d]]
        sigma[perm[d]] = perm[smap.sigma[d]]
    return SurfaceMap(tuple(alpha), tuple(sigma))


def mirror(smap: SurfaceMap) -> SurfaceMap:
    """Same graph on the oppositely oriented surface."""
    return SurfaceMap(smap.alpha, smap.sigma_inv, smap.origin)
