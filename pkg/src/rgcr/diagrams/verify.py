"""Checks a link projection must pass to be right-angled and alternating.

All checks are crossing-free: over/under information is never needed
because an alternating assignment exists, uniquely up to a global flip,
as soon as the faces are checkerboard coloured.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Optional

from .maps import SurfaceMap, genus

__all__ = [
    "WHITE",
    "SHADED",
    "CheckerboardColoring",
    "TwoCutWitness",
    "DiagramReport",
    "vertex_pattern",
    "vertex_face_sizes",
    "checkerboard",
    "components",
    "weakly_prime",
    "two_cut_candidates",
    "gear_shift_edge_classes",
    "verify",
]

WHITE = 0
SHADED = 1


@dataclass(frozen=True)
class CheckerboardColoring:
    """Face colours, or an odd cycle of faces proving none exist.

    ``colors[f]`` is the colour of face ``f`` (indexing ``SurfaceMap.faces``).
    """

    colors: Optional[tuple[int, ...]] = None
    odd_cycle: Optional[tuple[int, ...]] = None

    @property
    def colorable(self) -> bool:
        return self.colors is not None

    def __bool__(self) -> bool:
        return self.colorable

    def swapped(self) -> "CheckerboardColoring":
        if self.colors is None:
            return self
        return CheckerboardColoring(tuple(1 - c for c in self.colors))


@dataclass(frozen=True)
class TwoCutWitness:
    """A curve meeting the diagram twice and cutting off a disk with crossings.

    The curve crosses the edges of darts ``darts[0]`` and ``darts[1]``,
    running through face ``faces[0]`` (left of both darts) and back through
    ``faces[1]`` (right of both).
    """

    darts: tuple[int, int]
    edges: tuple[int, int]
    faces: tuple[int, int]
    disk_vertices: tuple[int, ...]


@dataclass(frozen=True)
class DiagramReport:
    genus: int
    num_vertices: int
    num_edges: int
    face_vector: tuple[int, ...]
    pattern: Optional[tuple[int, int]]
    vertex_pattern_ok: bool
    colorable: bool
    cellular: bool
    weakly_prime: bool
    witness: Optional[TwoCutWitness]
    components: int
    edge_class_sizes: tuple[int, ...]

    @property
    def edge_classes_ok(self) -> bool:
        return bool(self.edge_class_sizes) and all(s == 4 for s in self.edge_class_sizes)

    @property
    def ok(self) -> bool:
        return (
            self.cellular
            and self.vertex_pattern_ok
            and self.colorable
            and self.weakly_prime
            and self.edge_classes_ok
        )


def vertex_face_sizes(smap: SurfaceMap) -> list[tuple[int, ...]]:
    """Sizes of the faces met counterclockwise around each vertex."""
    sizes = smap.face_sizes()
    return [tuple(sizes[smap.face_of[d]] for d in vertex) for vertex in smap.vertices]


def vertex_pattern(smap: SurfaceMap, n: int, m: int) -> bool:
    """Every vertex sees faces of sizes ``n, m, n, m`` in cyclic order.

    Consecutive corners must also belong to different faces, so that an
    ``[n, n, n, n]`` vertex really alternates between two polygons.
    """
    face_of = smap.face_of
    for d in range(smap.num_darts):
        if face_of[d] == face_of[smap.alpha[d]]:
            return False
    allowed = {(n, m, n, m), (m, n, m, n)}
    return all(seq in allowed for seq in vertex_face_sizes(smap))


def _face_adjacency(smap: SurfaceMap) -> list[list[int]]:
    adj = [[] for _ in smap.faces]
    for d, e in smap.edges:
        f, g = smap.face_of[d], smap.face_of[e]
        adj[f].append(g)
        if f != g:
            adj[g].append(f)
    return adj


def checkerboard(smap: SurfaceMap) -> CheckerboardColoring:
    """Two-colour the faces so that faces sharing an edge differ.

    The face holding dart 0 is white.  On failure an odd closed walk in the
    face adjacency graph is returned instead.
    """
    adj = _face_adjacency(smap)
    color = [-1] * len(adj)
    parent = [-1] * len(adj)
    for root in range(len(adj)):
        if color[root] != -1:
            continue
        color[root] = WHITE
        queue = deque([root])
        while queue:
            f = queue.popleft()
            for g in adj[f]:
                if color[g] == -1:
                    color[g] = 1 - color[f]
                    parent[g] = f
                    queue.append(g)
                elif color[g] == color[f]:
                    return CheckerboardColoring(odd_cycle=_odd_cycle(parent, f, g))
    return CheckerboardColoring(colors=tuple(color))


def _odd_cycle(parent, f, g):
    if f == g:
        return (f,)
    path_f = [f]
    while parent[path_f[-1]] != -1:
        path_f.append(parent[path_f[-1]])
    path_g = [g]
    while parent[path_g[-1]] != -1:
        path_g.append(parent[path_g[-1]])
    on_f = set(path_f)
    tail_g = []
    for x in path_g:
        if x in on_f:
            lca = x
            break
        tail_g.append(x)
    head_f = path_f[: path_f.index(lca) + 1]
    return tuple(head_f + tail_g[::-1])


def components(smap: SurfaceMap) -> int:
    """Number of link components, by walking straight through crossings.

    Leaving along dart ``d`` one arrives on ``alpha(d)`` and exits along the
    opposite dart ``sigma^2(alpha(d))``.  Each component is found twice,
    once per direction.
    """
    alpha, sigma = smap.alpha, smap.sigma
    seen = [False] * smap.num_darts
    count = 0
    for start in range(smap.num_darts):
        if seen[start]:
            continue
        count += 1
        d = start
        while not seen[d]:
            seen[d] = True
            seen[alpha[d]] = True
            d = sigma[sigma[alpha[d]]]
    return count


def two_cut_candidates(smap: SurfaceMap):
    """Yield ``(x1, x2)`` for every simple curve crossing the diagram twice.

    The curve runs inside the face left of ``x1`` and ``x2``, crosses the
    edge of ``x2``, returns through the face left of ``alpha(x1)`` and
    ``alpha(x2)``, and crosses the edge of ``x1``.  The two edges differ.
    When both arcs lie in one face they must not cross.
    """
    alpha, face_of, edge_of = smap.alpha, smap.face_of, smap.edge_of
    position = {}
    for face in smap.faces:
        for i, d in enumerate(face):
            position[d] = i
    for x1 in range(smap.num_darts):
        for x2 in range(x1 + 1, smap.num_darts):
            if edge_of[x1] == edge_of[x2]:
                continue
            if face_of[x1] != face_of[x2] or face_of[alpha[x1]] != face_of[alpha[x2]]:
                continue
            if face_of[x1] == face_of[alpha[x1]]:
                if _interleaved(position, x1, x2, alpha[x1], alpha[x2]):
                    continue
            yield x1, x2


def _interleaved(position, a, b, c, d):
    lo, hi = sorted((position[a], position[b]))
    inside_c = lo < position[c] < hi
    inside_d = lo < position[d] < hi
    return inside_c != inside_d


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _cut_sides(smap: SurfaceMap, x1: int, x2: int):
    """Cut the surface along the curve of ``(x1, x2)``.

    Returns one ``(euler_characteristic, vertices)`` pair per piece of the
    cut surface.  Half-edges contribute a new vertex and an edge each and
    cancel; a face piece bounded by ``r`` arcs of the curve contributes
    ``1 - r``.
    """
    alpha, face_of, edge_of, vertex_of = smap.alpha, smap.face_of, smap.edge_of, smap.vertex_of
    cut_darts = {x1, x2, alpha[x1], alpha[x2]}
    cut_edges = {edge_of[x1], edge_of[x2]}
    chords = {x1: x2, x2: x1, alpha[x1]: alpha[x2], alpha[x2]: alpha[x1]}
    cut_faces = {face_of[x1], face_of[alpha[x1]]}
    uf = _UnionFind()

    for v in range(smap.num_vertices):
        uf.find(("v", v))
    for d, e in smap.edges:
        if edge_of[d] in cut_edges:
            # halves named by the vertex they touch
            uf.union(("h", d), ("v", vertex_of[d]))
            uf.union(("h", e), ("v", vertex_of[e]))
        else:
            uf.union(("e", edge_of[d]), ("v", vertex_of[d]))
            uf.union(("e", edge_of[d]), ("v", vertex_of[e]))

    piece_arcs = Counter()
    for f, face in enumerate(smap.faces):
        if f not in cut_faces:
            for d in face:
                uf.union(("f", f), ("e", edge_of[d]))
            continue
        # Endpoints of chords along this face boundary, in order; arc k
        # runs from endpoint k to endpoint k + 1.
        ends = [i for i, d in enumerate(face) if d in cut_darts]
        slot = {face[i]: k for k, i in enumerate(ends)}
        arcs = _UnionFind()
        count = len(ends)
        for d, k in slot.items():
            j = slot[chords[d]]
            arcs.union(k, (j - 1) % count)
        for k in range(count):
            piece = ("p", f, arcs.find(k))
            piece_arcs[piece] += 1
            start = ends[k]
            stop = ends[(k + 1) % count]
            # head half of the starting cut dart
            uf.union(piece, ("h", smap.alpha[face[start]]))
            i = (start + 1) % len(face)
            while i != stop:
                uf.union(piece, ("e", edge_of[face[i]]))
                i = (i + 1) % len(face)
            # tail half of the closing cut dart
            uf.union(piece, ("h", face[stop]))

    chi = Counter()
    verts: dict = {}
    for v in range(smap.num_vertices):
        root = uf.find(("v", v))
        chi[root] += 1
        verts.setdefault(root, []).append(v)
    for d, _ in smap.edges:
        if edge_of[d] not in cut_edges:
            chi[uf.find(("e", edge_of[d]))] -= 1
    for f in range(smap.num_faces):
        if f not in cut_faces:
            chi[uf.find(("f", f))] += 1
    for piece, r in piece_arcs.items():
        chi[uf.find(piece)] += 1 - r
    return [(chi[root], tuple(verts.get(root, ()))) for root in chi]


def weakly_prime(smap: SurfaceMap) -> tuple[bool, Optional[TwoCutWitness]]:
    """Look for a disk whose boundary meets the diagram twice around a crossing.

    Returns ``(True, None)`` or ``(False, witness)``.
    """
    for x1, x2 in two_cut_candidates(smap):
        sides = _cut_sides(smap, x1, x2)
        if len(sides) < 2:
            continue
        for chi, verts in sides:
            if chi == 1 and verts:
                return False, TwoCutWitness(
                    darts=(x1, x2),
                    edges=(smap.edge_of[x1], smap.edge_of[x2]),
                    faces=(smap.face_of[x1], smap.face_of[smap.alpha[x1]]),
                    disk_vertices=verts,
                )
    return True, None


def gear_shift_edge_classes(smap: SurfaceMap, coloring: CheckerboardColoring) -> tuple[int, ...]:
    """Sizes of the edge classes after gluing two copies of the diagram.

    Each face of the upper copy is glued to its twin in the lower copy after
    turning it one edge: clockwise for white faces, counterclockwise for
    shaded ones.  Returned sorted.
    """
    if not coloring.colorable:
        raise ValueError("gear shift gluing needs a checkerboard colouring")
    colors = coloring.colors
    uf = _UnionFind()
    for e in range(smap.num_edges):
        uf.find(("+", e))
        uf.find(("-", e))
    for d in range(smap.num_darts):
        turned = smap.phi_inv[d] if colors[smap.face_of[d]] == WHITE else smap.phi[d]
        uf.union(("+", smap.edge_of[d]), ("-", smap.edge_of[turned]))
    sizes = Counter(uf.find(x) for x in list(uf.parent))
    return tuple(sorted(sizes.values()))


def verify(smap: SurfaceMap, n: Optional[int] = None, m: Optional[int] = None) -> DiagramReport:
    """Run every check and collect the verdicts.

    Without ``n`` and ``m`` the pattern is read off the face sizes; more than
    two distinct sizes fails the pattern check.
    """
    g = genus(smap)
    sizes = sorted(smap.face_sizes())
    if n is None or m is None:
        distinct = sorted(set(sizes))
        if len(distinct) == 1:
            n = m = distinct[0]
        elif len(distinct) == 2:
            n, m = distinct
    pattern = (n, m) if n is not None else None
    pattern_ok = pattern is not None and vertex_pattern(smap, n, m)
    coloring = checkerboard(smap)
    prime, witness = weakly_prime(smap)
    classes = gear_shift_edge_classes(smap, coloring) if coloring.colorable else ()
    return DiagramReport(
        genus=g,
        num_vertices=smap.num_vertices,
        num_edges=smap.num_edges,
        face_vector=tuple(sizes),
        pattern=pattern,
        vertex_pattern_ok=pattern_ok,
        colorable=coloring.colorable,
        cellular=smap.is_connected,
        weakly_prime=prime,
        witness=witness,
        components=components(smap),
        edge_class_sizes=classes,
    )
