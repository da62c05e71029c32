"""Edge pairings of labelled polygons, and their text file format.

File layout (UTF-8, ``#`` starts a comment, blank lines ignored)::

    polygons 2
    A 8
    B 8
    gluing
    A.0 B.3 +
    A.1 B.2 +
    ...

Edges are numbered from 0 counterclockwise.  Side ``i`` runs from corner
``i`` to corner ``i + 1``.  A ``+`` pairing glues the two sides with
opposite directions, which is the orientation-compatible identification
when both polygons keep their given orientation; ``-`` glues them
head-to-head and tail-to-tail.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

__all__ = [
    "DiagramError",
    "DiagramFormatError",
    "IncompleteGluingError",
    "GluingSpec",
    "parse_diagram",
    "format_diagram",
    "read_diagram",
    "write_diagram",
]

EdgeRef = tuple[str, int]
Pairing = tuple[EdgeRef, EdgeRef, bool]


class DiagramError(ValueError):
    """Base class for malformed or unrealizable diagrams."""


class DiagramFormatError(DiagramError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class IncompleteGluingError(DiagramError):
    """Some polygon side is not paired with anything."""


@dataclass(frozen=True)
class GluingSpec:
    polygons: tuple[tuple[str, int], ...]
    pairings: tuple[Pairing, ...]

    def __post_init__(self):
        object.__setattr__(self, "polygons", tuple((str(p), int(s)) for p, s in self.polygons))
        object.__setattr__(
            self,
            "pairings",
            tuple(((str(a[0]), int(a[1])), (str(b[0]), int(b[1])), bool(f)) for a, b, f in self.pairings),
        )
        self.validate()

    @property
    def sides(self) -> dict[str, int]:
        return dict(self.polygons)

    def validate(self) -> None:
        sides = {}
        for pid, count in self.polygons:
            if pid in sides:
                raise DiagramError(f"duplicate polygon id {pid!r}")
            if count < 1:
                raise DiagramError(f"polygon {pid!r} has {count} sides")
            sides[pid] = count
        seen = set()
        for a, b, _ in self.pairings:
            for pid, edge in (a, b):
                if pid not in sides:
                    raise DiagramError(f"unknown polygon {pid!r}")
                if not 0 <= edge < sides[pid]:
                    raise DiagramError(f"edge {pid}.{edge} out of range")
                if (pid, edge) in seen:
                    raise DiagramError(f"edge {pid}.{edge} is paired twice")
                seen.add((pid, edge))
        missing = [f"{pid}.{i}" for pid, count in self.polygons for i in range(count) if (pid, i) not in seen]
        if missing:
            raise IncompleteGluingError(f"unmatched edges: {', '.join(missing)}")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_ref(token: str, lineno: int) -> EdgeRef:
    pid, dot, edge = token.rpartition(".")
    if not dot or not pid:
        raise DiagramFormatError(f"bad edge reference {token!r}", lineno)
    try:
        return pid, int(edge)
    except ValueError:
        raise DiagramFormatError(f"bad edge index in {token!r}", lineno) from None


def parse_diagram(text: str) -> GluingSpec:
    """Parse the text format; errors carry the offending line number."""
    lines = [(i, _strip(raw)) for i, raw in enumerate(text.splitlines(), start=1)]
    lines = [(i, s) for i, s in lines if s]
    if not lines:
        raise DiagramFormatError("empty diagram file")

    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "polygons":
        raise DiagramFormatError("expected 'polygons <count>'", lineno)
    try:
        count = int(parts[1])
    except ValueError:
        raise DiagramFormatError(f"bad polygon count {parts[1]!r}", lineno) from None

    polygons = []
    sides = {}
    pos = 1
    while pos < len(lines) and lines[pos][1] != "gluing":
        lineno, body = lines[pos]
        parts = body.split()
        if len(parts) != 2:
            raise DiagramFormatError("expected '<id> <sides>'", lineno)
        pid = parts[0]
        if pid in sides:
            raise DiagramFormatError(f"duplicate polygon id {pid!r}", lineno)
        try:
            n = int(parts[1])
        except ValueError:
            raise DiagramFormatError(f"bad side count {parts[1]!r}", lineno) from None
        if n < 1:
            raise DiagramFormatError(f"polygon {pid!r} needs at least one side", lineno)
        sides[pid] = n
        polygons.append((pid, n))
        pos += 1
    if len(polygons) != count:
        raise DiagramFormatError(f"declared {count} polygons, found {len(polygons)}", lines[0][0])
    if pos == len(lines):
        raise DiagramFormatError("missing 'gluing' section", lines[-1][0])

    pairings = []
    first_seen: dict[EdgeRef, int] = {}
    for lineno, body in lines[pos + 1:]:
        parts = body.split()
        if len(parts) != 3 or parts[2] not in ("+", "-"):
            raise DiagramFormatError("expected '<id>.<edge> <id>.<edge> <+|->'", lineno)
        refs = []
        for token in parts[:2]:
            ref = _parse_ref(token, lineno)
            if ref[0] not in sides:
                raise DiagramFormatError(f"unknown polygon {ref[0]!r}", lineno)
            if not 0 <= ref[1] < sides[ref[0]]:
                raise DiagramFormatError(f"edge {token} out of range", lineno)
            if ref in first_seen:
                raise DiagramFormatError(
                    f"edge {token} already used on line {first_seen[ref]}", lineno
                )
            first_seen[ref] = lineno
            refs.append(ref)
        pairings.append((refs[0], refs[1], parts[2] == "+"))

    missing = [f"{pid}.{i}" for pid, n in polygons for i in range(n) if (pid, i) not in first_seen]
    if missing:
        raise DiagramFormatError(f"unmatched edges: {', '.join(missing)}", lines[-1][0])
    return GluingSpec(tuple(polygons), tuple(pairings))


def format_diagram(spec: GluingSpec, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"polygons {len(spec.polygons)}")
    out.extend(f"{pid} {n}" for pid, n in spec.polygons)
    out.append("gluing")
    for (pa, ea), (pb, eb), flag in spec.pairings:
        out.append(f"{pa}.{ea} {pb}.{eb} {'+' if flag else '-'}")
    return "\n".join(out) + "\n"


def read_diagram(path: Union[str, Path]) -> GluingSpec:
    return parse_diagram(Path(path).read_text(encoding="utf-8"))


def write_diagram(spec: GluingSpec, path: Union[str, Path], comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_diagram(spec, comments), encoding="utf-8")
