"""Command line interface: ``rgcr <subcommand> ...``.

Exit codes: 0 success, 1 invalid input, 2 a diagram failed verification,
3 an enumeration exceeded its edge cap.
"""

from __future__ import annotations

import argparse
import hashlib
import math
import sys
from pathlib import Path

from . import geometry
from .diagrams import DiagramError, from_gluing, read_diagram, verify, write_diagram
from .diagrams.verify import DiagramReport
from .enumerate import SearchLimits, SearchTooLargeError, enumerate_diagrams
from .signatures import (
    InvalidGenusError,
    TilingSignature,
    count_bounds,
    enumerate_signatures,
    signature_from_pair,
    table_order,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_TOO_LARGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def num(x: float) -> str:
    return f"{x:.12g}"


def _angle(x: float) -> str:
    return f"{num(x)} rad {num(math.degrees(x))} deg"


# -- subcommands --------------------------------------------------------------

def cmd_signatures(args, out):
    sigs = enumerate_signatures(args.genus)
    if args.order == "table":
        sigs = table_order(sigs)
    print("Genus m n k_m k_n", file=out)
    for s in sigs:
        if s.bounded:
            print(f"{s.g} {s.m} {s.n} {s.k_m} {s.k_n}", file=out)
        else:
            print(f"{s.g} {s.m} {s.n} unbounded unbounded", file=out)
    print(f"count {len(sigs)}", file=out)
    return EXIT_OK


def cmd_bound(args, out):
    b = count_bounds(args.genus)
    print(f"genus {b.g}", file=out)
    print(f"pair_bound {b.pair_bound}", file=out)
    print(f"link_bound {b.pair_bound} * {84 * b.g - 83}!", file=out)
    print(f"link_bound_exact {b.link_bound}", file=out)
    return EXIT_OK


def cmd_geometry(args, out):
    n, m = min(args.n, args.m), max(args.n, args.m)
    alpha_n, alpha_m = geometry.interior_angles(n, m)
    curvature = (n - 2) * (m - 2)
    regime = "euclidean" if curvature == 4 else "hyperbolic"
    print(f"tiling [{n},{m},{n},{m}] {regime}", file=out)
    for label, x, alpha in (("n", n, alpha_n), ("m", m, alpha_m)):
        poly = geometry.polygon_geometry(x, alpha, args.tolerance)
        w = geometry.wedge_angles(x, alpha)
        print(f"{label} {x}", file=out)
        print(f"  interior_angle {_angle(alpha)}", file=out)
        print(f"  edge_length {num(poly.edge_length)}{' (flat, scale free)' if poly.flat else ''}", file=out)
        print(f"  area {num(poly.area)}", file=out)
        print(
            "  wedge " + " ".join(f"{k}={num(getattr(w, k))}" for k in "ABCDEF"),
            file=out,
        )
        try:
            cr = num(geometry.regular_cross_ratio(x))
        except geometry.GeometryError:
            cr = "undefined (singular denominator)"
        print(f"  cross_ratio {cr}", file=out)
    dihedral = geometry.dihedral_check(alpha_n, alpha_m)
    verdict = "ok" if abs(dihedral - math.pi / 2) <= args.tolerance else "FAIL"
    print(f"dihedral {_angle(dihedral)} {verdict}", file=out)
    return EXIT_OK


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def print_report(report: DiagramReport, out) -> None:
    print(f"genus {report.genus}", file=out)
    print(f"vertices {report.num_vertices}", file=out)
    print(f"edges {report.num_edges}", file=out)
    print(f"faces {len(report.face_vector)}", file=out)
    print("face_vector " + " ".join(map(str, report.face_vector)), file=out)
    if report.pattern is None:
        print("vertex_pattern none (more than two face sizes) no", file=out)
    else:
        n, m = report.pattern
        print(f"vertex_pattern [{n},{m},{n},{m}] {_yes(report.vertex_pattern_ok)}", file=out)
    print(f"checkerboard {_yes(report.colorable)}", file=out)
    print(f"cellular {_yes(report.cellular)}", file=out)
    print(f"weakly_prime {_yes(report.weakly_prime)}", file=out)
    if report.witness is not None:
        w = report.witness
        print(
            f"  witness edges {w.edges[0]} {w.edges[1]} faces {w.faces[0]} {w.faces[1]}"
            f" disk_vertices {' '.join(map(str, w.disk_vertices))}",
            file=out,
        )
    print(f"components {report.components}", file=out)
    classes = " ".join(map(str, report.edge_class_sizes)) or "none"
    print(f"edge_classes {classes}", file=out)
    print(f"verdict {'pass' if report.ok else 'fail'}", file=out)


def cmd_verify(args, out):
    spec = read_diagram(args.file)
    smap = from_gluing(spec)
    report = verify(smap, args.n, args.m)
    print_report(report, out)
    return EXIT_OK if report.ok else EXIT_VERIFY


def _signature(args) -> TilingSignature:
    n, m = min(args.n, args.m), max(args.n, args.m)
    if args.genus == 1:
        if args.k_n is None or args.k_m is None:
            raise UsageError("genus 1 needs explicit --k-n and --k-m")
        return TilingSignature(1, n, m, args.k_n, args.k_m)
    sig = signature_from_pair(args.genus, n, m)
    if sig is None:
        raise UsageError(f"no genus-{args.genus} signature with n={n}, m={m}")
    if args.k_n is not None and args.k_n != sig.k_n or args.k_m is not None and args.k_m != sig.k_m:
        raise UsageError(f"counts are fixed at k_n={sig.k_n}, k_m={sig.k_m} for this genus")
    return sig


def _short(key: bytes) -> str:
    return hashlib.sha256(key).hexdigest()[:12]


def cmd_enumerate(args, out, knots_only=False):
    sig = _signature(args)
    result = enumerate_diagrams(
        sig,
        SearchLimits(max_edges=args.max_edges),
        mirror_quotient=not args.no_mirror_quotient,
        workers=args.workers,
    )
    chosen = result.knots if knots_only else list(result.diagrams)
    print(f"signature g={sig.g} n={sig.n} m={sig.m} k_n={sig.k_n} k_m={sig.k_m}", file=out)
    print(f"edges {sig.num_edges}", file=out)
    print(f"mirror_quotient {_yes(result.mirror_quotient)}", file=out)
    print(f"gluings_explored {result.gluings_explored}", file=out)
    print(f"diagrams {len(result.diagrams)}", file=out)
    print(f"knots {result.knot_count}", file=out)
    print("index components edge_classes canonical", file=out)
    outdir = Path(args.out) if args.out else None
    if outdir is not None:
        outdir.mkdir(parents=True, exist_ok=True)
    for i, d in enumerate(chosen):
        classes = ",".join(map(str, sorted(set(d.report.edge_class_sizes))))
        print(f"{i} {d.components} {classes} {_short(d.canonical)}", file=out)
        if outdir is not None:
            stem = "knot" if knots_only else "diagram"
            name = f"g{sig.g}_n{sig.n}_m{sig.m}_{stem}_{i:03d}.diagram"
            write_diagram(
                d.gluing(),
                outdir / name,
                comments=[
                    f"genus {sig.g}, [{sig.n},{sig.m},{sig.n},{sig.m}], components {d.components}",
                    f"canonical {_short(d.canonical)}",
                ],
            )
    return EXIT_OK


# -- wiring -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rgcr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("signatures", help="tilings and tile counts for a genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--order", choices=("table", "sorted"), default="table",
                   help="table: mixed pairs by (m, n), then n = m by descending m; sorted: by (m, n)")

    p = sub.add_parser("bound", help="exact upper bounds on tilings and links")
    p.add_argument("--genus", type=int, required=True)

    p = sub.add_parser("geometry", help="angles, lengths and areas of an [n,m,n,m] tiling")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tolerance", type=float, default=geometry.DEFAULT_TOLERANCE)

    p = sub.add_parser("verify", help="check a diagram file")
    p.add_argument("file")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)

    for name, help_text in (("enumerate", "all diagrams of a signature"),
                            ("knot-search", "one-component diagrams of a signature")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--genus", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--k-n", type=int, dest="k_n")
        p.add_argument("--k-m", type=int, dest="k_m")
        p.add_argument("--out", help="directory for diagram files")
        p.add_argument("--max-edges", type=int, default=SearchLimits().max_edges)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--no-mirror-quotient", action="store_true",
                       help="count a diagram and its mirror image separately")
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    handlers = {
        "signatures": cmd_signatures,
        "bound": cmd_bound,
        "geometry": cmd_geometry,
        "verify": cmd_verify,
        "enumerate": cmd_enumerate,
        "knot-search": lambda a, o: cmd_enumerate(a, o, knots_only=True),
    }
    try:
        return handlers[args.command](args, out)
    except SearchTooLargeError as exc:
        print(f"rgcr: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (DiagramError, OSError) as exc:
        print(f"rgcr: {exc}", file=sys.stderr)
        code = EXIT_VERIFY if args.command == "verify" and _is_verification_failure(exc) else EXIT_INPUT
        return code
    except (UsageError, InvalidGenusError, geometry.GeometryError, ValueError) as exc:
        print(f"rgcr: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _is_verification_failure(exc: Exception) -> bool:
    from .diagrams import ConnectivityError, OrientabilityError, ValenceError

    return isinstance(exc, (ConnectivityError, OrientabilityError, ValenceError))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
