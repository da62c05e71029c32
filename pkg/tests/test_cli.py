import io
import subprocess
import sys
from pathlib import Path

import pytest

from rgcr import data
from rgcr.cli import EXIT_INPUT, EXIT_OK, EXIT_TOO_LARGE, EXIT_VERIFY, run
from rgcr.diagrams import from_gluing, read_diagram, verify

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def fields(text):
    """First whitespace token of each line mapped to the rest."""
    return dict(line.split(" ", 1) for line in text.splitlines() if " " in line and not line.startswith(" "))


@pytest.mark.parametrize("g", [2, 3, 4])
def test_signatures_golden(g):
    code, text = call("signatures", "--genus", str(g))
    assert code == EXIT_OK
    assert text == (GOLDEN / f"signatures_g{g}.txt").read_text()


def test_signatures_first_row():
    lines = call("signatures", "--genus", "2")[1].splitlines()
    assert lines[1] == "2 5 4 8 10"
    assert lines[-1] == "count 14"


def test_signatures_sorted_order():
    lines = call("signatures", "--genus", "2", "--order", "sorted")[1].splitlines()
    assert lines[-2] == "2 18 3 1 6"


def test_torus_signatures():
    code, text = call("signatures", "--genus", "1")
    assert code == EXIT_OK
    assert text.splitlines()[1:] == ["1 6 3 unbounded unbounded", "1 4 4 unbounded unbounded", "count 2"]


def test_bad_genus(capsys):
    assert call("signatures", "--genus", "0")[0] == EXIT_INPUT
    assert "genus" in capsys.readouterr().err


def test_bound():
    code, text = call("bound", "--genus", "2")
    f = fields(text)
    assert code == EXIT_OK
    assert f["pair_bound"] == "670/9"
    assert f["link_bound"] == "670/9 * 85!"
    from math import factorial

    assert int(f["link_bound_exact"]) == 670 * factorial(85) // 9


def test_geometry_octagons():
    code, text = call("geometry", "--n", "8", "--m", "8")
    assert code == EXIT_OK
    assert text.count("interior_angle 1.57079632679 rad 90 deg") == 2
    assert "dihedral 1.57079632679 rad 90 deg ok" in text
    assert "cross_ratio 1.41421356237" in text


def test_geometry_triangle_cross_ratio_reported():
    code, text = call("geometry", "--n", "6", "--m", "3")
    assert code == EXIT_OK
    assert "tiling [3,6,3,6] euclidean" in text
    assert "cross_ratio undefined" in text
    assert "edge_length 0 (flat, scale free)" in text


def test_geometry_spherical(capsys):
    assert call("geometry", "--n", "3", "--m", "4")[0] == EXIT_INPUT
    assert "spherical" in capsys.readouterr().err


def test_verify_octagon_knot():
    code, text = call("verify", str(data.path("octagon_knot_g2")))
    f = fields(text)
    assert code == EXIT_OK
    assert f["genus"] == "2"
    assert f["components"] == "1"
    assert f["weakly_prime"] == "yes"
    assert f["vertex_pattern"] == "[8,8,8,8] yes"
    assert f["edge_classes"] == "4 4 4 4"
    assert f["verdict"] == "pass"


def test_verify_failure_exit_code(tmp_path):
    path = tmp_path / "kink.diagram"
    path.write_text("polygons 2\nP0 1\nP1 7\ngluing\nP0.0 P1.0 +\nP1.1 P1.3 +\nP1.2 P1.5 +\nP1.4 P1.6 +\n")
    code, text = call("verify", str(path))
    assert code == EXIT_VERIFY
    assert "weakly_prime no" in text
    assert "  witness edges" in text
    assert "verdict fail" in text


def test_verify_wrong_pattern_fails():
    assert call("verify", str(data.path("octagon_knot_g2")), "--n", "4", "--m", "4")[0] == EXIT_VERIFY


def test_verify_disconnected(tmp_path, capsys):
    path = tmp_path / "two.diagram"
    path.write_text("polygons 2\nA 4\nB 4\ngluing\nA.0 A.2 +\nA.1 A.3 +\nB.0 B.2 +\nB.1 B.3 +\n")
    assert call("verify", str(path))[0] == EXIT_VERIFY
    assert "connected" in capsys.readouterr().err


def test_verify_valence_failure(tmp_path):
    path = tmp_path / "octagon.diagram"
    path.write_text("polygons 1\nA 8\ngluing\nA.0 A.4 +\nA.1 A.5 +\nA.2 A.6 +\nA.3 A.7 +\n")
    assert call("verify", str(path))[0] == EXIT_VERIFY


def test_verify_bad_file(tmp_path, capsys):
    path = tmp_path / "bad.diagram"
    path.write_text("polygons 1\nA 4\ngluing\nA.0 A.9 +\n")
    assert call("verify", str(path))[0] == EXIT_INPUT
    assert "line 4:" in capsys.readouterr().err
    assert call("verify", str(tmp_path / "missing.diagram"))[0] == EXIT_INPUT


def test_enumerate_writes_files(tmp_path):
    code, text = call("enumerate", "--genus", "2", "--n", "8", "--m", "8", "--out", str(tmp_path))
    f = fields(text)
    assert code == EXIT_OK
    assert f["diagrams"] == "4" and f["knots"] == "1"
    files = sorted(tmp_path.glob("*.diagram"))
    assert len(files) == 4
    assert sorted(verify(from_gluing(read_diagram(p))).components for p in files) == [1, 2, 3, 4]


def test_knot_search(tmp_path):
    code, text = call("knot-search", "--genus", "2", "--n", "8", "--m", "8", "--out", str(tmp_path))
    assert code == EXIT_OK
    rows = text.split("index components edge_classes canonical\n")[1].splitlines()
    assert len(rows) == 1 and rows[0].split()[1] == "1"
    assert len(list(tmp_path.glob("*knot*.diagram"))) == 1


def test_enumerate_torus_needs_counts(capsys):
    assert call("enumerate", "--genus", "1", "--n", "4", "--m", "4")[0] == EXIT_INPUT
    assert "--k-n" in capsys.readouterr().err
    code, text = call("enumerate", "--genus", "1", "--n", "4", "--m", "4", "--k-n", "1", "--k-m", "1")
    assert code == EXIT_OK and "diagrams 1" in text


def test_enumerate_invalid_pair():
    assert call("enumerate", "--genus", "2", "--n", "4", "--m", "7")[0] == EXIT_INPUT
    assert call("enumerate", "--genus", "2", "--n", "8", "--m", "8", "--k-n", "2")[0] == EXIT_INPUT


def test_search_too_large(capsys):
    code, _ = call("enumerate", "--genus", "2", "--n", "8", "--m", "8", "--max-edges", "4")
    assert code == EXIT_TOO_LARGE
    assert "8 edges exceeds the cap of 4" in capsys.readouterr().err


def test_mirror_flag():
    f = fields(call("enumerate", "--genus", "2", "--n", "5", "--m", "10", "--no-mirror-quotient")[1])
    assert f["mirror_quotient"] == "no" and f["diagrams"] == "7"


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as info:
        run(["signatures"])
    assert info.value.code == EXIT_INPUT
    with pytest.raises(SystemExit) as info:
        run(["nonsense"])
    assert info.value.code == EXIT_INPUT


def test_reruns_are_byte_identical():
    argv = ("enumerate", "--genus", "2", "--n", "5", "--m", "10")
    assert call(*argv) == call(*argv)
    assert call("geometry", "--n", "4", "--m", "5") == call("geometry", "--n", "4", "--m", "5")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rgcr", "signatures", "--genus", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "signatures_g2.txt").read_text()
