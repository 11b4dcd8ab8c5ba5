import json
import random
import subprocess
import sys

import pytest

from estar import gallery
from estar.cli import main
from estar.graph import build_graph, circulant, format_edge_list, gstar


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


def test_gstar_is_bad(write, capsys):
    g, _ = gstar()
    path = write("gstar.txt", format_edge_list(g, label_base=1))
    assert main(["check", path, "--property", "bad", "--label-base", "1"]) == 0
    out = capsys.readouterr()
    cert = json.loads(out.out)
    assert cert["type"] == "badness"
    assert len(cert["witnesses"]) == 27
    assert {"pair": [[2, 3], [1, 9]], "chord": [1, 6], "class": "CrossingOdd"} in cert["witnesses"]


def test_c9_is_not_bad(write, capsys):
    path = write("c9.txt", format_edge_list(circulant(9, (1,))))
    assert main(["check", path, "--property", "bad"]) == 1
    err = capsys.readouterr().err
    assert "no witness chord" in err
    assert "the pair [0, 1], [2, 3]" in err


def test_large_graph_is_undecided(write, capsys):
    rng = random.Random(40)
    pairs = [(u, v) for u in range(40) for v in range(u + 1, 40) if rng.random() < 0.1]
    path = write("big.txt", format_edge_list(build_graph(40, pairs)))
    assert main(["check", path, "--property", "equistable"]) == 2
    assert "40 vertices exceed the cap 32" in capsys.readouterr().err


def test_check_then_verify(write, tmp_path, capsys):
    g, _ = gstar()
    path = write("gstar.txt", format_edge_list(g, label_base=1))
    cert = tmp_path / "strong.json"
    assert main(["check", path, "--property", "strongly-equistarable", "--label-base", "1", "--out", str(cert)]) == 1
    assert "edge set [[1, 9], [3, 7]] is forced to 1/2" in capsys.readouterr().err
    assert main(["verify", str(cert)]) == 0
    assert capsys.readouterr().out.startswith("PASS: ")

    doc = json.loads(cert.read_text())
    doc["forced_subset"]["value"] = "1/3"
    cert.write_text(json.dumps(doc))
    assert main(["verify", str(cert)]) == 1
    assert "FAIL forced value: claimed 1/3, recomputed 1/2" in capsys.readouterr().out


def test_gallery_list_and_dot(tmp_path, capsys):
    assert main(["gallery", "--list"]) == 0
    assert capsys.readouterr().out.split() == list(gallery.NAMES)

    dot = tmp_path / "g.dot"
    out = tmp_path / "g.json"
    assert main(["gallery", "gstar", "--dot", str(dot), "--out", str(out)]) == 0
    assert dot.read_text().startswith("graph gstar {")
    assert "  1 -- 9;" in dot.read_text()
    bundle = json.loads(out.read_text())
    assert bundle["fifth_chord_search"]["survivors"] == [[5, 8]]
    assert main(["verify", str(out)]) == 0


def test_unknown_gallery_name(capsys):
    assert main(["gallery", "petersen"]) == 2
    assert "unknown gallery entry" in capsys.readouterr().err


@pytest.mark.parametrize("text", ["", "3 2\n0 1\n", "2 1\n0 5\n", "x y\n"])
def test_malformed_edge_lists(write, text):
    assert main(["check", write("bad.txt", text), "--property", "bad"]) == 2


def test_malformed_certificates(write):
    assert main(["verify", write("a.json", "{not json")]) == 2
    assert main(["verify", write("b.json", "[1, 2]")]) == 2
    assert main(["verify", write("c.json", '{"type": "badness"}')]) == 2
    assert main(["verify", write("d.json", '{"type": "nonsense", "graph": {"n": 1, "edges": []}}')]) == 2


def test_subset_cap_precedence(write, monkeypatch, capsys):
    g, _ = gstar()
    path = write("gstar.txt", format_edge_list(g))
    args = ["check", path, "--property", "strongly-equistarable"]
    monkeypatch.setenv("ESTAR_MAX_BITS", "10")
    assert main(args) == 2
    assert "exceeds the cap 2^10" in capsys.readouterr().err
    assert main([*args, "--max-subset-bits", "14"]) == 1
    monkeypatch.setenv("ESTAR_MAX_BITS", "lots")
    assert main(args) == 2
    monkeypatch.delenv("ESTAR_MAX_BITS")
    assert main(args) == 1


def test_module_entry_point(write):
    path = write("c4.txt", format_edge_list(circulant(4, (1,))))
    proc = subprocess.run([sys.executable, "-m", "estar", "check", path, "--property", "equistable"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["type"] == "equistable"
    assert proc.stderr.startswith("equistable:")
