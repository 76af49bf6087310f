import json
import os

import pytest

from regcover.cli import main
from regcover.fixtures import complete, cube, cycle, theta
from regcover.iso import are_isomorphic
from regcover.graph import HALVABLE
from regcover.textfmt import parse_file, write_file


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in [("cube", cube()), ("k4", complete(4)), ("c6", cycle(6)),
                    ("c4", cycle(4)), ("c3", cycle(3)),
                    ("theta", theta(2, 2, 2, edge_type=HALVABLE))]:
        p = tmp_path / f"{name}.g"
        write_file(g, str(p))
        paths[name] = str(p)
    return paths


def test_validate_ok(files, capsys):
    assert main(["validate", files["cube"]]) == 0
    assert "ok" in capsys.readouterr().out


def test_validate_malformed_file(tmp_path, capsys):
    p = tmp_path / "bad.g"
    p.write_text("vertex a\nvertex a\n")
    assert main(["validate", str(p)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_file_is_input_error(capsys):
    assert main(["validate", "/nonexistent/file.g"]) == 2


def test_iso_exit_codes(files, capsys):
    assert main(["iso", files["cube"], files["cube"], "--witness"]) == 0
    out = capsys.readouterr().out
    assert "isomorphic" in out and "->" in out
    assert main(["iso", files["cube"], files["k4"]]) == 1


def test_aut_output(files, capsys):
    assert main(["aut", files["k4"]]) == 0
    out = capsys.readouterr().out
    assert "order: 24" in out


def test_aut_semiregular_listing(files, capsys):
    assert main(["aut", "--semiregular", "2", files["c6"]]) == 0
    out = capsys.readouterr().out
    assert "order 2: 1" in out


def test_cover_yes_no(files, capsys):
    assert main(["cover", files["cube"], files["k4"]]) == 0
    assert "yes" in capsys.readouterr().out
    assert main(["cover", files["c6"], files["c4"]]) == 1
    assert main(["cover", files["k4"], files["cube"]]) == 1


def test_blocks_and_atoms(files, capsys):
    assert main(["blocks", files["c6"]]) == 0
    assert "center: block" in capsys.readouterr().out
    assert main(["atoms", files["theta"]]) == 0
    out = capsys.readouterr().out
    assert out.count("proper") == 3


def test_reduce_writes_series_and_sidecar(files, tmp_path, capsys):
    assert main(["reduce", files["theta"]]) == 0
    base = files["theta"][:-2]
    g1 = parse_file(base + ".g1.g")
    assert g1.n_vertices == 2 and g1.n_edges == 3
    with open(base + ".reduction.json", encoding="utf-8") as fh:
        sidecar = json.load(fh)
    assert sidecar["version"] == 1
    assert sidecar["primitive"] == "k2"
    assert len(sidecar["levels"]) == 2
    cls = sidecar["levels"][0]["classes"][0]
    assert cls["kind"] == "proper" and cls["symmetry"] == "halvable"
    assert "vertex" in cls["graph"]


def test_quotients_and_expand_roundtrip(files, capsys):
    assert main(["quotients", files["theta"], "--via", "reduction"]) == 0
    base = files["theta"][:-2]
    names = sorted(n for n in os.listdir(os.path.dirname(base))
                   if ".q" in n and n.endswith(".g"))
    assert len(names) == 3
    with open(base + ".quotients.json", encoding="utf-8") as fh:
        index = json.load(fh)
    assert index["via"] == "reduction"
    assert len(index["quotients"]) == 3
    assert main(["reduce", files["theta"]]) == 0
    assert main(["quotients", base + ".g2.g"]) == 0
    prim_quots = sorted(n for n in os.listdir(os.path.dirname(base))
                        if ".g2.q" in n and n.endswith(".g"))
    assert len(prim_quots) == 2
    # replay the stored sidecar against each primitive quotient; together
    # they reproduce the full quotient set of the original graph
    expanded = []
    for name in prim_quots:
        target = os.path.join(os.path.dirname(base), name)
        assert main(["expand", base + ".reduction.json", target]) == 0
        for out in sorted(os.listdir(os.path.dirname(base))):
            if ".x" in out and out.endswith(".g") and name[:-2] in out:
                expanded.append(parse_file(
                    os.path.join(os.path.dirname(base), out)))
    quots = [parse_file(os.path.join(os.path.dirname(base), n))
             for n in names]
    matched = 0
    for e in expanded:
        if any(are_isomorphic(e, q) is not None for q in quots):
            matched += 1
    assert matched == len(expanded) == 3


def test_dot_outputs(files, capsys, tmp_path):
    assert main(["dot", files["cube"]]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph")
    k2 = tmp_path / "k2.g"
    k2.write_text("vertex a\nvertex b\nedge e a b\n")
    assert main(["dot", str(k2)]) == 0
    out = capsys.readouterr().out
    assert '"a" -> "b"' in out
    hf = tmp_path / "hf.g"
    hf.write_text("vertex a\nhalfedge h a\n")
    assert main(["dot", str(hf)]) == 0
    out = capsys.readouterr().out
    assert "shape=point" in out and "style=dashed" in out
    assert main(["blocks", files["c6"], "--dot"]) == 0
    assert capsys.readouterr().out.startswith("graph blocktree")
    assert main(["reduce", files["theta"], "--dot"]) == 0
    assert capsys.readouterr().out.startswith("graph reduction")


def test_halvable_input_flag(tmp_path, capsys):
    p = tmp_path / "theta.g"
    write_file(theta(2, 2, 2), str(p))
    assert main(["quotients", str(p)]) == 0
    assert "1 quotients" in capsys.readouterr().out
    assert main(["--halvable-input", "quotients", str(p)]) == 0
    assert "3 quotients" in capsys.readouterr().out


def test_fixtures_run(capsys):
    assert main(["--seed", "3", "fixtures", "run"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "PASS" in out
    assert "random-instances" in out


def test_fixtures_write_env_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("REGCOVER_FIXTURE_DIR", str(tmp_path / "fx"))
    assert main(["fixtures", "write"]) == 0
    files = os.listdir(str(tmp_path / "fx"))
    assert "cube.g" in files and len(files) >= 30


def test_deterministic_outputs(files, tmp_path):
    g = parse_file(files["theta"])
    out1 = tmp_path / "a.g"
    out2 = tmp_path / "b.g"
    write_file(g, str(out1))
    write_file(parse_file(str(out1)), str(out2))
    assert out1.read_text() == out2.read_text()
