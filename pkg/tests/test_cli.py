import json
import subprocess
import sys

import pytest

from ihtools.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def emitted(tmp_path, capsys):
    def emit(name):
        path = tmp_path / f"{name}.json"
        code, _, _ = run(capsys, "corpus", name, "--emit", str(path))
        assert code == 0
        return str(path)
    return emit


def test_im_table(capsys, emitted):
    code, out, _ = run(capsys, "im", emitted("pinched_torus_icosa"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split()[:3] == ["degree", "H", "IM"]
    assert [ln.split()[2] for ln in lines[1:]] == ["1", "0", "1"]


def test_smooth_suite(capsys, emitted):
    code, out, _ = run(capsys, "check", emitted("grid_torus"), "--suite", "smooth")
    assert code == 0
    assert "IM=H in all degrees: PASS" in out


def test_mv(capsys, emitted):
    code, out, _ = run(capsys, "mv", emitted("glued_spheres"), "--a", "A", "--b", "B", "--degree", "1")
    assert code == 0
    assert "containment PASS; exactness defect at IM_0(A∩B): 1" in out


def test_ker_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "ker", "pinched_torus_icosa")
    assert code == 0
    data = json.loads(out)
    assert [data["degrees"][str(d)]["KER"] for d in range(3)] == [0, 1, 0]
    assert data["failures"] == []


def test_ih_perversities(capsys):
    _, out, _ = run(capsys, "--format", "json", "ih", "susp_torus")
    assert json.loads(out)["ranks"] == {"0": 1, "1": 2, "2": 0, "3": 1}
    _, out, _ = run(capsys, "--format", "json", "ih", "susp_torus", "--perversity", "custom:0,1")
    assert json.loads(out)["ranks"] == {"0": 1, "1": 0, "2": 2, "3": 1}


@pytest.mark.parametrize("command", [
    ["homology"], ["im"], ["ker"], ["components"], ["strata"], ["ih", "--perversity", "upper-middle"],
    ["check", "--suite", "all"],
])
@pytest.mark.parametrize("name", ["pinched_torus_icosa", "glued_spheres"])
def test_round_trip_matches_builtin(capsys, emitted, command, name):
    path = emitted(name)
    c1, out1, _ = run(capsys, command[0], name, *command[1:])
    c2, out2, _ = run(capsys, command[0], path, *command[1:])
    assert c1 == c2 == 0
    assert out1 == out2


def test_map_round_trip_and_xfail(capsys, emitted):
    path = emitted("torus_collapse_map")
    code, out, _ = run(capsys, "map", path, "--degree", "1")
    assert code == 0
    assert "XFAIL" in out and "non-algebraic-model" in out
    code, out, _ = run(capsys, "map", emitted("normalization_map"))
    assert code == 0 and "FAIL" not in out.replace("XFAIL", "")


def test_failing_check_exit_code(capsys, tmp_path, emitted):
    doc = json.loads(open(emitted("torus_collapse_map")).read())
    doc["label"] = "algebraic-model"
    path = tmp_path / "lie.json"
    path.write_text(json.dumps(doc))
    code, out, err = run(capsys, "map", str(path), "--degree", "1")
    assert code == 1
    failures = json.loads(err.strip().splitlines()[-1])["failures"]
    assert "degree 1: push_contained" in failures


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "vertices": ["a"],\n "maximal_simplices": [["a", "b"]]')
    code, _, err = run(capsys, "homology", str(bad))
    assert code == 2 and json.loads(err)["error"] == "json-syntax"
    bad.write_text('{"name": "x", "vertices": ["a"], "maximal_simplices": [["a", "b"]]}')
    code, _, err = run(capsys, "homology", str(bad))
    assert code == 2 and json.loads(err)["error"] == "vertices-declared"
    code, _, err = run(capsys, "corpus", "nothing_here", "--emit", str(tmp_path / "x.json"))
    assert code == 2 and json.loads(err)["error"] == "corpus-name"
    code, _, err = run(capsys, "mv", "glued_spheres", "--a", "A", "--b", "Q", "--degree", "1")
    assert code == 2


def test_subdivide_flag_preserves_ranks(capsys):
    _, plain, _ = run(capsys, "im", "pinched_torus_icosa")
    _, sub, _ = run(capsys, "--subdivide", "1", "im", "pinched_torus_icosa")
    assert plain == sub
    _, out, _ = run(capsys, "homology", "circle", "--subdivide", "2", "--seed", "7")
    assert out.splitlines()[1:] == ["0       1", "1       1"]


def test_corpus_listing(capsys):
    code, out, _ = run(capsys, "corpus")
    assert code == 0 and "mv_cover_glued_spheres" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ihtools", "homology", "sphere2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[-1].split() == ["2", "1"]
