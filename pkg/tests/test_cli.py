import json
import subprocess
import sys

import pytest

from lr3sym.cli import main
from lr3sym.lifting import known_symmetries


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    assert run(capsys, "eval", "2", "1", "2", "1", "3", "2", "1")[:2] == (0, "2\n")
    assert run(capsys, "eval", *"0 0 0 0 0 0 0".split())[:2] == (0, "1\n")
    code, out, err = run(capsys, "eval", *"2 1 2 1 3 2 0".split())
    assert (code, out) == (0, "0\n")
    assert "weight mismatch" in err


def test_eval_non_partition_prints_zero(capsys):
    assert run(capsys, "eval", *"1 2 0 0 1 2 0".split())[:2] == (0, "0\n")


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", *"2 1 2 1 3 2 1".split(), "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == "lr3/1"
    assert doc["value"] == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["eval", "1", "2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["eval", *"a 1 1 1 1 1 1".split()])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["cross-validate", "--bound", "-1"])
    assert info.value.code == 2


def test_oracle(capsys):
    assert run(capsys, "oracle", "2,1", "2,1", "3,2,1")[:2] == (0, "2\n")
    assert run(capsys, "oracle", "", "", "")[:2] == (0, "1\n")
    assert run(capsys, "oracle", "1,2", "1", "2,2")[0] == 2


def test_chamber(capsys):
    code, out, _ = run(capsys, "chamber", *"2 1 2 1 3 2".split())
    assert code == 0
    assert out.splitlines()[0].split() == [f"k{i}" for i in range(1, 19)]
    code, out, _ = run(capsys, "chamber", *"-1 0 0 0 0 0".split(), "--format", "json")
    assert json.loads(out)["chambers"] == []


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", *"0 0 0 0 0 0".split())
    assert code == 0
    assert out.startswith("1 point(s)")
    code, out, _ = run(capsys, "orbit", *"2 1 2 1 3 2".split(), "--format", "json")
    assert set(json.loads(out)["values"]) == {2}


def test_symmetries_text(capsys):
    code, out, _ = run(capsys, "symmetries")
    assert code == 0
    assert "order: 144" in out
    assert "transitive: yes (18/18)" in out
    assert "known subgroup order: 12" in out
    assert "certified: 144/144" in out


def test_symmetries_json_deterministic(capsys):
    code, out, _ = run(capsys, "symmetries", "--format", "json")
    _, again, _ = run(capsys, "symmetries", "--format", "json")
    assert out == again
    doc = json.loads(out)
    assert doc["schema"] == "lr3/1"
    assert doc["order"] == 144 and len(doc["elements"]) == 144
    for el in doc["elements"]:
        m = el["matrix"]
        assert len(m) == 6 and all(len(r) == 6 and all(isinstance(a, int) for a in r) for r in m)
        assert el["valid"] and el["polynomial_checks"] == "18/18"
        assert sorted(el["chamber_perm"], key=lambda k: int(k[1:])) == [f"k{i}" for i in range(1, 19)]
    assert doc["generators"]["X"] == known_symmetries()["X"].to_json()


def _write(tmp_path, obj, name="m.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_verify_map(capsys, tmp_path):
    x = known_symmetries()["X"].to_json()
    code, out, _ = run(capsys, "verify-map", _write(tmp_path, x))
    assert code == 0
    assert out.startswith("valid: 18/18")
    ident = [[int(i == j) for j in range(6)] for i in range(6)]
    assert run(capsys, "verify-map", _write(tmp_path, ident))[0] == 0
    scaled = [[int(i == j) * (2 if i == 5 else 1) for j in range(6)] for i in range(6)]
    code, out, _ = run(capsys, "verify-map", _write(tmp_path, scaled))
    assert code == 1
    assert "NotUnimodular" in out


def test_verify_map_non_symmetry(capsys, tmp_path):
    # swapping l1 and l2 is unimodular but does not permute the chambers
    swap = [[0, 1, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0]] + [[int(i == j) for j in range(6)] for i in range(2, 6)]
    code, out, _ = run(capsys, "verify-map", _write(tmp_path, swap), "--format", "json")
    assert code == 1
    assert json.loads(out)["valid"] is False


def test_verify_map_usage_errors(capsys, tmp_path):
    assert run(capsys, "verify-map", _write(tmp_path, [[1, 2], [3, 4]]))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("[[1,")
    assert run(capsys, "verify-map", str(bad))[0] == 2
    assert run(capsys, "verify-map", str(tmp_path / "missing.json"))[0] == 2


def test_cross_validate(capsys):
    code, out, _ = run(capsys, "cross-validate", "--bound", "4")
    assert (code, out) == (0, "15625 points, 0 mismatches\n")


def test_check_gl3(capsys):
    code, out, _ = run(capsys, "check-gl3", "--bound", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["mismatches"] == [] and doc["triples"] == 1000


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lr3sym", "eval", *"2 1 2 1 3 2 1".split()],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "2\n"
