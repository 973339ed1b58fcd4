import json
import subprocess
import sys

import pytest

from latsimplex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sylvester(capsys):
    code, out, _ = run(capsys, "sylvester", "--upto", "6")
    assert code == 0 and json.loads(out) == ["2", "3", "7", "43", "1807", "3263443"]


def test_zpw_verify(capsys):
    code, out, _ = run(capsys, "zpw", "--dim", "3", "--k", "2", "--verify")
    data = json.loads(out)
    assert code == 0 and data["interior_point_count"] == 2
    assert data["vertices"][3] == [0, 0, 18]


def write_simplex(tmp_path, verts):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"dimension": len(verts[0]), "vertices": verts}))
    return str(p)


def test_enumerate(capsys, tmp_path):
    f = write_simplex(tmp_path, [[0, 0], [2, 0], [0, 4]])
    code, out, _ = run(capsys, "enumerate", "--simplex", f)
    assert code == 0 and json.loads(out) == [[1, 1]]


def test_check_ps_default_point(capsys, tmp_path):
    f = write_simplex(tmp_path, [[0, 0, 0], [2, 0, 0], [0, 3, 0], [0, 0, 12]])
    code, out, _ = run(capsys, "check-ps", "--simplex", f)
    data = json.loads(out)
    assert data["beta_sorted"] == ["1/2", "1/3", "1/12", "1/12"]
    assert [r["tight"] for r in data["product_sum"]["records"]] == [True, True, False]
    assert data["generalized"]["all_hold"]


def test_improve(capsys, tmp_path):
    f = write_simplex(tmp_path, [[0], [5]])
    code, out, _ = run(capsys, "improve", "--simplex", f, "--point", "1")
    data = json.loads(out)
    assert data["status"] == "improved" and data["q"] == ["2"] and data["new_gamma"] == "2/5"
    code, out, _ = run(capsys, "improve", "--simplex", f, "--point", "2")
    assert json.loads(out)["status"] == "already-satisfies"


def test_improve_rejects_exterior(capsys, tmp_path):
    f = write_simplex(tmp_path, [[0], [5]])
    code, _, err = run(capsys, "improve", "--simplex", f, "--point", "7")
    assert code == 2 and "not an interior" in err


def test_tau(capsys):
    code, out, _ = run(capsys, "tau", "--dim", "3", "--grid", "24", "--tolerance", "1/1000000")
    data = json.loads(out)
    assert data["lower_bound"] == data["grid_upper"] == "13/1536" and data["is_exact"]


def test_bounds_formats(capsys):
    code, out, _ = run(capsys, "bounds", "--dim", "2", "--k", "1")
    data = json.loads(out)
    assert data["thm12_bound"] == "6" and data["thm32_bound"] == "9/2"
    assert data["pikhurko_old_bound"] == "20503125000"
    code, out, _ = run(capsys, "bounds", "--dim", "2", "--k", "1", "--format", "csv")
    assert out.startswith("d,k,")


def test_verify_all_exit_code(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-dim", "2", "--seed", "1")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_byte_identical_output():
    cmd = [sys.executable, "-m", "latsimplex", "bounds", "--dim", "3", "--k", "2"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["d"] == 3


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit):
        main(["zpw", "--dim", "0", "--k", "1"])
