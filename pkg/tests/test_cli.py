import json
import subprocess
import sys

import pytest

from habicht.cli import main
from habicht.instances import dump_instance, random_system
from habicht.subresultant import subresultant


def write(tmp_path, obj, name="inst.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_dp_single(tmp_path, capsys):
    code, out = run(capsys, ["dp", write(tmp_path, {"polys": [[1, 0, 1]]})])
    assert code == 0 and json.loads(out) == [1, 0, 1]


def test_dp_square_family(tmp_path, capsys):
    # cm [[1, 2], [0, 3]]
    code, out = run(capsys, ["dp", write(tmp_path, {"polys": [[2, 1], [3]]})])
    assert code == 0 and json.loads(out) == [3]


def test_dp_matches_library(tmp_path, capsys):
    polys = {"polys": [[5, -1, 2, 3], [4, 0, -2, 1], [7, 6, -3]]}
    code, out = run(capsys, ["dp", write(tmp_path, polys)])
    assert json.loads(out) == [-35, -45]


def test_dp_tall(tmp_path, capsys):
    code, _ = run(capsys, ["dp", write(tmp_path, {"polys": [[1], [2]]})])
    assert code == 2


def test_subres_round_trip(tmp_path, capsys):
    F = random_system((3, 3, 4), 7)
    path = write(tmp_path, dump_instance(F))
    code, out = run(capsys, ["subres", path, "--delta", "1,1"])
    obj = json.loads(out)
    val = subresultant(F, (1, 1))
    assert code == 0 and obj["delta0"] == 2
    assert obj["R"] == list(val.poly.coeffs) and obj["r"] == val.principal


def test_subres_zero_delta(tmp_path, capsys):
    F = random_system((3, 3, 4), 7)
    code, out = run(capsys, ["subres", write(tmp_path, dump_instance(F)), "--delta", "0,0"])
    assert json.loads(out)["R"] == list(F[0].coeffs)


def test_subres_bad_delta(tmp_path, capsys):
    F = random_system((3, 3, 4), 7)
    code, _ = run(capsys, ["subres", write(tmp_path, dump_instance(F)), "--delta", "2,2"])
    assert code == 2


def test_verify_explicit(tmp_path, capsys):
    F = random_system((5, 5, 6), 3)
    code, out = run(capsys, ["verify", write(tmp_path, dump_instance(F)),
                             "--w0", "1,1", "--k", "1", "--i", "1"])
    rep = json.loads(out)["systems"][0]["reports"][0]
    assert code == 0
    assert rep["params"]["epsilon"] == 3 and rep["equal"]


def test_verify_inapplicable_params(tmp_path, capsys):
    F = random_system((5, 5, 6), 3)
    code, out = run(capsys, ["verify", write(tmp_path, dump_instance(F)),
                             "--w0", "2,2", "--k", "1", "--i", "1"])
    assert code == 2 and "error" in json.loads(out)["cases"][0]


def test_verify_sweep_and_negative_control(capsys, tmp_path):
    code, out = run(capsys, ["verify", "--random", "3,3,4", "--seed", "5", "--trials", "4", "--sweep"])
    summary = json.loads(out)["summary"]
    assert code == 0 and summary["failures"] == 0 and summary["total"] == 4 * 5
    code, _ = run(capsys, ["verify", "--random", "3,3,4", "--seed", "5", "--trials", "4",
                           "--sweep", "--epsilon-off-by-one"])
    assert code == 1


def test_verify_jobs_same_output(capsys):
    args = ["verify", "--random", "3,3,4", "--seed", "5", "--trials", "3", "--sweep"]
    _, serial = run(capsys, args)
    _, parallel = run(capsys, args + ["--jobs", "2"])
    assert serial == parallel


def test_verify_json_out(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out = run(capsys, ["verify", "--random", "3,4", "--seed", "1", "--trials", "2",
                             "--sweep", "--json-out", str(target)])
    assert target.read_text() == out


def test_verify_needs_params(capsys):
    code, _ = run(capsys, ["verify", "--random", "3,4"])
    assert code == 2


@pytest.mark.parametrize("strategy, steps", [("A", 6), ("B", 2)])
def test_reduce(capsys, strategy, steps):
    code, out = run(capsys, ["reduce", "--random", "5,5,6", "--seed", "2",
                             "--target", "3,2", "--strategy", strategy])
    obj = json.loads(out)
    assert code == 0
    assert len(obj["plan"]["steps"]) == steps
    assert all(r["equal"] for r in obj["reports"])
    if strategy == "B":
        assert [s["k"] for s in obj["plan"]["steps"]] == [1, 2]


def test_reduce_base_target(capsys):
    code, out = run(capsys, ["reduce", "--random", "5,5,6", "--target", "0,3"])
    obj = json.loads(out)
    assert code == 0 and obj["plan"]["steps"] == [] and obj["reports"] == []


def test_gen(capsys):
    code, out = run(capsys, ["gen", "--degrees", "3,3,4", "--seed", "9"])
    obj = json.loads(out)
    assert code == 0 and obj["degrees"] == [3, 3, 4] and obj["seed"] == 9
    code, out = run(capsys, ["gen", "--degrees", "3,3,4", "--seed", "9", "--trials", "3"])
    assert len(json.loads(out)) == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "habicht", "gen", "--degrees", "2,3", "--seed", "1"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["degrees"] == [2, 3]
