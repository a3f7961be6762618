import json

from paritygame.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_command(capsys):
    code, out = run(capsys, "classify", "--domain", "finite:6", "--occupied", "3", "--turns", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "white-controls"
    assert doc["case"] == "FIN_DELTA"
    assert doc["sequence"] == [2, 3]


def test_classify_normalizes_with_notice(capsys):
    code = main(["classify", "--domain", "w-,w+", "--turns", "5"])
    captured = capsys.readouterr()
    assert code == 0
    assert "normalized to z" in captured.err
    assert json.loads(captured.out)["case"] == "Z_BI_NOPIV"


def test_solve_command(capsys):
    code, out = run(capsys, "solve", "--domain", "finite:5", "--occupied", "3", "--turns", "2")
    assert code == 0
    assert json.loads(out)["verdict"] == "white-controls"


def test_delta_command(capsys):
    code, out = run(capsys, "delta", "--seq", "3,5,2,1,7,1,4,2,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["delta"] == -2
    assert doc["mover"] == "black"
    assert doc["winner"] == "black"
    assert doc["best_move"] is not None


def test_delta_losing_position(capsys):
    code, out = run(capsys, "delta", "--seq", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["winner"] == "white" and doc["mover"] == "black"
    assert doc["best_move"] is None


def test_verify_examples_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "examples")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_small_sweep(capsys):
    code, out = run(capsys, "verify", "--suite", "finite-sweep", "--max-d", "6")
    assert code == 0
    assert "classify == solve_finite" in out
