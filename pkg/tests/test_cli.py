import json
import subprocess
import sys

import pytest

from c4c4det.cli import main, run


def out(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_eval(capsys):
    code, text = out(capsys, ["eval"] + "2 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1".split())
    assert code == 0
    assert json.loads(text) == {"value": 17, "d4b": 17, "d4c": 1, "n0": 1, "n1": 1}


def test_eval_negative_entries(capsys):
    code, text = out(capsys, ["eval", "-3"] + ["2"] * 15)
    data = json.loads(text)
    assert data["value"] == data["d4b"] * data["d4c"] * (data["n0"] * data["n1"]) ** 2


def test_classify(capsys):
    code, text = out(capsys, ["classify", "585"])
    data = json.loads(text)
    assert code == 0
    assert data["in_S"] is True and data["case"] == "OddA"
    assert (data["u"], data["v"], data["w"]) == (5, 13, 3)
    code, text = out(capsys, ["classify", "9"])
    assert code == 1 and json.loads(text)["in_S"] is False


def test_witness_then_eval(capsys):
    for n in [17, 585, -135, 2**14 * 15, 2**14 * 9, 2**15 * 7, 0]:
        code, text = out(capsys, ["witness", str(n)])
        w = json.loads(text)
        assert code == 0 and w["verified"] is True
        code, text = out(capsys, ["eval"] + [str(x) for x in w["tuple"]])
        assert json.loads(text)["value"] == n
    code, text = out(capsys, ["witness", "17"])
    w = json.loads(text)
    assert w["tuple"] == [2] + [1] * 15 and w["construction"] == "Lemma5.1(1) m=1"


def test_witness_non_member(capsys):
    code, text = out(capsys, ["witness", "7"])
    assert code == 1 and json.loads(text)["in_S"] is False


def test_large_values_are_exact_decimal(capsys):
    n = 2**15 * 10**30
    code, text = out(capsys, ["classify", str(n)])
    assert str(n) in text and "e+" not in text


def test_overflow_exit_code(capsys):
    code, text = out(capsys, ["classify", str(9 + 16 * 2**70)])
    assert code == 3 and json.loads(text)["error"] == "FactorizationOverflow"


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        run(["eval", "1", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2


def test_verify_deterministic(capsys):
    argv = ["verify", "--mode", "random", "--radius", "2", "--samples", "500", "--seed", "3", "--shards", "1"]
    code1, t1 = out(capsys, argv)
    code2, t2 = out(capsys, argv)
    assert code1 == 0 and t1 == t2
    data = json.loads(t1)
    assert data["properties"]["ok"] and data["soundness"]["checked"] == 500


def test_verify_jsonl(capsys):
    code, text = out(capsys, ["verify", "--samples", "100", "--shards", "1", "--jsonl"])
    lines = [json.loads(line) for line in text.strip().splitlines()]
    assert code == 0 and "summary" in lines[-1]


def test_scan_complete_with_out_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, text = out(capsys, ["scan-complete", "--odd-bound", "100", "--even-bound", "5", "--out", str(path)])
    assert code == 0
    assert json.loads(path.read_text()) == json.loads(text)


def test_pretty(capsys):
    code, text = out(capsys, ["classify", "33", "--pretty"])
    assert "case: OddOne" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "c4c4det", "classify", "33"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["m"] == 2
