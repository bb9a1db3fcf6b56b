"""CLI harness: command flows, determinism, exit codes."""

import json

import pytest

from qregen import reference
from qregen.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_demo_passes(capsys):
    code, out, _ = run_cli(capsys, "demo-example1")
    assert code == 0
    assert "8/8 golden values match" in out
    assert out.count("PASS") == 8


def test_demo_json_format(capsys):
    code, out, _ = run_cli(capsys, "demo-example1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["matched"] == doc["total"] == 8
    names = [r["name"] for r in doc["golden"]]
    assert names[0] == "V" and names[-1] == "exact_regeneration"


def test_demo_negative_control(capsys, monkeypatch):
    corrupted = {**reference.GOLDEN, "HX": [[0, 0, 0, 0], [0, 0, 0, 0]]}
    monkeypatch.setattr(reference, "GOLDEN", corrupted)
    code, out, _ = run_cli(capsys, "demo-example1")
    assert code == 1
    assert "FAIL HX" in out
    assert "7/8 golden values match" in out


def test_encode_retrieve_round_trip(tmp_path, capsys):
    msg = tmp_path / "msg.json"
    storage = tmp_path / "storage.json"
    symbols = list(range(1, 13))
    msg.write_text(json.dumps(symbols))
    code, _, _ = run_cli(
        capsys,
        "encode", "--n", "6", "--k", "3", "--d", "4", "--prime", "13",
        "--in", str(msg), "--out", str(storage),
    )
    assert code == 0
    doc = json.loads(storage.read_text())
    assert doc["params"]["n"] == 6
    assert len(doc["subfiles"]) == 1
    assert len(doc["subfiles"][0]) == 6

    code, out, _ = run_cli(capsys, "retrieve", "--in", str(storage))
    assert code == 0
    assert json.loads(out) == symbols

    code, out, _ = run_cli(
        capsys, "retrieve", "--in", str(storage), "--nodes", "2,4,6"
    )
    assert code == 0
    assert json.loads(out) == symbols


def test_repair_from_storage_file(tmp_path, capsys):
    msg = tmp_path / "msg.json"
    storage = tmp_path / "storage.json"
    msg.write_text(json.dumps(list(range(12))))
    run_cli(
        capsys,
        "encode", "--n", "6", "--k", "3", "--d", "4", "--prime", "13",
        "--in", str(msg), "--out", str(storage),
    )
    code, out, _ = run_cli(
        capsys,
        "repair", "--in", str(storage), "--failed", "1", "--helpers", "2,4,5,6",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["failedNode"] == 1
    assert doc["quditTotal"] == 4
    assert doc["css"]["HX"] == [[11, 10, 3, 9], [4, 2, 1, 0]]
    stored = json.loads(storage.read_text())["subfiles"][0][0]
    assert doc["regenerated"]["rowM"] == stored["rowM"]
    assert doc["regenerated"]["rowMp"] == stored["rowMp"]


def test_repair_seeded_determinism(capsys):
    argv = (
        "repair", "--n", "6", "--k", "3", "--d", "4", "--prime", "13",
        "--seed", "7", "--failed", "2", "--helpers", "1,3,5,6",
    )
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_repair_extended_via_cli(capsys):
    code, out, _ = run_cli(
        capsys,
        "repair", "--n", "6", "--k", "2", "--d", "3", "--prime", "13",
        "--seed", "3", "--failed", "4", "--helpers", "1,2,6",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["quditTotal"] == 6
    assert len(doc["css"]) == 3
    assert len(doc["regenerated"]) == 3


def test_sweep_summary(capsys):
    code, out, _ = run_cli(
        capsys,
        "sweep", "--n", "6", "--k", "3", "--d", "4", "--prime", "13",
        "--seed", "42", "--trials", "2",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["failures"] == 0
    assert doc["repairCases"] == 30
    assert doc["retrievalSubsets"] == 20
    assert doc["quditTotal"] == {"min": 4, "max": 4, "expected": 4}
    assert doc["perHelperQudits"] == 1


def test_sweep_extension_summary(capsys):
    code, out, _ = run_cli(
        capsys,
        "sweep", "--n", "6", "--k", "2", "--d", "3", "--prime", "13",
        "--seed", "42", "--trials", "2",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["failures"] == 0
    assert doc["perHelperQudits"] == 2
    assert doc["quditTotal"]["expected"] == 6


def test_sweep_invalid_regime_is_usage_error(capsys):
    code, _, err = run_cli(
        capsys,
        "sweep", "--n", "6", "--k", "3", "--d", "3", "--prime", "13",
    )
    assert code == 2
    assert "error" in err


def test_sweep_determinism(capsys):
    argv = (
        "sweep", "--n", "6", "--k", "3", "--d", "4", "--prime", "13",
        "--seed", "5", "--trials", "1",
    )
    _, out1, _ = run_cli(capsys, *argv)
    _, out2, _ = run_cli(capsys, *argv)
    assert out1 == out2


def test_tradeoff_output(capsys):
    code, out, _ = run_cli(capsys, "tradeoff", "--k", "3", "--d", "4", "--B", "12")
    assert code == 0
    assert out.splitlines()[0] == "beta,alpha_min_classical,alpha_min_quantum"
    assert "optimal alpha=4 d_beta_q=4" in out
    assert "classical_msr_bandwidth=8" in out


def test_tradeoff_large_instance(capsys):
    code, out, _ = run_cli(
        capsys, "tradeoff", "--k", "10", "--d", "20", "--B", "2200",
        "--betas", "11,20",
    )
    assert code == 0
    # quantum point 220 at beta = 11; classical needs beta 20 for alpha 220
    assert "11,,220" in out
    assert "20,220,220" in out
    assert "optimal alpha=220 d_beta_q=220 classical_msr_bandwidth=400" in out


def test_tradeoff_empty_grid(capsys):
    code, out, _ = run_cli(
        capsys, "tradeoff", "--k", "3", "--d", "4", "--B", "12", "--betas", ""
    )
    assert code == 0
    assert out.splitlines()[0] == "beta,alpha_min_classical,alpha_min_quantum"


def test_tradeoff_regime_warning_not_abort(capsys):
    code, out, _ = run_cli(capsys, "tradeoff", "--k", "4", "--d", "5", "--B", "40")
    assert code == 0
    assert "warning" in out


def test_tradeoff_missing_flags_usage_error(capsys):
    code, _, err = run_cli(capsys, "tradeoff", "--k", "3", "--d", "4")
    assert code == 2
    assert "error" in err


def test_selftest(capsys):
    code, out, _ = run_cli(capsys, "selftest")
    assert code == 0
    assert "6/6 selftest checks pass" in out


def test_invalid_params_usage_error(capsys, tmp_path):
    msg = tmp_path / "msg.json"
    msg.write_text(json.dumps([1, 2, 3]))
    code, _, err = run_cli(
        capsys,
        "encode", "--n", "6", "--k", "3", "--d", "4", "--prime", "12",
        "--in", str(msg),
    )
    assert code == 2
    assert "error" in err


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
