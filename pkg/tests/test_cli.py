import json
import subprocess
import sys

from eigenperm.cli import main


def test_schema_flag(capsys):
    assert main(["--schema"]) == 0
    schema = json.loads(capsys.readouterr().out)
    assert schema["title"] == "RunRecord"


def test_sample_json(capsys):
    assert main(["sample", "--n", "20", "--samples", "5", "--seed", "1"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["samples"] == 5 and len(rec["per_sample"]) == 5


def test_csv_output_file(tmp_path):
    out = tmp_path / "m.csv"
    assert main(["moments", "--n", "20", "--samples", "5", "--format", "csv", "--out", str(out), "--max-moment", "2"]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("order,empirical,standard_error")
    assert len(lines) == 3


def test_config_file_overridden_by_flags(tmp_path, capsys):
    conf = tmp_path / "c.json"
    conf.write_text(json.dumps({"n": 15, "samples": 3, "seed": 9}))
    assert main(["sample", "--config", str(conf), "--samples", "4"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["config"]["n"] == 15 and rec["samples"] == 4 and rec["config"]["seed"] == 9


def test_exit_codes(capsys):
    assert main(["sample", "--n", "0"]) == 2
    assert main(["density", "--k", "3", "--samples", "0"]) == 2
    assert main(["sample", "--k", "7", "--mode", "set", "--n", "20"]) == 3
    assert main(["moments", "--n", "20", "--theta", "x"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_spectrum_text(capsys):
    assert main(["spectrum", "--perm", "2,3,4,1", "--k", "2", "--mode", "set"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["tables"]["subset"]["cycle_lengths"] == [[2, 1], [4, 1]]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eigenperm", "spectrum", "--cycle-type", "4", "--k", "2",
                           "--mode", "set", "--format", "csv"], capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines() == ["representation,length,count", "subset,2,1", "subset,4,1"]
    bad = subprocess.run([sys.executable, "-m", "eigenperm", "sample", "--mode", "bogus"], capture_output=True)
    assert bad.returncode == 2
