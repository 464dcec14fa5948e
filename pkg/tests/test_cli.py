import json
import subprocess
import sys
from pathlib import Path

import pytest

from qcipoincare.cli import main
from qcipoincare.harness import parse_instance

WORKED = Path(__file__).resolve().parents[1] / "docs" / "worked_instance.txt"


def write(tmp_path, text, name="inst.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_check_text_report(capsys):
    assert main(["check", str(WORKED), "--hmax", "6"]) == 0
    out = capsys.readouterr().out
    assert "verdict: q.c.i., not c.i." in out
    assert "inert-grade-factor[k]" in out


def test_check_machine_report_is_stable(capsys):
    assert main(["check", str(WORKED), "--hmax", "5", "--format", "machine", "--no-timing"]) == 0
    first = capsys.readouterr().out
    assert main(["check", str(WORKED), "--hmax", "5", "--format", "machine", "--no-timing"]) == 0
    assert capsys.readouterr().out == first
    doc = json.loads(first)
    assert doc["window"] == {"hmax": 5, "dmax": 40}
    assert doc["certificate"]["verdict"] == "q.c.i., not c.i."


def test_check_selection(capsys):
    assert main(["check", str(WORKED), "--hmax", "4", "--checks", "inert,qci", "--format", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["checks_selected"] == ["inert", "qci"]
    assert "timing" in doc


@pytest.mark.parametrize("text,needle", [
    ("char: 101\nvars: x, y\nideal: [x^2 + y]\n", "line 3, column 15: inhomogeneous error"),
    ("char: 100\nvars: x\nideal: [x]\n", "characteristic error"),
    ("char: 101\nvars: x, y\nideal: [x^2, x^2 + x*y, x*y]\n", "is redundant"),
])
def test_input_errors_exit_3(tmp_path, capsys, text, needle):
    assert main(["check", write(tmp_path, text)]) == 3
    assert needle in capsys.readouterr().err


def test_missing_file_exit_3(tmp_path):
    assert main(["check", str(tmp_path / "absent.txt")]) == 3


def test_minimize_flag(tmp_path, capsys):
    path = write(tmp_path, "char: 101\nvars: x, y\nideal: [x^2, x^2 + x*y, x*y]\n")
    assert main(["check", path, "--hmax", "3", "--dmax", "12", "--minimize"]) == 0
    assert "minimised" in capsys.readouterr().out


def test_char_override(capsys):
    assert main(["check", str(WORKED), "--hmax", "4", "--char", "7", "--format", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["instance"].startswith("char: 7")


def test_cap_sensitive_exit_2(tmp_path, capsys):
    path = write(tmp_path, "char: 101\nvars: x, y\nideal: [x^6]\n")
    assert main(["check", path, "--hmax", "12", "--dmax", "4", "--checks", "inert"]) == 2
    out = capsys.readouterr().out
    assert "cap-sensitive" in out and "dmax raised from 4 to 12" in out


def test_gen_output_parses(capsys):
    assert main(["gen", "--family", "random-homogeneous", "--seed", "3"]) == 0
    inst = parse_instance(capsys.readouterr().out)
    assert inst.char == 101 and inst.ideal
    assert main(["gen", "--family", "regular-sequence", "--seed", "1", "n=2"]) == 0
    assert len(parse_instance(capsys.readouterr().out).ideal) == 2


def test_gen_rejects_bad_params(capsys):
    assert main(["gen", "--family", "power-in-hypersurface", "a=4", "b=2"]) == 3


def test_selftest_subset(capsys):
    assert main(["selftest", "--only", "1,4"]) == 0
    out = capsys.readouterr().out
    assert "criterion  1 [PASS]" in out and "criterion  4 [PASS]" in out and "2/2" in out


def test_module_entry_point():
    got = subprocess.run([sys.executable, "-m", "qcipoincare", "check", str(WORKED), "--hmax", "3"],
                         capture_output=True, text=True, check=False)
    assert got.returncode == 0 and "verdict" in got.stdout
