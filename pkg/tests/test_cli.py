import csv
import io
import json

import pytest

from quadalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_identify(capsys):
    code, out, _ = run(capsys, "identify", "--spec", "-3*Q0^2 - 3*Q0 + 2")
    assert code == 0
    doc = json.loads(out)
    valid = [i for i in doc["interpretations"] if i["validity"]["valid"]]
    assert valid == [{"class": "Q+11", "l": "1", "spin": "2", "validity": {"valid": True}}]


def test_identify_without_valid_reading_fails(capsys):
    code, _, _ = run(capsys, "identify", "--spec", "-3*Q0^2 + 1/3")
    assert code == 1


def test_degeneracy_csv(capsys):
    code, out, _ = run(capsys, "degeneracy", "--max-n", "8", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 9 and all(r["agree"] == "ok" for r in rows)
    assert list(rows[0]) == ["N", "l", "closed", "brute", "via_reps", "k_list", "agree"]


@pytest.mark.parametrize("argv", [
    ("rep", "verify", "--class", "Q-2", "--spin", "1/2", "--l", "9"),
    ("tc", "--j", "0.5", "--l", "1/4"),
    ("identify", "--spec", "Q0^3"),
    ("rep", "build", "--class", "Q+11", "--spin", "2", "--l", "1"),
    ("rep", "build", "--class", "nope", "--spin", "1"),
    ("fock", "check", "--class", "Q-2", "--cutoffs", "1,1"),
    ("sweep",),
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_rep_verify_pass(capsys):
    code, out, _ = run(capsys, "rep", "verify", "--class", "Q+11", "--spin", "2", "--l", "1",
                       "--nmax", "10")
    assert code == 0 and json.loads(out)["ok"]


def test_casimir_reports_closed_form(capsys):
    code, out, _ = run(capsys, "rep", "casimir", "--class", "Q-2", "--spin", "1/2", "--l", "1/4")
    doc = json.loads(out)
    assert code == 0 and doc["constant"]
    assert doc["lowest_weight_value"] == "7/64" and doc["closed_form_value"] == "75/64"


def test_tc_and_table(capsys):
    code, out, _ = run(capsys, "tc", "--j", "1/2", "--l", "1/4", "--format", "table")
    assert code == 0 and "-0.5" in out and "1.5" in out


def test_fock_and_diffop(capsys):
    assert run(capsys, "fock", "check", "--class", "Q+11", "--cutoffs", "6,6,6",
               "--spin", "2", "--l", "1")[0] == 0
    code, out, _ = run(capsys, "diffop", "check", "--class", "Q+11", "--spin", "2", "--l", "1",
                       "--nmax", "5")
    assert code == 0 and json.loads(out)["operators"]["qminus"] == "4*D + 6*z*D^2 + z^2*D^3"


def test_sweep_reports_every_params(capsys):
    code, out, _ = run(capsys, "sweep", "--class", "Q+2", "--spin-max", "1", "--lattice-max", "2",
                       "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert len(rows) == 9 + 1
    assert rows[-1]["params"] == "aggregate: 9 params, 0 failed"


def test_output_file_and_determinism(capsys, tmp_path):
    path = tmp_path / "p.json"
    argv = ("partitions", "--max-n", "20", "--output", str(path))
    assert run(capsys, *argv)[0] == 0
    first = path.read_bytes()
    run(capsys, *argv)
    assert path.read_bytes() == first
