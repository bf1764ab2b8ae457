import csv
import io
import json
import math
import subprocess
import sys

import jsonschema
import pytest

from hardy_noise import schemas
from hardy_noise.cli import main
from hardy_noise.sweep import SweepRequest, parse_grid, run_sweep, to_csv


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _fields(text):
    return dict(line.split(": ", 1) for line in text.strip().splitlines())


class TestProbs:
    def test_agreement_white(self, capsys):
        code, out, _ = run(capsys, "probs", "--p1sq", "0.8", "--noise", "white", "--p", "1", "--format", "json")
        assert code == 0
        rows = {r["event"]: r for r in json.loads(out)["rows"]}
        assert rows["a"]["difference"] <= 1e-12
        assert all(r["difference"] <= 1e-12 for r in rows.values())

    def test_hardy_max(self, capsys):
        code, out, _ = run(capsys, "probs", "--hardy-max", "--noise", "white", "--p", "1", "--format", "json")
        assert code == 0
        rows = {r["event"]: r for r in json.loads(out)["rows"]}
        assert rows["a"]["closed_form"] == pytest.approx(0.090, abs=1e-3)

    def test_degenerate_spec(self, capsys):
        code, out, err = run(capsys, "probs", "--p1sq", "0.5")
        assert code == 2
        assert err.count("\n") == 1 and "p1 = p2" in err

    def test_text_and_csv(self, capsys):
        code, out, _ = run(capsys, "probs", "--d1", "3", "--d2", "3", "--p1sq", "0.5", "--p2sq", "0.3", "--p", "0.4")
        assert code == 0 and "P(X1=0, Y2=+1)" in out
        code, out, _ = run(capsys, "probs", "--hardy-max", "--noise", "colored", "--p", "0.3", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["event"] for r in rows][0] == "P(X1=+1, X2=+1)" and len(rows) == 4

    def test_colored_on_qutrits(self, capsys):
        code, _, err = run(capsys, "probs", "--d1", "3", "--d2", "3", "--p1sq", "0.6", "--noise", "colored")
        assert code == 2 and err.startswith("error: invalid-input:")


class TestThresholds:
    def test_hardy_max_two_digits(self, capsys):
        code, out, _ = run(capsys, "thresholds", "--hardy-max", "--digits", "2")
        assert code == 0
        table = dict(line.split(None, 1) for line in out.splitlines() if not line.startswith("orderings"))
        assert table["white"] == "0.85"
        assert float(table["colored"]) == pytest.approx(0.706, abs=0.005)

    def test_highdim_marks_na(self, capsys):
        code, out, _ = run(capsys, "thresholds", "--d1", "3", "--d2", "4", "--weights", "0.8,0.5,0.3")
        assert code == 0
        table = dict(line.split(None, 1) for line in out.splitlines() if not line.startswith("orderings"))
        assert table["chsh"] == "n/a (requires 2x2)"
        assert table["colored"] == "n/a (requires 2x2)"

    def test_weights_renormalized_with_warning(self, capsys):
        code, _, err = run(capsys, "thresholds", "--d1", "3", "--d2", "4", "--weights", "0.8,0.5,0.3")
        assert code == 0 and err.startswith("warning:")

    def test_json_schema_round_trip(self, capsys):
        for argv in (["--hardy-max"], ["--d1", "3", "--d2", "4", "--weights", "0.8,0.5,0.3"]):
            code, out, _ = run(capsys, "thresholds", *argv, "--format", "json")
            assert code == 0
            obj = json.loads(out)
            jsonschema.validate(obj, schemas.THRESHOLDS)
            assert json.loads(json.dumps(obj)) == obj
        assert obj["thresholds"]["chsh"] is None


class TestLhvCheck:
    def test_white_above_threshold(self, capsys):
        code, out, _ = run(capsys, "lhv-check", "--hardy-max", "--noise", "white", "--p", "0.9")
        f = _fields(out)
        assert code == 0
        assert f["verdict"] == "infeasible, slack < 0" and f["agreement"] == "yes"

    def test_colored_above_threshold(self, capsys):
        code, out, _ = run(capsys, "lhv-check", "--hardy-max", "--noise", "colored", "--p", "0.75")
        f = _fields(out)
        assert code == 0 and f["lp"] == "infeasible" and f["agreement"] == "yes"

    @pytest.mark.parametrize("argv", [
        ["--hardy-max", "--noise", "white"],
        ["--hardy-max", "--noise", "colored"],
        ["--d1", "3", "--d2", "3", "--p1sq", "0.6"],
        ["--d1", "2", "--d2", "4", "--p1sq", "0.1"],
    ])
    def test_fully_noisy_feasible(self, capsys, argv):
        code, out, _ = run(capsys, "lhv-check", *argv, "--p", "0", "--full")
        f = _fields(out)
        assert code == 0
        assert f["lp"] == "feasible" and f["full_behavior_lp"] == "feasible"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "lhv-check", "--hardy-max", "--p", "0.5", "--format", "json")
        obj = json.loads(out)
        assert code == 0 and obj["schema"] == 1 and obj["slack"] > 0


class TestSweep:
    def test_left_panel(self, capsys):
        code, out, _ = run(capsys, "sweep", "--d1", "2", "--d2", "3", "--p2sq", "1/3", "--grid", "0:1:41")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "p1,upper_one_minus_p,lower_one_minus_p"
        rows = [list(map(float, l.split(","))) for l in lines[1:] if not l.startswith("#")]
        assert all(u >= l for _, u, l in rows)
        skipped = [l for l in lines if l.startswith("# skipped")]
        assert any("p1 <= 0" in s for s in skipped)
        assert any("p1^2 + p2^2 > 1" in s for s in skipped)
        assert "\r" not in out

    def test_seventeen_digits(self, capsys):
        _, out, _ = run(capsys, "sweep", "--d1", "3", "--d2", "4", "--p2", "0.7071067811865476", "--grid", "0.1:0.2:2")
        p1, upper, lower = out.splitlines()[1].split(",")
        assert p1 == "0.10000000000000001"
        assert float(upper) == float(format(float(upper), ".17g"))

    def test_digits(self, capsys):
        _, out, _ = run(capsys, "sweep", "--p2sq", "1/3", "--grid", "0.1:0.5:3", "--digits", "4")
        assert out.splitlines()[1].startswith("0.1000,")

    def test_all_skipped(self, capsys):
        code, out, _ = run(capsys, "sweep", "--p2", "1", "--grid", "0:1:5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("p1,") and all(l.startswith("# skipped") for l in lines[1:]) and len(lines) == 6

    def test_empty_grid(self, capsys):
        code, _, err = run(capsys, "sweep", "--p2", "0.5", "--grid", "0:1:0")
        assert code == 2 and "empty grid" in err

    def test_bad_grid(self, capsys):
        code, _, err = run(capsys, "sweep", "--p2", "0.5", "--grid", "0:1")
        assert code == 2 and err.startswith("error:")

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "sweep", "--d1", "3", "--d2", "4", "--p2sq", "1/2", "--grid", "0:1:11", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        jsonschema.validate(obj, schemas.SWEEP)
        assert obj["skipped"] and obj["rows"]

    def test_byte_identical(self, capsys, tmp_path):
        argv = ["sweep", "--d1", "2", "--d2", "3", "--p2sq", "1/3", "--grid", "0.01:0.8:50"]
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second
        target = tmp_path / "fig.csv"
        assert main(argv + ["-o", str(target)]) == 0
        assert target.read_bytes() == first.encode()


def test_usage_error_single_line(capsys):
    code, _, err = run(capsys, "thresholds", "--bogus")
    assert code == 2 and err.count("\n") == 1


def test_missing_weights(capsys):
    code, _, err = run(capsys, "thresholds")
    assert code == 2 and "invalid-input" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hardy_noise", "thresholds", "--hardy-max", "--digits", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "white      0.85" in proc.stdout


def test_parse_grid():
    assert parse_grid("0:1:5") == (0.0, 1.0, 5)
    with pytest.raises(ValueError):
        parse_grid("0:x:5")


def test_library_sweep_csv_matches_rows():
    res = run_sweep(SweepRequest(2, 3, 1 / math.sqrt(3), 0.05, 0.8, 16))
    parsed = list(csv.reader(io.StringIO(to_csv(res))))
    assert len(parsed) == 1 + len(res.rows) + len(res.skipped)
