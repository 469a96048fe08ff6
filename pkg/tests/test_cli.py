import csv
import io
import json
import math
import subprocess
import sys

import pytest

from threespin.cli import fmt, main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def parse_csv(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.reader(io.StringIO("\n".join(lines)))
    header = next(reader)
    return header, list(reader)


class TestFormatting:
    def test_fmt(self):
        assert fmt(1 / 3) == "0.333333333"
        assert fmt(-0.0) == "0"
        assert fmt(True) == "true"
        assert fmt(7) == "7"
        assert fmt(None) == ""
        assert fmt(1e-12) == "1e-12"


class TestSpectrum:
    def test_free_chain(self, capsys):
        status, out, _ = run(capsys, "spectrum", "--J", "1", "--h", "0", "--k", "0")
        assert status == 0
        header, rows = parse_csv(out)
        assert header == ["i", "energy", "c13", "c12", "c23", "numeric", "agree"]
        assert [r[2] for r in rows] == ["0", "0", "1", "1", "0.5", "0.5", "0.5", "0.5"]
        energies = sorted(float(r[1]) for r in rows)
        r = 2 * math.sqrt(2)
        assert energies == pytest.approx([-r, -r, 0, 0, 0, 0, r, r], abs=1e-8)
        assert all(r[6] == "true" for r in rows)

    def test_comments_follow_header(self, capsys):
        _, out, _ = run(capsys, "spectrum", "--h", "0.3")
        lines = out.splitlines()
        assert lines[0].startswith("i,")
        assert "# command = spectrum" in lines
        assert "# h = 0.3" in lines

    def test_zero_coupling_numeric_only(self, capsys):
        status, out, _ = run(capsys, "spectrum", "--J", "0", "--h", "1")
        assert status == 0
        _, rows = parse_csv(out)
        assert sorted(float(r[5]) for r in rows)[0] == -3


class TestThermal:
    def test_json_fields(self, capsys):
        status, out, _ = run(capsys, "thermal", "--h", "-0.5", "--k", "0.5", "--T", "0.2", "--format", "json")
        assert status == 0
        (row,) = json.loads(out)
        for key in ("u", "v", "w", "y", "Z", "c_closed", "c_numeric", "concurrence"):
            assert key in row
        assert abs(row["c_closed"] - row["c_numeric"]) <= 1e-8

    def test_nearest_pair_has_no_weights(self, capsys):
        _, out, _ = run(capsys, "thermal", "--pair", "12", "--format", "json")
        (row,) = json.loads(out)
        assert row["u"] is None and row["c_closed"] is None


class TestGrids:
    def test_sweep_row_count(self, capsys):
        _, out, _ = run(capsys, "sweep", "--k", "0.5", "--h-steps", "7", "--T-steps", "3")
        header, rows = parse_csv(out)
        assert header == ["h", "T", "C"]
        assert len(rows) == 21

    def test_dip_jump(self, capsys):
        _, out, _ = run(capsys, "dip", "--k-min", "0", "--k-max", "3", "--k-steps", "301", "--pair", "13")
        header, rows = parse_csv(out)
        assert header == ["k", "h_dip", "c_dip", "c_plus", "c_minus"]
        assert len(rows) == 301
        c = {round(float(r[0]), 6): float(r[2]) for r in rows}
        assert c[0.99] == pytest.approx(0.5 - math.sqrt(2) / math.sqrt(0.99**2 + 8))
        assert c[1.0] == 0
        assert c[1.01] == pytest.approx(0.25 * (1 - 1.01 / math.sqrt(1.01**2 + 8)))
        assert c[1.01] - c[0.99] > 0.13

    def test_phase(self, capsys):
        _, out, _ = run(capsys, "phase", "--k", "1.5", "--format", "json")
        rows = json.loads(out)
        assert [r["levels"] for r in rows] == ["2", "3", "5", "1"]
        assert rows[0]["h_lo"] is None and rows[-1]["h_hi"] is None

    def test_phase_csv_infinities(self, capsys):
        _, out, _ = run(capsys, "phase", "--k", "0")
        _, rows = parse_csv(out)
        assert rows[0][0] == "-inf" and rows[-1][1] == "inf"

    def test_byte_determinism(self, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            main(["sweep", "--k", "1.5", "--h-steps", "5", "--T-steps", "4", "--out", str(p)])
        assert paths[0].read_bytes() == paths[1].read_bytes()


class TestErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["sweep", "--h-steps", "1"],
            ["sweep", "--T-min", "0"],
            ["sweep", "--h-min", "1", "--h-max", "0"],
            ["dip", "--k-min", "2", "--k-max", "1"],
            ["thermal", "--T", "0"],
            ["thermal", "--pair", "11"],
            ["phase", "--J", "0"],
            ["dip", "--J", "0"],
            ["spectrum", "--h", "nan"],
            ["verify", "--trials", "0"],
            ["frobnicate"],
            ["spectrum", "--k-st", "3"],
        ],
    )
    def test_exit_2(self, argv, capsys):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
        assert "usage" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "threespin", "thermal", "--T", "50"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    header, rows = parse_csv(proc.stdout)
    assert rows[0][header.index("concurrence")] == "0"
