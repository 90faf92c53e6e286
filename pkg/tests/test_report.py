import csv
import json
import os

from perfectseries.cli import main
from perfectseries.report import write_series_report


class TestWriteSeriesReport:
    def test_writes_csv_and_figures(self, tmp_path):
        out = tmp_path / "report"
        paths = write_series_report([10, 100, 10000], str(out))
        assert set(paths) == {"csv", "partial_sums_figure", "branch_bounds_figure"}
        for path in paths.values():
            assert os.path.exists(path)
            assert os.path.getsize(path) > 0

    def test_csv_carries_exact_fractions(self, tmp_path):
        paths = write_series_report([10, 100, 10000], str(tmp_path))
        with open(paths["csv"], newline="") as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ["cutoff", "total", "even_part", "odd_part", "bound"]
        assert rows[1] == ["10", "1/6", "1/6", "0/1", "4/1"]
        assert rows[2] == ["100", "17/84", "17/84", "0/1", "4/1"]
        assert rows[3] == ["10000", "1082183/5291328", "1082183/5291328", "0/1", "4/1"]

    def test_figures_are_png(self, tmp_path):
        paths = write_series_report([10, 100], str(tmp_path))
        for key in ("partial_sums_figure", "branch_bounds_figure"):
            with open(paths[key], "rb") as handle:
                assert handle.read(8) == b"\x89PNG\r\n\x1a\n"


class TestReportCommand:
    def test_cli_report(self, tmp_path, capsys):
        out_dir = str(tmp_path / "cli-report")
        code = main(["report", "--out", out_dir, "--cutoffs", "10,100,10000", "--json"])
        captured = capsys.readouterr()
        assert code == 0
        doc = json.loads(captured.out)
        files = doc["result"]["files"]
        assert os.path.exists(files["csv"])
        assert os.path.exists(files["partial_sums_figure"])
        assert os.path.exists(files["branch_bounds_figure"])

    def test_cli_report_human(self, tmp_path, capsys):
        out_dir = str(tmp_path / "human-report")
        code = main(["report", "--out", out_dir, "--cutoffs", "10,100"])
        captured = capsys.readouterr()
        assert code == 0
        assert "wrote:" in captured.out
        assert "series_partial_sums.csv" in captured.out

    def test_unordered_cutoffs_domain_error(self, tmp_path, capsys):
        code = main(["report", "--out", str(tmp_path), "--cutoffs", "100,10"])
        capsys.readouterr()
        assert code == 2

    def test_bad_cutoffs_usage_error(self, tmp_path, capsys):
        code = main(["report", "--out", str(tmp_path), "--cutoffs", "ten"])
        capsys.readouterr()
        assert code == 1
