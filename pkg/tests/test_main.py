"""Tests for the command-line interface."""

import json
import logging
from collections.abc import Generator
from pathlib import Path

import pytest

from community_veil.config import settings
from community_veil.main import build_parser, run
from community_veil.readers import load_graph


@pytest.fixture(autouse=True)
def reset_logging() -> Generator[None, None, None]:
    """Drop handlers bound to captured streams once the test is over."""
    yield
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)


def _error(stderr: str) -> dict:
    return json.loads(stderr.strip().splitlines()[-1])


class TestParser:
    """Test suite for argument parsing."""

    def test_no_command_prints_help(self, capsys: pytest.CaptureFixture[str]):
        """Without a subcommand the help text is shown."""
        assert run([]) == 0
        assert "community-veil" in capsys.readouterr().out

    def test_unknown_detector(self):
        """argparse rejects detectors that are not registered."""
        with pytest.raises(SystemExit) as excinfo:
            run(["detect", "--graph", "g.txt", "--detector", "infomap"])
        assert excinfo.value.code == 2

    def test_defaults(self):
        """Pipeline defaults come from settings."""
        args = build_parser().parse_args(["pipeline", "--graph", "g.txt"])
        assert args.detector == "louvain"
        assert args.target == "largest"
        assert args.budget_frac == pytest.approx(0.3)
        assert args.mode == "oracle"


class TestSubcommands:
    """End-to-end runs on the two-triangle graph."""

    def test_detect(self, triangles_file: Path, capsys: pytest.CaptureFixture[str]):
        """Both triangles are reported as communities."""
        assert run(["detect", "--graph", str(triangles_file), "--output-format", "json"]) == 0
        communities = json.loads(capsys.readouterr().out)
        assert sorted(communities) == [["0", "1", "2"], ["3", "4", "5"]]

    def test_perm(self, triangles_file: Path, temp_dir: Path, capsys: pytest.CaptureFixture[str]):
        """Permanence CSV against a given partition file."""
        partition = temp_dir / "communities.txt"
        partition.write_text("0 1 2\n3 4 5\n", encoding="utf-8")

        assert run(["perm", "--graph", str(triangles_file), "--partition", str(partition)]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "label,I,Emax,deg,Cin,perm"
        assert lines[1] == "0,2,0,2,1.0,1.0"
        assert lines[-1].startswith("# graph_permanence=")

    def test_deceive_then_recover(
        self, triangles_file: Path, temp_dir: Path, capsys: pytest.CaptureFixture[str]
    ):
        """Deception deletes (0, 1); oracle recovery adds it back."""
        deceived, recovered = temp_dir / "g1.txt", temp_dir / "g2.txt"
        log = temp_dir / "deceive.json"

        assert run([
            "deceive", "--graph", str(triangles_file),
            "--out-graph", str(deceived), "--out-log", str(log),
        ]) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["budget"] == 1
        assert summary["applied"] == 1
        assert summary["final_permanence"] < summary["initial_permanence"]
        (record,) = json.loads(log.read_text(encoding="utf-8"))
        assert (record["action"], record["u"], record["v"]) == ("delete", "0", "1")
        assert ("0", "1") not in load_graph(deceived).labelled_edges()

        assert run([
            "recover", "--graph", str(deceived), "--orig-graph", str(triangles_file),
            "--out-graph", str(recovered),
        ]) == 0
        assert json.loads(capsys.readouterr().out)["applied"] == 1
        assert load_graph(recovered).labelled_edges() == load_graph(triangles_file).labelled_edges()

    def test_eval(self, triangles_file: Path, capsys: pytest.CaptureFixture[str]):
        """Metric table with one column per given graph."""
        assert run([
            "eval", "--graph", str(triangles_file), "--deceived", str(triangles_file),
        ]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "metric,G,G'"
        assert [line.split(",")[0] for line in lines[1:]] == ["M", "C", "PQ"]

    def test_simdist(self, triangles_file: Path, capsys: pytest.CaptureFixture[str]):
        """A graph compared with itself is at distance 0."""
        assert run([
            "simdist", "--graph", str(triangles_file), "--recovered", str(triangles_file),
        ]) == 0
        (record,) = json.loads(capsys.readouterr().out)
        assert record["pair"] == "G,G''"
        assert record["distance"] == 0.0

    def test_pipeline_text(self, triangles_file: Path, capsys: pytest.CaptureFixture[str]):
        """Text output starts with the dataset line."""
        assert run(["pipeline", "--graph", str(triangles_file), "--output-format", "text"]) == 0
        assert capsys.readouterr().out.startswith("Dataset: triangles (n=6, m=7)")

    def test_pipeline_json_to_file(self, triangles_file: Path, temp_dir: Path):
        """JSON reports are written to --output without timings."""
        out = temp_dir / "report.json"
        assert run(["pipeline", "--graph", str(triangles_file), "-o", str(out)]) == 0
        payload = json.loads(out.read_text(encoding="utf-8"))
        assert payload["dataset"] == "triangles"
        assert "timings" not in payload

    def test_sweep(self, triangles_file: Path, temp_dir: Path, capsys: pytest.CaptureFixture[str]):
        """Per-run reports, the aggregate and the failure list land in --out-dir."""
        out_dir = temp_dir / "sweep"
        assert run([
            "sweep", "--graphs", str(triangles_file), str(temp_dir / "missing.txt"),
            "--seeds", "1-2", "--out-dir", str(out_dir),
        ]) == 0

        summary = json.loads(capsys.readouterr().out)
        assert summary["reports"] == 2
        assert summary["failures"] == 2
        assert (out_dir / "triangles_louvain_seed1.json").exists()
        assert (out_dir / "aggregate.csv").exists()
        failures = json.loads((out_dir / "failures.json").read_text(encoding="utf-8"))
        assert {f["error"]["error"] for f in failures} == {"FileNotFoundError"}

    def test_sweep_default_out_dir(
        self,
        triangles_file: Path,
        temp_dir: Path,
        monkeypatch: pytest.MonkeyPatch,
        capsys: pytest.CaptureFixture[str],
    ):
        """Without --out-dir the configured output directory is created and used."""
        out_dir = temp_dir / "results" / "nested"
        monkeypatch.setattr(settings, "output_dir", out_dir)

        assert run(["sweep", "--graphs", str(triangles_file), "--seeds", "1"]) == 0

        assert json.loads(capsys.readouterr().out)["out_dir"] == str(out_dir)
        assert (out_dir / "aggregate.csv").exists()


class TestErrors:
    """Library errors exit with code 1 and a JSON object on stderr."""

    def test_missing_graph(self, temp_dir: Path, capsys: pytest.CaptureFixture[str]):
        """A missing file is reported with its path."""
        missing = temp_dir / "missing.txt"
        assert run(["pipeline", "--graph", str(missing)]) == 1
        error = _error(capsys.readouterr().err)
        assert error["error"] == "FileNotFoundError"
        assert error["path"] == str(missing)

    def test_oracle_recovery_needs_original(
        self, triangles_file: Path, temp_dir: Path, capsys: pytest.CaptureFixture[str]
    ):
        """Oracle mode cannot run without the original graph."""
        code = run([
            "recover", "--graph", str(triangles_file), "--out-graph", str(temp_dir / "g2.txt"),
        ])
        assert code == 1
        assert _error(capsys.readouterr().err)["error"] == "ConfigError"

    def test_simdist_needs_a_graph_to_compare(
        self, triangles_file: Path, capsys: pytest.CaptureFixture[str]
    ):
        """simdist without --deceived or --recovered is a config error."""
        assert run(["simdist", "--graph", str(triangles_file)]) == 1
        assert _error(capsys.readouterr().err)["error"] == "ConfigError"

    def test_invalid_budget_fraction(self, triangles_file: Path, capsys: pytest.CaptureFixture[str]):
        """Config validation problems are listed."""
        assert run(["pipeline", "--graph", str(triangles_file), "--budget-frac", "2"]) == 1
        error = _error(capsys.readouterr().err)
        assert error["error"] == "ConfigError"
        assert any("budget_fraction" in problem for problem in error["problems"])

    def test_bad_seed_range(self, triangles_file: Path, capsys: pytest.CaptureFixture[str]):
        """Seeds must be integers or integer ranges."""
        assert run(["sweep", "--graphs", str(triangles_file), "--seeds", "a-b"]) == 1
        assert _error(capsys.readouterr().err)["error"] == "ConfigError"

    def test_unknown_target(self, triangles_file: Path, temp_dir: Path, capsys: pytest.CaptureFixture[str]):
        """Unresolvable targets are reported as such."""
        code = run([
            "deceive", "--graph", str(triangles_file), "--out-graph", str(temp_dir / "g1.txt"),
            "--target", "index:9",
        ])
        assert code == 1
        assert _error(capsys.readouterr().err)["error"] == "TargetResolutionError"

    def test_undecodable_graph(self, temp_dir: Path, capsys: pytest.CaptureFixture[str]):
        """A graph file with invalid UTF-8 is a format error, not a crash."""
        bad = temp_dir / "bad.txt"
        bad.write_bytes(b"0 1\n\xff\xfe 2\n")

        assert run(["detect", "--graph", str(bad)]) == 1

        error = _error(capsys.readouterr().err)
        assert error["error"] == "GraphFormatError"
        assert error["path"] == str(bad)

    def test_undecodable_partition(
        self, triangles_file: Path, temp_dir: Path, capsys: pytest.CaptureFixture[str]
    ):
        """A partition file with invalid UTF-8 is a partition error."""
        bad = temp_dir / "communities.txt"
        bad.write_bytes(b"0 1 2\n\xff\n")

        assert run(["perm", "--graph", str(triangles_file), "--partition", str(bad)]) == 1

        assert _error(capsys.readouterr().err)["error"] == "PartitionError"
