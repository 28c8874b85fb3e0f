"""
Tests for the CLI interface using Click's CliRunner.
"""

from __future__ import annotations

import json
from pathlib import Path
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from cli import EXIT_FALSE, EXIT_FORMAT, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, main

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def fixture(name: str) -> str:
    return str(FIXTURES / name)


def payload(output: str) -> dict:
    """The JSON object in the output, ignoring any log lines around it."""
    return json.loads(output[output.index("{"):output.rindex("}") + 1])


@pytest.fixture
def runner():
    return CliRunner()


class TestCLIHelp:
    def test_main_help(self, runner):
        result = runner.invoke(main, ["--help"])
        assert result.exit_code == EXIT_OK
        assert "Braid workbench" in result.output
        for command in ("check", "present", "nf", "eq", "poseq", "express", "family", "classify"):
            assert command in result.output

    def test_version(self, runner):
        result = runner.invoke(main, ["--version"])
        assert result.exit_code == EXIT_OK
        assert "0.1.0" in result.output

    def test_unknown_command(self, runner):
        result = runner.invoke(main, ["draw"])
        assert result.exit_code == EXIT_USAGE

    def test_missing_file(self, runner):
        result = runner.invoke(main, ["check", fixture("missing.graph")])
        assert result.exit_code == EXIT_USAGE


class TestCheck:
    def test_linearly_spanned(self, runner):
        result = runner.invoke(main, ["check", fixture("star.graph")])
        assert result.exit_code == EXIT_OK
        assert "linearly spanned" in result.output

    def test_pseudo_face(self, runner):
        result = runner.invoke(main, ["check", fixture("pseudo_face.graph")])
        assert result.exit_code == EXIT_FALSE
        assert "vertex 2" in result.output

    def test_json_report(self, runner):
        result = runner.invoke(main, ["check", fixture("pseudo_face.graph"), "--report", "json"])
        data = payload(result.output)
        assert data["linearly_spanned"] is False
        assert data["witness"]["enclosed_vertex"] == 2

    def test_format_error(self, runner, tmp_path):
        bad = tmp_path / "bad.graph"
        bad.write_text("n 3\nchord 1 2 sideways\n")
        result = runner.invoke(main, ["check", str(bad)])
        assert result.exit_code == EXIT_FORMAT
        assert "line 2" in result.output

    def test_invalid_utf8(self, runner, tmp_path):
        bad = tmp_path / "latin1.graph"
        bad.write_bytes(b"n 3\nchord 1 2 above # caf\xe9\n")
        result = runner.invoke(main, ["check", str(bad)])
        assert result.exit_code == EXIT_FORMAT
        assert "UTF-8" in result.output

    def test_invalid_utf8_presentation(self, runner, tmp_path):
        bad = tmp_path / "latin1.pres"
        bad.write_bytes(b"n 3\ngen 1-2a \xff\n")
        result = runner.invoke(main, ["poseq", "1-2a", "1-2a", "--presentation", str(bad)])
        assert result.exit_code == EXIT_FORMAT


class TestPresent:
    def test_generated(self, runner):
        result = runner.invoke(main, ["present", fixture("artin4.graph")])
        assert result.exit_code == EXIT_OK
        assert "gen 3-4a" in result.output
        assert sum(1 for line in result.output.splitlines() if line.startswith("rel ")) == 3

    def test_artin(self, runner):
        result = runner.invoke(main, ["present", "--artin", "3"])
        assert result.exit_code == EXIT_OK
        assert "rel 1-2a 2-3a 1-2a = 2-3a 1-2a 2-3a" in result.output

    def test_json(self, runner):
        result = runner.invoke(main, ["present", "--band", "4", "--report", "json"])
        assert result.exit_code == EXIT_OK
        assert payload(result.output)["relation_count"] == 10

    def test_needs_one_source(self, runner):
        assert runner.invoke(main, ["present"]).exit_code == EXIT_USAGE
        result = runner.invoke(main, ["present", fixture("artin4.graph"), "--artin", "4"])
        assert result.exit_code == EXIT_USAGE

    def test_not_linearly_spanned(self, runner):
        result = runner.invoke(main, ["present", fixture("pseudo_face.graph")])
        assert result.exit_code == EXIT_FALSE
        assert "pseudo face" in result.output


class TestNormalFormAndEquality:
    def test_nf(self, runner):
        result = runner.invoke(main, ["nf", "s1 s2 s1", "--strands", "3"])
        assert result.exit_code == EXIT_OK
        assert "D^1" in result.output

    def test_nf_json(self, runner):
        result = runner.invoke(main, ["nf", "s1'", "-n", "3", "--report", "json"])
        data = payload(result.output)
        assert data["infimum"] == -1
        assert data["factors"] == [[2, 3, 1]]

    def test_nf_bad_token(self, runner):
        result = runner.invoke(main, ["nf", "x1", "-n", "3"])
        assert result.exit_code == EXIT_FORMAT

    def test_eq_true(self, runner):
        result = runner.invoke(main, ["eq", "s1 s2 s1", "s2 s1 s2", "-n", "3"])
        assert result.exit_code == EXIT_OK
        assert "equal" in result.output

    def test_eq_false(self, runner):
        result = runner.invoke(main, ["eq", "s1 s2", "s2 s1", "-n", "3"])
        assert result.exit_code == EXIT_FALSE
        assert "not equal" in result.output

    def test_strands_required(self, runner):
        assert runner.invoke(main, ["eq", "s1", "s1"]).exit_code == EXIT_USAGE

    def test_single_strand_rejected(self, runner):
        assert runner.invoke(main, ["nf", "", "-n", "1"]).exit_code == EXIT_USAGE


class TestPosEq:
    def test_equivalent(self, runner):
        result = runner.invoke(main, ["poseq", "1-2a 2-3a 1-2a", "2-3a 1-2a 2-3a", "--artin", "3"])
        assert result.exit_code == EXIT_OK
        assert "equivalent" in result.output

    def test_not_equivalent(self, runner):
        result = runner.invoke(main, ["poseq", "1-2a 2-3a", "2-3a 1-2a", "--artin", "3"])
        assert result.exit_code == EXIT_FALSE
        assert "not_equivalent" in result.output

    def test_inconclusive(self, runner):
        result = runner.invoke(
            main,
            ["poseq", "1-2a 2-3a 1-2a 3-4a 2-3a 1-2a", "3-4a 2-3a 3-4a 1-2a 2-3a 3-4a", "--artin", "4", "--cap", "1"],
        )
        assert result.exit_code == EXIT_INCONCLUSIVE

    def test_presentation_file(self, runner):
        result = runner.invoke(
            main,
            ["poseq", "1-2a 2-3a 1-2a", "2-3a 1-2a 2-3a", "--presentation", fixture("artin3.pres"), "--report", "json"],
        )
        assert result.exit_code == EXIT_OK
        data = payload(result.output)
        assert data["status"] == "equivalent"
        assert len(data["trace"]) == 1

    def test_generated_from_graph(self, runner):
        result = runner.invoke(main, ["poseq", "1-2a 2-3a 1-2a", "2-3a 1-2a 2-3a", "--graph", fixture("triangle.graph")])
        assert result.exit_code == EXIT_OK

    def test_unknown_generator(self, runner):
        result = runner.invoke(main, ["poseq", "1-3a", "1-3a", "--artin", "3"])
        assert result.exit_code == EXIT_FORMAT

    def test_needs_one_source(self, runner):
        assert runner.invoke(main, ["poseq", "1-2a", "1-2a"]).exit_code == EXIT_USAGE


class TestExpress:
    def test_star(self, runner):
        result = runner.invoke(main, ["express", fixture("star.graph"), "--index", "3"])
        assert result.exit_code == EXIT_OK
        assert "s3 = 3-4a" in result.output

    def test_json(self, runner):
        result = runner.invoke(main, ["express", fixture("star.graph"), "-i", "1", "--report", "json"])
        assert result.exit_code == EXIT_OK
        data = payload(result.output)
        assert data["index"] == 1
        assert len(data["conjugator"]) >= 1

    def test_index_out_of_range(self, runner):
        result = runner.invoke(main, ["express", fixture("star.graph"), "--index", "4"])
        assert result.exit_code == EXIT_USAGE


class TestFamily:
    def test_star_fan(self, runner):
        result = runner.invoke(main, ["family", "StarFan", "--k", "2"])
        assert result.exit_code == EXIT_OK
        assert "W  = a1 a2 a3 a3 a1" in result.output
        assert "not_equivalent" in result.output
        assert "length lemma: holds" in result.output

    def test_polygon_json(self, runner):
        result = runner.invoke(
            main, ["family", "MGon", "--m", "5", "--k", "1", "--skip-poseq", "--skip-lemma", "--report", "json"]
        )
        assert result.exit_code == EXIT_OK
        data = payload(result.output)
        assert data["group_equal"] is True
        assert data["instance"]["family"] == "MGon(5)"
        assert data["non_equivalence"] is None

    def test_sweep_runs_up_to_k_max(self, runner):
        from config import config

        with patch.object(config, "k_max", 2):
            result = runner.invoke(
                main, ["family", "StarFan", "--sweep", "--skip-poseq", "--skip-lemma", "--report", "json"]
            )
        assert result.exit_code == EXIT_OK
        data = payload(result.output)
        assert data["k_max"] == 2
        assert [r["instance"]["k"] for r in data["reports"]] == [1, 2]

    def test_sweep_text(self, runner):
        from config import config

        with patch.object(config, "k_max", 3):
            result = runner.invoke(main, ["family", "Rectangle", "--sweep", "--skip-poseq", "--skip-lemma"])
        assert result.exit_code == EXIT_OK
        for k in (1, 2, 3):
            assert f"Rectangle k={k}" in result.output

    def test_unknown_family(self, runner):
        result = runner.invoke(main, ["family", "Hexagon"])
        assert result.exit_code == EXIT_USAGE

    def test_polygon_needs_m(self, runner):
        result = runner.invoke(main, ["family", "MGon", "--skip-poseq", "--skip-lemma"])
        assert result.exit_code == EXIT_USAGE


class TestClassify:
    def test_artin(self, runner):
        result = runner.invoke(main, ["classify", fixture("artin4.graph")])
        assert result.exit_code == EXIT_OK
        assert "has_embedding(artin)" in result.output

    def test_star(self, runner):
        result = runner.invoke(main, ["classify", fixture("star.graph"), "--report", "json"])
        assert result.exit_code == EXIT_FALSE
        assert payload(result.output)["kind"] == "no_embedding"

    def test_inner_complete(self, runner):
        result = runner.invoke(main, ["classify", fixture("k4.json")])
        assert result.exit_code == EXIT_OK
        assert "inner_complete" in result.output
