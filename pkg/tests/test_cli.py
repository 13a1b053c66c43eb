from __future__ import annotations

import orjson
import pytest
from click.testing import CliRunner

from crossnest.cli import cli, run
from crossnest.tools import paths as paths_tool
from crossnest.tools import walks as walks_tool

GOLDEN_PHI = "∅,∅,1,1,11,11,11,1,2,1,11,1,1,∅,∅"


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def invoke(runner: CliRunner, *args: str):
    return runner.invoke(cli, list(args))


def test_phi_golden(runner):
    result = invoke(runner, "bijection", "phi", "--input", "1457-26-3")
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == GOLDEN_PHI


def test_psi_back_to_the_partition(runner):
    result = invoke(runner, "bijection", "psi", "--input", GOLDEN_PHI)
    assert result.exit_code == 0
    assert result.stdout.strip() == "1457-26-3"


def test_phi_json_document(runner):
    result = invoke(runner, "bijection", "phibar", "--input", "1457-26-3", "--format", "json")
    doc = orjson.loads(result.stdout)
    assert doc["direction"] == "phibar"
    assert doc["walk"]["kind"] == "hesitating"
    assert doc["walk"]["text"] == "∅,∅,1,1,11,21,11,21,2,21,11,1,1,∅,∅"
    assert doc["partition"]["blocks"] == [[1, 4, 5, 7], [2, 6], [3]]


def test_oscillate_permutation(runner):
    result = invoke(runner, "bijection", "oscillate", "--permutation", "--input", "231")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "∅,1,11,21,2,1,∅"
    assert "matching: 14-26-35" in lines


def test_stats_json(runner):
    result = invoke(runner, "stats", "--partition", "123", "--enhanced", "--format", "json")
    doc = orjson.loads(result.stdout)
    assert (doc["cr"], doc["ne"], doc["enhanced_cr"], doc["enhanced_ne"]) == (1, 1, 2, 1)


def test_stats_arc_diagrams(runner):
    args = ("stats", "--partition", "1457-26-3", "--enhanced", "--format", "json")
    doc = orjson.loads(invoke(runner, *args).stdout)
    assert doc["arcs"] == {"n": 7, "arcs": [[1, 4], [2, 6], [4, 5], [5, 7]], "enhanced": False}
    assert doc["enhanced_arcs"]["arcs"] == [[1, 4], [2, 6], [3, 3], [4, 5], [5, 7]]
    assert doc["enhanced_arcs"]["enhanced"] is True
    text = invoke(runner, "stats", "--partition", "1457-26-3").stdout
    assert "arcs: (1,4) (2,6) (4,5) (5,7)" in text


def test_stats_oracle_and_blocks(runner):
    result = invoke(runner, "stats", "--partition", "15-246-37", "--oracle", "--blocks")
    assert result.exit_code == 0
    assert "oracle: agrees" in result.stdout
    assert "klazar=3" in result.stdout


def test_empty_table_json(runner):
    result = invoke(runner, "table", "--n", "0", "--format", "json")
    doc = orjson.loads(result.stdout)
    assert doc["cells"] == [{"cr": 0, "ne": 0, "count": "1"}]
    assert doc["total"] == "1"


def test_filtered_table_csv(runner):
    result = invoke(
        runner, "table", "--n", "4", "--min", "1,2", "--max", "3,4", "--format", "csv"
    )
    assert result.exit_code == 0
    assert result.stdout == "cr,ne,count\n1,2,1\n2,1,1\n"


def test_charpoly_json(runner):
    result = invoke(runner, "charpoly", "--k", "2", "--j", "2", "--format", "json")
    doc = orjson.loads(result.stdout)
    assert doc["p"]["coeffs"] == ["1", "-6", "5"]
    assert doc["dim"] == 6


def test_walks_count(runner):
    result = invoke(runner, "walks", "--kind", "oscillating", "--length", "8")
    assert result.stdout.strip() == "105"


@pytest.mark.parametrize(
    "module, args, tool",
    [
        (walks_tool, ("walks", "--kind", "oscillating", "--length", "4"), "walks"),
        (paths_tool, ("paths", "dyck2", "--matching", "14-23"), "paths.dyck2"),
    ],
)
def test_commands_report_their_timing(runner, monkeypatch, module, args, tool):
    seen = []
    monkeypatch.setattr(module.log, "info", lambda msg, *a, **kw: seen.append((msg, kw)))
    assert invoke(runner, *args).exit_code == 0
    extras = [kw["extra"] for msg, kw in seen if msg == "tool.response"]
    assert [e["tool"] for e in extras] == [tool]
    assert extras[0]["took_ms"] >= 0


def test_gkj_writes_the_cache(runner, cache_path):
    result = invoke(runner, "gkj", "--k", "2", "--j", "2", "--m", "3", "--series")
    assert result.exit_code == 0
    entries = orjson.loads(cache_path.read_bytes())["entries"]
    assert "gkj:k=2,j=2,m=3" in entries


def test_no_cache_flag(runner, cache_path):
    invoke(runner, "--no-cache", "gkj", "--k", "2", "--j", "2", "--m", "3")
    assert not cache_path.exists()


def test_paths_dyck2(runner):
    result = invoke(runner, "paths", "dyck2", "--matching", "14-23", "--format", "json")
    doc = orjson.loads(result.stdout)
    assert doc["mode"] == "dyck2"
    assert doc["paths"] == [{"steps": "UUDD", "heights": [0, 1, 2, 1, 0]}]


def test_dyck2_needs_exactly_one_input(runner):
    assert invoke(runner, "paths", "dyck2").exit_code == 2


def test_malformed_partition_is_a_domain_error(runner):
    result = invoke(runner, "stats", "--partition", "12-2")
    assert result.exit_code == 1
    assert "Error" in result.stderr


def test_min_without_max_is_a_usage_error(runner):
    assert invoke(runner, "table", "--n", "4", "--min", "1").exit_code == 2


def test_odd_vacillating_length_is_a_usage_error(runner):
    assert invoke(runner, "walks", "--kind", "vacillating", "--length", "3").exit_code == 2


@pytest.mark.parametrize(
    "args",
    [
        ("chamber", "--k", "0", "--length", "2"),
        ("chamber", "--k", "2", "--length", "3"),
        ("chamber", "--k", "2", "--length", "-2", "--stepping", "vacillating"),
        ("strip", "--k", "-1", "--m", "2"),
        ("strip", "--k", "2", "--m", "-1"),
        ("ncn", "--k", "0", "--n", "3"),
        ("ncn", "--l", "2", "--n", "-1"),
    ],
)
def test_bad_count_arguments_are_usage_errors(runner, args):
    assert invoke(runner, *args).exit_code == 2


def test_chamber_counts(runner):
    assert invoke(runner, "chamber", "--k", "2", "--length", "4").stdout.strip() == "2"
    result = invoke(runner, "chamber", "--k", "2", "--length", "3", "--stepping", "vacillating")
    assert result.exit_code == 0


def test_strip_writes_the_cache(runner, cache_path):
    result = invoke(runner, "strip", "--k", "2", "--m", "2")
    assert result.stdout.strip() == "2"
    entries = orjson.loads(cache_path.read_bytes())["entries"]
    assert "strip:k=2,m=2" in entries


def test_run_returns_exit_codes():
    assert run(["table", "--object", "matchings", "--n", "3"]) == 1
    assert run(["table", "--n", "3"]) == 0


def test_verify_golden_quick(runner):
    result = invoke(runner, "verify", "--suite", "golden", "--quick")
    assert result.exit_code == 0, result.stdout
    assert "PASS golden.phi" in result.stdout.splitlines()
    assert result.stdout.rstrip().endswith("0 failed")


def test_output_is_deterministic(runner):
    args = ("table", "--n", "5", "--format", "json")
    assert invoke(runner, *args).stdout == invoke(runner, *args).stdout


def test_timestamps_flag(runner):
    result = invoke(runner, "--timestamps", "charpoly", "--k", "1", "--j", "1", "--format", "json")
    assert "generated_at" in orjson.loads(result.stdout)
