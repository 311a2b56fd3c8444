import json

import pytest
from click.testing import CliRunner

import quiver_atlas.cli as cli_mod
from quiver_atlas.cli import main
from quiver_atlas.correspondence import CorrespondenceRow
from quiver_atlas.explore import Classification, MutationClassReport
from quiver_atlas.tiling import SchlafliSymbol, tiling_report


@pytest.fixture
def runner():
    return CliRunner()


def test_classify_d4(runner, tmp_path):
    result = runner.invoke(
        main,
        ["classify", "--p", "3", "--q", "3", "--format", "csv",
         "--cache-dir", str(tmp_path)],
    )
    assert result.exit_code == 0, result.output
    assert "finite,D4,6" in result.output
    assert "tetrahedron" in result.output


def test_classify_degenerate_cell(runner):
    result = runner.invoke(
        main, ["classify", "--p", "2", "--q", "2", "--format", "csv", "--no-cache"]
    )
    assert result.exit_code == 0
    assert "A1" in result.output
    assert "hosohedron" in result.output


def test_classify_inconclusive_exit_code(runner):
    result = runner.invoke(
        main,
        ["classify", "--p", "3", "--q", "5", "--cap", "10", "--no-cache"],
    )
    assert result.exit_code == 3


def test_classify_mismatch_exit_code(runner, monkeypatch):
    real_report = MutationClassReport(
        classification=Classification.FINITE_MUTATION_TYPE,
        class_size=1,
        max_weight_seen=2,
        infinite_witness=None,
        type_name=None,
        explored=1,
    )
    fake_row = CorrespondenceRow(
        p=3,
        q=3,
        r=1,
        cluster=real_report,
        tiling=tiling_report(SchlafliSymbol(3, 3)),
        match=False,
    )
    monkeypatch.setattr(cli_mod, "classify_cell", lambda *a, **kw: fake_row)
    result = runner.invoke(
        main, ["classify", "--p", "3", "--q", "3", "--no-cache"]
    )
    assert result.exit_code == 2


def test_quiver_json_3_3(runner):
    result = runner.invoke(main, ["quiver", "--p", "3", "--q", "3"])
    assert result.exit_code == 0
    rows = json.loads(result.output)
    assert len(rows) == 4
    nonzero_pairs = sum(
        1 for i in range(4) for j in range(i + 1, 4) if rows[i][j] != 0
    )
    assert nonzero_pairs == 5


def test_quiver_dot(runner):
    result = runner.invoke(
        main, ["quiver", "--p", "2", "--q", "4", "--format", "dot"]
    )
    assert result.exit_code == 0
    assert "digraph" in result.output
    assert result.output.count("->") == 2  # 3-vertex path
    result33 = runner.invoke(
        main, ["quiver", "--p", "3", "--q", "3", "--format", "dot"]
    )
    assert result33.output.count("->") == 5


def test_quiver_output_is_stable(runner):
    a = runner.invoke(main, ["quiver", "--p", "4", "--q", "4"])
    b = runner.invoke(main, ["quiver", "--p", "4", "--q", "4"])
    assert a.output == b.output


def test_table_small_grid(runner, tmp_path):
    result = runner.invoke(
        main,
        ["table", "--pmax", "3", "--qmax", "3", "--workers", "1",
         "--format", "csv", "--cache-dir", str(tmp_path)],
    )
    assert result.exit_code == 0, result.output
    lines = [l for l in result.output.splitlines() if l and "," in l]
    assert len(lines) == 1 + 4  # header + 4 cells


def test_table_markdown_orientation(runner, tmp_path):
    result = runner.invoke(
        main,
        ["table", "--pmax", "3", "--qmax", "4", "--workers", "1",
         "--cache-dir", str(tmp_path)],
    )
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].startswith("| p\\q | 2 | 3 | 4 |")
    assert lines[2].startswith("| 2 |")


def test_table_json_schema(runner, tmp_path):
    result = runner.invoke(
        main,
        ["table", "--pmax", "2", "--qmax", "2", "--workers", "1",
         "--format", "json", "--cache-dir", str(tmp_path)],
    )
    doc = json.loads(result.stdout)
    assert "mismatches: 0" in result.stderr
    assert doc["schema_version"] == 1
    assert len(doc["rows"]) == 1
    assert doc["rows"][0]["cluster"]["type_name"] == "A1"
    assert doc["rows"][0]["match"] is True


def test_explore_cache_round_trip(runner, tmp_path):
    args = ["explore", "--p", "3", "--q", "3", "--cache-dir", str(tmp_path)]
    first = runner.invoke(main, args)
    assert first.exit_code == 0, first.output
    assert list(tmp_path.glob("*.json")), "cache file expected"
    second = runner.invoke(main, args)
    assert second.exit_code == 0
    assert first.output == second.output


def test_corrupt_cache_recomputes(runner, tmp_path):
    args = ["explore", "--p", "3", "--q", "3", "--cache-dir", str(tmp_path)]
    first = runner.invoke(main, args)
    for f in tmp_path.glob("*.json"):
        f.write_text("{ not json")
    second = runner.invoke(main, args)
    assert second.exit_code == 0
    assert first.output == second.output


def test_explore_red_cell_has_witness(runner):
    result = runner.invoke(
        main, ["explore", "--p", "5", "--q", "4", "--no-cache"]
    )
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["classification"] == "infinite-mutation"
    assert report["infinite_witness"]


def test_selftest(runner):
    result = runner.invoke(main, ["selftest", "--seed", "1", "--cases", "40"])
    assert result.exit_code == 0, result.output


def test_cache_env_var(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("ATLAS_CACHE", str(tmp_path / "envcache"))
    result = runner.invoke(main, ["explore", "--p", "2", "--q", "3"])
    assert result.exit_code == 0
    assert list((tmp_path / "envcache").glob("*.json"))
