import json

from typer.testing import CliRunner

from liebasis_lib import __version__
from liebasis_lib.cli.main import app

runner = CliRunner()


def test_version():
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_operators_listing():
    result = runner.invoke(app, ["operators", "A", "4"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "1: α1"
    assert lines[4] == "5: α1 + α2"
    assert lines[7] == "8: α1 + α2 + α3"
    assert len(lines) == 10


def test_operators_json():
    result = runner.invoke(app, ["operators", "G", "2", "--format", "json"])
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["operators"][-1] == {"index": 6, "root": [3, 2]}


def test_basis_string_json():
    result = runner.invoke(app, ["basis-string", "A", "2", "--weight", "1,1", "--format", "json"])
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["dimension"] == 8
    assert document["order"] == "neglex"
    assert len(document["monomials"]) == 8


def test_basis_text_output():
    result = runner.invoke(app, ["basis", "A", "2", "--weight", "1,1", "--sequence", "[[1,0],[1,1],[0,1]]",
                                 "--order", "neglex"])
    assert result.exit_code == 0
    assert "Dimension:" in result.output
    assert "[1, 1, 1]" in result.output


def test_json_output_is_deterministic():
    args = ["basis-fflv", "B", "2", "--weight", "1,1", "--format", "json"]
    first = runner.invoke(app, args)
    second = runner.invoke(app, args)
    assert first.exit_code == 0
    assert first.output == second.output


def test_presets_accept_a_word():
    result = runner.invoke(app, ["basis-lusztig", "A", "3", "--weight", "1,0,1", "--word", "gt", "-f", "json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["dimension"] == 15


def test_kodaira_sl2():
    result = runner.invoke(app, ["kodaira", "A", "1", "--weight", "1", "--degree", "3", "--sequence", "1",
                                 "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["counts"] == [2, 0, 0]


def test_kodaira_text_counts():
    result = runner.invoke(app, ["kodaira", "A", "1", "-w", "1", "-d", "3", "--preset", "string"])
    assert result.exit_code == 0
    assert "counts: 2 0 0" in result.output


def test_kodaira_degree_zero_is_a_usage_error():
    result = runner.invoke(app, ["kodaira", "A", "1", "--weight", "1", "--degree", "0", "--sequence", "1"])
    assert result.exit_code == 1


def test_kodaira_needs_one_sequence_source():
    result = runner.invoke(app, ["kodaira", "A", "1", "--weight", "1", "--degree", "2"])
    assert result.exit_code == 1


def test_census_sl3_json():
    result = runner.invoke(app, ["census", "A", "2", "--format", "json"])
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["classes"] == 2
    assert document["weight"] == [2, 2]


def test_census_refuses_rank_five():
    result = runner.invoke(app, ["census", "A", "5"])
    assert result.exit_code == 2


def test_invalid_inputs_exit_with_one():
    assert runner.invoke(app, ["operators", "D", "3"]).exit_code == 1
    assert runner.invoke(app, ["basis-fflv", "A", "2", "--weight", "1,x"]).exit_code == 1
    assert runner.invoke(app, ["basis-fflv", "A", "2", "--weight", "1,-1"]).exit_code == 1
    assert runner.invoke(app, ["basis", "A", "2", "-w", "1,1", "-s", "1,9"]).exit_code == 1
    assert runner.invoke(app, ["basis", "A", "2", "-w", "1,1", "-s", "1,2", "--order", "bogus"]).exit_code == 1
    assert runner.invoke(app, ["operators", "A", "2", "--format", "yaml"]).exit_code == 1


def test_budget_exit_code():
    result = runner.invoke(app, ["basis-fflv", "A", "2", "--weight", "1,1", "--budget", "1"])
    assert result.exit_code == 2


def test_not_birational_exit_code():
    result = runner.invoke(app, ["basis", "A", "2", "--weight", "1,1", "--sequence", "1,1"])
    assert result.exit_code == 3


def test_early_exit_gives_the_same_basis():
    args = ["basis-string", "B", "2", "--weight", "2,1", "--format", "json"]
    full = runner.invoke(app, args)
    early = runner.invoke(app, args + ["--early-exit"])
    assert early.exit_code == 0
    assert json.loads(early.output)["monomials"] == json.loads(full.output)["monomials"]


def test_census_refusal_quotes_the_word_count():
    result = runner.invoke(app, ["census", "A", "5", "--weight", "2,2,2,2,2"])
    assert result.exit_code == 2
    assert "292864" in result.output


def test_click_usage_errors_exit_with_one():
    # presets build their own sequence
    result = runner.invoke(app, ["basis-string", "A", "2", "--weight", "1,1", "--sequence", "1,2,1"])
    assert result.exit_code == 1
    result = runner.invoke(app, ["kodaira", "A", "1", "--weight", "1", "--sequence", "1"])
    assert result.exit_code == 1


def test_text_output_sections_in_order():
    result = runner.invoke(app, ["basis-fflv", "A", "2", "--weight", "1,1"])
    assert result.exit_code == 0
    output = result.output
    assert output.index("Dimension:") < output.index("degree 0 (1):") < output.index("Minkowski generators")


def test_threads_option():
    result = runner.invoke(app, ["kodaira", "A", "1", "--weight", "1", "--degree", "3", "--sequence", "1",
                                 "--threads", "2", "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["counts"] == [2, 0, 0]
    result = runner.invoke(app, ["basis-pbw", "B", "2", "--weight", "1,1", "-t", "2", "-f", "json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["dimension"] == 16
    assert runner.invoke(app, ["basis-pbw", "B", "2", "--weight", "1,1", "--threads", "0"]).exit_code == 1
