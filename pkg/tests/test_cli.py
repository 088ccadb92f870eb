import json

import pytest
import yaml

from decider_errors import InternalError
from immersion import cli
from immersion.cli import EXIT_INPUT_ERROR, EXIT_INTERNAL_ERROR, EXIT_NO, EXIT_YES, run
from problem_fixtures import ALL_FIXTURES, CLASSICAL, MODES


def path_of(name: str) -> str:
    return str(ALL_FIXTURES.by_name(name).full_path)


@pytest.mark.parametrize("fixture", list(ALL_FIXTURES), ids=lambda f: f.name)
def test_decide_exit_codes(fixture, capsys):
    assert run(["decide", str(fixture.full_path)]) == fixture.exit_code
    out, err = capsys.readouterr()
    if fixture.is_valid:
        assert out == f"{fixture.name}: {fixture.expected['dual-class']}\n"
    else:
        assert out == ""
        assert err.startswith("error: ") or "\nerror: " in err


@pytest.mark.parametrize("fixture", [*CLASSICAL, *MODES], ids=lambda f: f.name)
def test_paper_literal_flag(fixture, capsys):
    code = run(["decide", "--paper-literal-differential", str(fixture.full_path)])
    expected = fixture.expected["paper-literal"]
    assert code == (EXIT_YES if expected == "YES" else EXIT_NO)
    assert capsys.readouterr().out == f"{fixture.name}: {expected}\n"


def test_json_verdict(capsys):
    assert run(["decide", "--json", path_of("hp2_n11")]) == EXIT_NO
    document = json.loads(capsys.readouterr().out)
    assert document["problem"] == "hp2_n11"
    assert document["immersible"] is False
    assert document["obstructions"][0]["class"] == ["-3/1"]


def test_json_reports_mode_divergence(capsys):
    assert run(["decide", "--json", "--paper-literal-differential", path_of("mode_divergence")]) == EXIT_NO
    document = json.loads(capsys.readouterr().out)
    assert document["mode"] == "paper-literal"
    assert document["diverges_from_dual_class"] is True


def test_output_is_deterministic(capsys):
    outputs = []
    for _ in range(5):
        run(["decide", "--json", path_of("cp2_n5")])
        outputs.append(capsys.readouterr().out)
    assert len(set(outputs)) == 1


def test_explain(capsys):
    assert run(["explain", path_of("cp2_n5")]) == EXIT_YES
    out = capsys.readouterr().out
    assert "Problem:            cp2_n5" in out
    assert "gamma_1" in out and "gamma_2" in out


def test_check(capsys):
    assert run(["check", path_of("hp2_n13")]) == EXIT_YES
    assert capsys.readouterr().out == "hp2_n13: valid (m = 8, n = 13)\n"


def test_dump_model(capsys):
    assert run(["dump-model", "--m", "4", "--n", "5"]) == EXIT_YES
    document = yaml.safe_load(capsys.readouterr().out)
    assert [g["name"] for g in document["fiber_generators"]] == ["gamma_1", "gamma_2"]
    assert document["linear_through"] == 7

    assert run(["dump-model", "--json", "--m", "3", "--n", "6"]) == EXIT_YES
    document = json.loads(capsys.readouterr().out)
    assert document["fiber_differential"]["sigma"] == [{"coefficient": "1/1", "monomial": {"euler": 1}}]


def test_dump_model_out_of_scope(capsys):
    assert run(["dump-model", "--m", "4", "--n", "6"]) == EXIT_INPUT_ERROR
    assert "error:" in capsys.readouterr().err


def test_max_degree_flag(capsys):
    assert run(["decide", "--max-degree", "4", path_of("cp2_n5")]) == EXIT_NO
    assert run(["decide", "--max-degree", "9", path_of("cp2_n7")]) == EXIT_YES
    capsys.readouterr()
    assert run(["decide", "--max-degree", "0", path_of("cp2_n5")]) == EXIT_INPUT_ERROR
    assert "--max-degree" in capsys.readouterr().err


def test_max_degree_below_the_dimension_is_an_input_error(capsys):
    assert run(["decide", "--max-degree", "3", path_of("cp2_n5")]) == EXIT_INPUT_ERROR
    out, err = capsys.readouterr()
    assert out == ""
    assert "error: Degree cutoff 3 is below dim M = 4" in err


@pytest.mark.parametrize("content", [": : [", "dimension_m: 4\n", "- a\n- list\n"])
def test_unreadable_problem_files(tmp_path, capsys, content):
    path = tmp_path / "broken.yaml"
    path.write_text(content, encoding="utf-8")
    assert run(["decide", str(path)]) == EXIT_INPUT_ERROR
    err = capsys.readouterr().err
    assert "error: " in err
    # one line per diagnostic
    assert all(line.count("error: ") <= 1 for line in err.splitlines())


def test_missing_file(tmp_path, capsys):
    assert run(["decide", str(tmp_path / "nowhere.yaml")]) == EXIT_INPUT_ERROR
    assert "error:" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert run([]) == EXIT_INPUT_ERROR
    assert run(["frobnicate"]) == EXIT_INPUT_ERROR
    assert run(["--help"]) == EXIT_YES
    capsys.readouterr()


def test_internal_errors_have_their_own_exit_code(monkeypatch, capsys):
    def broken(*args, **kwargs):
        raise InternalError("witness failed re-validation")

    monkeypatch.setattr(cli, "decide_immersion", broken)
    assert run(["decide", path_of("cp2_n5")]) == EXIT_INTERNAL_ERROR
    assert "internal error: witness failed re-validation" in capsys.readouterr().err


def test_main_exits_with_the_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["check", path_of("cp2_n7")])
    assert exc.value.code == EXIT_YES
