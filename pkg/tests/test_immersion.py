import dataclasses
from fractions import Fraction

import pytest
from pydantic import ValidationError

from app_settings import DifferentialMode, get_app_settings
from decider_errors import DegreeOneError, InputError, ScopeError
from exact_linalg import RationalMatrix
from cdga import GradedVector
from immersion import (ImmersionProblem, decide_immersion, explain, load_problem, parse_problem,
                       verdict_document)
from problem_fixtures import CLASSICAL, INVALID, MODES


def decide(fixture_name: str, mode: DifferentialMode = DifferentialMode.DUAL_CLASS, **kwargs):
    return decide_immersion(load_problem(_fixture(fixture_name).full_path), mode, **kwargs)


def _fixture(name: str):
    for group in (CLASSICAL, MODES, INVALID):
        try:
            return group.by_name(name)
        except KeyError:
            continue
    raise KeyError(name)


SPHERE_PROBLEM = """
name: sphere_in_r3
dimension_m: 2
dimension_n: 3
free_model:
  generators:
    - {name: x, degree: 2}
    - {name: y, degree: 3}
  differential:
    y: [{coefficient: "1/1", monomial: {x: 2}}]
euler_tangent: ["2/1"]
"""


# --- fixtures -------------------------------------------------------------------


@pytest.mark.parametrize("fixture", [*CLASSICAL, *MODES], ids=lambda f: f.name)
@pytest.mark.parametrize("mode", list(DifferentialMode), ids=lambda m: m.value)
def test_fixture_verdicts(fixture, mode):
    problem = load_problem(fixture.full_path)
    verdict = decide_immersion(problem, mode, compare_modes=False)
    assert verdict.immersible == (fixture.expected[mode.value] == "YES")


@pytest.mark.parametrize("fixture", list(INVALID), ids=lambda f: f.name)
def test_invalid_fixtures_are_rejected(fixture):
    with pytest.raises(InputError):
        load_problem(fixture.full_path)


def test_rejection_reasons():
    with pytest.raises(ScopeError, match="odd"):
        load_problem(_fixture("even_codim").full_path)
    with pytest.raises(DegreeOneError, match="simply connected"):
        load_problem(_fixture("h1_nonzero").full_path)


def test_problem_name_defaults_to_the_file_stem(tmp_path):
    text = _fixture("cp2_n5").text.replace("name: cp2_n5\n", "")
    path = tmp_path / "unnamed_cp2.yaml"
    path.write_text(text, encoding="utf-8")
    assert load_problem(path).name == "unnamed_cp2"


# --- obstructions ---------------------------------------------------------------


def test_complex_projective_plane_in_five_space():
    verdict = decide("cp2_n5")
    assert not verdict.immersible
    gamma_1, gamma_2 = verdict.obstructions
    assert (gamma_1.name, gamma_1.degree, gamma_1.basis) == ("gamma_1", 4, ("x2",))
    assert gamma_1.value == (Fraction(-3),)
    assert not gamma_1.exact
    assert gamma_1.witness is None
    assert gamma_2.above_cutoff
    assert verdict.cutoff == 5


def test_quaternionic_projective_plane_in_eleven_space():
    verdict = decide("hp2_n11")
    assert not verdict.immersible
    gamma_2 = verdict.obstructions[0]
    assert gamma_2.name == "gamma_2"
    assert gamma_2.value == (Fraction(-3),)


def test_three_manifold_obstructions_land_in_a_zero_group():
    verdict = decide("three_manifold_n4")
    assert verdict.immersible
    assert [(o.name, o.degree, o.value, o.above_cutoff) for o in verdict.obstructions] == [
        ("gamma_1", 4, (), False),
        ("sigma", 4, (), False),
    ]


def test_free_model_problem_with_an_exact_obstruction():
    problem = parse_problem(SPHERE_PROBLEM, max_degree=4)
    assert problem.cutoff == 4
    verdict = decide_immersion(problem)
    assert verdict.cutoff == 4
    assert verdict.immersible
    (gamma_1,) = verdict.obstructions
    # alpha_1 - euler_m^2 goes to -4x^2 = d(-4y)
    assert gamma_1.basis == ("x^2",)
    assert gamma_1.value == (Fraction(-4),)
    assert gamma_1.exact
    assert gamma_1.witness == (Fraction(-4),)


def test_free_model_problem_at_the_default_cutoff():
    verdict = decide_immersion(parse_problem(SPHERE_PROBLEM))
    assert verdict.immersible
    assert verdict.obstructions[0].above_cutoff


TALL_PROBLEM = """
name: tall_free_model
dimension_m: 2
dimension_n: 3
free_model:
  generators:
    - {name: x, degree: 2}
    - {name: y, degree: 5}
  differential:
    y: [{coefficient: "1/1", monomial: {x: 3}}]
euler_tangent: ["2/1"]
"""


def test_cutoff_below_the_dimension_is_refused():
    text = _fixture("cp2_n5").text
    with pytest.raises(InputError, match="below dim M = 4"):
        parse_problem(text, max_degree=3)
    with pytest.raises(InputError, match="below dim M = 4"):
        decide_immersion(parse_problem(text), max_degree=3)


def test_cutoff_at_the_dimension_still_sees_the_obstruction():
    verdict = decide_immersion(parse_problem(_fixture("cp2_n5").text, max_degree=4))
    assert not verdict.immersible
    assert verdict.cutoff == 4
    assert verdict.obstructions[0].value == (Fraction(-3),)


def test_configured_cutoff_also_bounds_validation(monkeypatch):
    # x^2 survives in degree 4 = m + 2; the default cutoff m + 1 never looks there
    assert parse_problem(TALL_PROBLEM).cutoff == 3
    monkeypatch.setenv("DECIDER__MAX_DEGREE", "4")
    get_app_settings.cache_clear()
    with pytest.raises(InputError, match="cohomology in degree 4"):
        parse_problem(TALL_PROBLEM)


def test_explicit_cutoff_revalidates_the_model():
    problem = parse_problem(TALL_PROBLEM)
    with pytest.raises(InputError, match="cohomology in degree 4"):
        decide_immersion(problem, max_degree=4)


# --- input errors ---------------------------------------------------------------


CP2_HEAD = """
dimension_m: 4
dimension_n: 5
cohomology:
  basis: {0: [one], 2: [x], 4: [x2]}
  products: [[x, x, ["1/1"]]]
"""


@pytest.mark.parametrize("tail, message", [
    ('tangent_pontrjagin: {4: ["1/1", "2/1"]}\neuler_tangent: ["3/1"]', "coordinates"),
    ('tangent_pontrjagin: {6: ["1/1"]}\neuler_tangent: ["3/1"]', "degrees 4"),
    ('tangent_pontrjagin: {4: ["3/1"]}\npullback_euler: ["1/1"]\neuler_tangent: ["3/1"]', "even n"),
])
def test_malformed_classes(tail, message):
    with pytest.raises(InputError, match=message):
        parse_problem(CP2_HEAD + tail)


def test_floats_are_refused():
    with pytest.raises(ValidationError):
        parse_problem(CP2_HEAD + 'tangent_pontrjagin: {4: [3.0]}\neuler_tangent: ["3/1"]')


def test_missing_class_below_the_dimension():
    problem = parse_problem(CP2_HEAD + 'tangent_pontrjagin: {4: ["3/1"]}\npullback_pontrjagin: {4: ["0/1"]}')
    with pytest.raises(InputError, match="euler_m"):
        decide_immersion(problem)


def test_unclosed_class():
    text = """
dimension_m: 5
dimension_n: 8
cohomology:
  basis: {0: [one], 4: [a], 5: [b]}
  differentials: {4: [["1/1"]]}
tangent_pontrjagin: {4: ["1/1"]}
"""
    with pytest.raises(InputError, match="not closed"):
        parse_problem(text)


def test_cohomology_above_the_dimension():
    with pytest.raises(InputError, match="degree 4"):
        parse_problem(CP2_HEAD.replace("dimension_m: 4\ndimension_n: 5", "dimension_m: 2\ndimension_n: 3"))


@pytest.mark.parametrize("text", [
    "dimension_m: 4\ndimension_n: 5\n",
    CP2_HEAD + "free_model: {generators: [{name: x, degree: 2}]}\n",
])
def test_exactly_one_model(text):
    with pytest.raises(ValidationError):
        parse_problem(text)


def test_document_must_be_a_mapping():
    with pytest.raises(InputError):
        parse_problem("- just\n- a list\n")


# --- invariances ----------------------------------------------------------------


def rebase(problem: ImmersionProblem, transforms: dict[int, RationalMatrix]) -> ImmersionProblem:
    """The same problem written in another basis of the cohomology."""
    inverses = {k: t.inverse() for k, t in transforms.items()}

    def move(vector: GradedVector | None) -> GradedVector | None:
        if vector is None or vector.degree not in inverses:
            return vector
        return GradedVector(vector.degree, inverses[vector.degree].apply(vector.coords))

    return dataclasses.replace(
        problem,
        model=problem.model.rebased(transforms),
        tangent_pontrjagin={j: move(c) for j, c in problem.tangent_pontrjagin.items()},
        pullback_pontrjagin={i: move(c) for i, c in problem.pullback_pontrjagin.items()},
        pullback_euler=move(problem.pullback_euler),
        euler_tangent=move(problem.euler_tangent),
    )


@pytest.mark.parametrize("name, transforms", [
    ("cp2_n5", {2: [[2]], 4: [[3]]}),
    ("cp2_n7", {2: [[-1]], 4: [["1/2"]]}),
    ("hp2_n11", {4: [[5]], 8: [[-2]]}),
    ("mode_divergence", {4: [[3]], 8: [[7]]}),
])
@pytest.mark.parametrize("mode", list(DifferentialMode), ids=lambda m: m.value)
def test_verdict_does_not_depend_on_the_basis(name, transforms, mode):
    problem = load_problem(_fixture(name).full_path)
    moved = rebase(problem, {k: RationalMatrix.from_rows(rows) for k, rows in transforms.items()})
    first = decide_immersion(problem, mode, compare_modes=False)
    second = decide_immersion(moved, mode, compare_modes=False)
    assert first.immersible == second.immersible
    assert [o.exact for o in first.obstructions] == [o.exact for o in second.obstructions]


def test_more_room_never_hurts():
    text = _fixture("cp2_n5").text
    answers = []
    for n in (5, 7, 9, 11):
        problem = parse_problem(text.replace("dimension_n: 5", f"dimension_n: {n}"))
        answers.append(decide_immersion(problem).immersible)
    assert answers == [False, True, True, True]


# --- differential modes ---------------------------------------------------------


def test_paper_literal_mode_reports_divergence():
    verdict = decide("mode_divergence", DifferentialMode.PAPER_LITERAL)
    assert not verdict.immersible
    assert verdict.dual_class_immersible
    assert verdict.diverges_from_dual_class
    assert verdict_document(verdict)["diverges_from_dual_class"] is True
    assert "DIVERGES" in explain(verdict)


def test_paper_literal_mode_reports_agreement():
    verdict = decide("mode_agreement", DifferentialMode.PAPER_LITERAL)
    assert verdict.diverges_from_dual_class is False
    assert "agrees" in explain(verdict)


def test_dual_class_mode_has_no_comparison():
    verdict = decide("mode_divergence")
    assert verdict.immersible
    assert verdict.diverges_from_dual_class is None
    assert "diverges_from_dual_class" not in verdict_document(verdict)


def test_mode_and_cutoff_come_from_settings(monkeypatch):
    monkeypatch.setenv("DECIDER__DIFFERENTIAL_MODE", "paper-literal")
    monkeypatch.setenv("DECIDER__MAX_DEGREE", "6")
    get_app_settings.cache_clear()
    verdict = decide_immersion(load_problem(_fixture("cp2_n5").full_path))
    assert verdict.mode is DifferentialMode.PAPER_LITERAL
    assert verdict.cutoff == 6
    assert not verdict.immersible

    monkeypatch.setenv("DECIDER__MAX_DEGREE", "3")
    get_app_settings.cache_clear()
    with pytest.raises(InputError, match="below dim M"):
        load_problem(_fixture("cp2_n5").full_path)


# --- reports --------------------------------------------------------------------


def test_verdict_document():
    document = verdict_document(decide("cp2_n5"))
    assert list(document) == ["version", "problem", "dimension_m", "dimension_n", "immersible",
                              "mode", "cutoff", "obstructions"]
    assert document["immersible"] is False
    assert document["mode"] == "dual-class"
    gamma_1, gamma_2 = document["obstructions"]
    assert gamma_1 == {"name": "gamma_1", "degree": 4, "class": ["-3/1"], "exact": False,
                       "witness": None, "above_cutoff": False}
    assert gamma_2["above_cutoff"] is True
    assert gamma_2["class"] == []


def test_explain_lists_every_obstruction():
    text = explain(decide("cp2_n5"))
    assert "NO, not immersible" in text
    assert "class -3/1*x2: NOT exact, obstruction" in text
    assert "above the degree cutoff, vacuously exact" in text
    assert "YES, immersible" in explain(decide("cp2_n7"))
