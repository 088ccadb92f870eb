import pytest
from pydantic import ValidationError

from app_settings import DeciderSettings, DifferentialMode, get_app_settings
from decider_logging import DeciderLogContext, get_decider_logger, log_pipeline_step, logger
from definitions import PIPELINE_STEPS, STEP_BY_KEY, get_phase_of_step, iter_steps_in_phase


def test_pipeline_steps_are_ordered():
    assert PIPELINE_STEPS == ["PARSE_PROBLEM", "BUILD_MODEL", "ASSEMBLE_PHI", "DECIDE_LIFT", "DECIDE_IMMERSION"]
    assert get_phase_of_step(STEP_BY_KEY["EXPLAIN"]).key == "REPORT"
    assert {s.key for s in iter_steps_in_phase("APPLICATION")} == {"APP_START", "APP_END"}


def test_settings_validation(monkeypatch):
    with pytest.raises(ValidationError):
        DeciderSettings(max_degree=0)
    monkeypatch.setenv("DECIDER__MAX_DEGREE", "6")
    get_app_settings.cache_clear()
    assert get_app_settings().decider.max_degree == 6
    assert get_app_settings().decider.differential_mode is DifferentialMode.DUAL_CLASS


def test_log_context_binds_step_and_mode():
    context = DeciderLogContext("cp2_n5", STEP_BY_KEY["DECIDE_LIFT"], DifferentialMode.PAPER_LITERAL)
    kwargs = context.to_bind_kwargs()
    assert kwargs["problem_name"] == "cp2_n5"
    assert kwargs["pipeline_step"] == "pipeline.lift.decide"
    assert kwargs["pipeline_phase"] == "Pipeline"
    assert kwargs["differential_mode"] == "paper-literal"
    assert DeciderLogContext().to_bind_kwargs()["pipeline_step"] == "-"


def test_unbound_logger_has_placeholders():
    records = []
    logger.add(records.append, format="{extra[problem_name]}|{extra[pipeline_step]}|{message}")
    get_decider_logger().info("hello")
    assert records == ["-|-|hello\n"]


def test_step_decorator_logs_and_reraises():
    records = []
    logger.add(records.append, level="DEBUG", format="{extra[pipeline_step]} {message}")
    step = STEP_BY_KEY["PARSE_PROBLEM"]

    @log_pipeline_step(step)
    def parse(fail: bool) -> str:
        if fail:
            raise ValueError("bad document")
        return "ok"

    assert parse(False) == "ok"
    with pytest.raises(ValueError, match="bad document"):
        parse(True)
    assert records[0].startswith("pipeline.problem.parse Starting Parse Problem")
    assert records[1].startswith("pipeline.problem.parse Completed Parse Problem")
    assert records[3].startswith("pipeline.problem.parse Parse Problem failed after")
