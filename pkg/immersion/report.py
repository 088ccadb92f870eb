from typing import Any, Sequence
from fractions import Fraction

from app_settings import DifferentialMode, get_app_settings
from definitions import STEP_BY_KEY
from decider_logging import log_pipeline_step
from exact_linalg import format_rational
from cdga import dump_document
from .decider import Obstruction, Verdict


def _vector_text(vector: Sequence[Fraction] | None) -> list[str] | None:
    return None if vector is None else [format_rational(v) for v in vector]


def _combination(vector: Sequence[Fraction], basis: Sequence[str]) -> str:
    """`c1*b1 + c2*b2` with zero terms dropped; "0" when nothing is left."""
    terms = [f"{format_rational(c)}*{label}" for c, label in zip(vector, basis) if c != 0]
    return " + ".join(terms) if terms else "0"


def verdict_document(verdict: Verdict) -> dict[str, Any]:
    """Machine-readable verdict; rationals as "p/q" strings, keys in a fixed order."""
    document: dict[str, Any] = {
        "version": get_app_settings().decider.output_version,
        "problem": verdict.problem_name,
        "dimension_m": verdict.m,
        "dimension_n": verdict.n,
        "immersible": verdict.immersible,
        "mode": verdict.mode.value,
        "cutoff": verdict.cutoff,
        "obstructions": [
            {
                "name": row.name,
                "degree": row.degree,
                "class": _vector_text(row.value),
                "exact": row.exact,
                "witness": _vector_text(row.witness),
                "above_cutoff": row.above_cutoff,
            }
            for row in verdict.obstructions
        ],
    }
    if verdict.mode is DifferentialMode.PAPER_LITERAL and verdict.dual_class_immersible is not None:
        document["diverges_from_dual_class"] = verdict.diverges_from_dual_class
    return document


def render_verdict(verdict: Verdict, as_json: bool = False) -> str:
    if as_json:
        return dump_document(verdict_document(verdict), as_json=True)
    return f"{verdict.problem_name}: {'YES' if verdict.immersible else 'NO'}\n"


def _row(row: Obstruction) -> str:
    head = f"  {row.name:<10} degree {row.degree:<4}"
    if row.above_cutoff:
        return f"{head} above the degree cutoff, vacuously exact"
    value = _combination(row.value, row.basis)
    if row.exact:
        return f"{head} class {value}: exact"
    return f"{head} class {value}: NOT exact, obstruction"


@log_pipeline_step(STEP_BY_KEY["EXPLAIN"])
def explain(verdict: Verdict) -> str:
    """Human-readable report of a verdict, one row per fibre generator."""
    lines = [
        f"Problem:            {verdict.problem_name}",
        f"Dimensions:         m = {verdict.m}, n = {verdict.n}",
        f"Differential mode:  {verdict.mode.value}",
        f"Degree cutoff:      {verdict.cutoff}",
        f"Verdict:            {'YES, immersible' if verdict.immersible else 'NO, not immersible'}",
    ]
    if verdict.diverges_from_dual_class is not None:
        flag = "DIVERGES" if verdict.diverges_from_dual_class else "agrees"
        other = "YES" if verdict.dual_class_immersible else "NO"
        lines.append(f"Dual-class answer:  {other} ({flag})")
    if verdict.diagnostic:
        lines.append(f"Reason:             {verdict.diagnostic}")
    lines.append("")
    if not verdict.obstructions:
        lines.append("No obstructions: the fibre model has no generators.")
    else:
        lines.append("Obstructions:")
        lines.extend(_row(row) for row in verdict.obstructions)
    return "\n".join(lines) + "\n"
