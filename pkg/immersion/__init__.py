from .problem import (ImmersionProblem, ProblemDocument, parse_problem, load_problem, problem_from_document,
                      resolve_cutoff, with_cutoff)
from .phi import assemble_phi
from .decider import Obstruction, Verdict, decide_immersion
from .report import explain, verdict_document, render_verdict
__all__ = [
    "ImmersionProblem",
    "ProblemDocument",
    "parse_problem",
    "load_problem",
    "problem_from_document",
    "resolve_cutoff",
    "with_cutoff",
    "assemble_phi",
    "Obstruction",
    "Verdict",
    "decide_immersion",
    "explain",
    "verdict_document",
    "render_verdict",
]
