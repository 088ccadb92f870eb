"""
Command-line surface of the decider.

    immersion-decider decide <file>      exit 0 = YES, 1 = NO, 2 = input error, 3 = internal error
    immersion-decider explain <file>     human-readable report
    immersion-decider dump-model --m M --n N
    immersion-decider check <file>       validation only

Results go to stdout; logs and diagnostics go to stderr.
"""

import argparse
import sys
from pathlib import Path
from typing import Callable

import yaml
from pydantic import ValidationError

from app_settings import DifferentialMode, get_app_settings
from decider_errors import InputError, InternalError
from definitions import STEP_BY_KEY
from decider_logging import DeciderLogContext, configure_logging, get_decider_logger
from cdga import dump_document
from lift_solver import relative_model_to_document
from mono_model import MonoModelSpec, build_mono_model
from .decider import decide_immersion
from .problem import load_problem
from .report import explain, render_verdict


EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


def _mode(args: argparse.Namespace) -> DifferentialMode:
    if args.paper_literal_differential:
        return DifferentialMode.PAPER_LITERAL
    return get_app_settings().decider.differential_mode


def _decide(args: argparse.Namespace) -> int:
    problem = load_problem(args.file, args.max_degree)
    verdict = decide_immersion(problem, _mode(args))
    sys.stdout.write(render_verdict(verdict, as_json=args.json))
    return EXIT_YES if verdict.immersible else EXIT_NO


def _explain(args: argparse.Namespace) -> int:
    problem = load_problem(args.file, args.max_degree)
    verdict = decide_immersion(problem, _mode(args))
    sys.stdout.write(explain(verdict))
    return EXIT_YES


def _dump_model(args: argparse.Namespace) -> int:
    model = build_mono_model(MonoModelSpec(args.m, args.n, _mode(args)))
    sys.stdout.write(dump_document(relative_model_to_document(model), as_json=args.json))
    return EXIT_YES


def _check(args: argparse.Namespace) -> int:
    problem = load_problem(args.file, args.max_degree)
    sys.stdout.write(f"{problem.name}: valid (m = {problem.m}, n = {problem.n})\n")
    return EXIT_YES


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "decide": _decide,
    "explain": _explain,
    "dump-model": _dump_model,
    "check": _check,
}


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="immersion-decider",
        description="Decide rationally whether a map of manifolds is homotopic to an immersion.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--paper-literal-differential",
        action="store_true",
        help="Use d(gamma_k) = beta_k - alpha_k / alpha_k instead of the dual classes.",
    )
    common.add_argument("--max-degree", type=int, default=None, help="Degree cutoff (default: m + 1).")
    common.add_argument("--json", action="store_true", help="Machine-readable output.")

    commands = parser.add_subparsers(dest="command", required=True)
    for name, text in (("decide", "print YES or NO, exit 0 / 1"),
                       ("explain", "print a report of every obstruction"),
                       ("check", "validate a problem file")):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument("file", type=Path)
    dump = commands.add_parser("dump-model", parents=[common], help="print the mono model")
    dump.add_argument("--m", type=int, required=True)
    dump.add_argument("--n", type=int, required=True)
    return parser.parse_args(argv)


def _one_line(exc: BaseException) -> str:
    return " ".join(str(exc).split())


def run(argv: list[str] | None = None) -> int:
    """Run one command and return its exit code; never raises for bad input."""
    configure_logging()
    try:
        args = _parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code else EXIT_YES

    context = DeciderLogContext(
        getattr(args, "file", None) and Path(args.file).stem, STEP_BY_KEY["APP_START"], _mode(args))
    log = get_decider_logger(context)
    log.debug(f"Running {args.command}")
    if args.max_degree is not None and args.max_degree < 1:
        sys.stderr.write(f"error: --max-degree must be positive, got {args.max_degree}\n")
        return EXIT_INPUT_ERROR

    try:
        code = COMMANDS[args.command](args)
    except (InputError, ValidationError, yaml.YAMLError, FileNotFoundError) as exc:
        sys.stderr.write(f"error: {_one_line(exc)}\n")
        code = EXIT_INPUT_ERROR
    except InternalError as exc:
        log.opt(exception=True).error("Internal consistency check failed")
        sys.stderr.write(f"internal error: {_one_line(exc)}\n")
        code = EXIT_INTERNAL_ERROR

    context.update_step(STEP_BY_KEY["APP_END"])
    get_decider_logger(context).debug(f"{args.command} finished with exit code {code}")
    return code


def main(argv: list[str] | None = None) -> None:
    raise SystemExit(run(argv))
