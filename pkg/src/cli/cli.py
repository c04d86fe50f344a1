"""Command-line front end: load monoids from files, run checks, print reports.

Reports go to standard output and are byte-stable; logs go to standard
error. The exit code is 0 when every verdict is as asserted, 1 when one is
not, 2 on malformed input or usage, and 3 when some verdict is Unknown.
"""
import argparse
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Sequence

from src.cli.parser import parseFile, parseSystemFile
from src.cones.example import ContradictionError, run_example314
from src.core.backend import MonoidBackend
from src.core.decision import Decision
from src.core.equations import (
    SearchSpaceExceeded,
    refinement_matrix_decision,
    solve_system_decision,
)
from src.core.predicates import (
    for_all,
    is_antisymmetric,
    is_cancellative,
    is_conical,
    is_p_torsion_free,
    is_p_unperforated,
    is_quasi_divisible,
    is_refinement,
    is_separative,
    is_simple,
    is_stably_finite,
)
from src.core.pset import PSet
from src.core.report import EXIT_FAILED, EXIT_UNKNOWN, EXIT_USAGE, Report
from src.extensions.division import division_assertions, division_extend
from src.extensions.errors import UndecidableBaseError
from src.extensions.wsd import solve_wsd
from src.finite.congruence import (
    antisymmetric_quotient,
    cancellative_quotient,
    p_torsion_quotient,
    separative_quotient,
)
from src.finite.monoid import FiniteMonoid
from src.presentation.constructions import refinement_step
from src.presentation.rewriting import IncompleteRewriteSystemError
from src.utils.config import getSettings, loadSettings, useSettings
from src.utils.logger import LEVELS, Logger, getLogger, setLogger
from src.verification.sweep import run_sweeps, sweep_lambda_wsd

PREDICATES: Dict[str, Callable[..., Decision]] = {
    "conical": is_conical,
    "cancellative": is_cancellative,
    "separative": is_separative,
    "stably-finite": is_stably_finite,
    "antisymmetric": is_antisymmetric,
    "simple": is_simple,
    "refinement": is_refinement,
    "quasi-divisible": is_quasi_divisible,
    "p-torsion-free": is_p_torsion_free,
    "p-unperforated": is_p_unperforated,
}
PSET_PREDICATES = ("p-torsion-free", "p-unperforated")

QUOTIENTS = {
    "cancellative": (cancellative_quotient, is_cancellative),
    "separative": (separative_quotient, is_separative),
    "torsion": (p_torsion_quotient, is_p_torsion_free),
    "antisymmetric": (antisymmetric_quotient, is_antisymmetric),
}


class UsageError(ValueError):
    pass


def formatWitness(M: MonoidBackend, check: str, witness: Any) -> Optional[str]:
    """Counterexamples of `check`, written with M's element syntax."""
    if witness is None:
        return None
    if check == "quasi-divisible":
        return M.format(witness)
    if check in PSET_PREDICATES:
        p, *elements = witness
        return f"p={p} ({', '.join(M.format(x) for x in elements)})"
    return f"({', '.join(M.format(x) for x in witness)})"


def _pset(args) -> PSet:
    if args.pset is None:
        raise UsageError("--pset is required for this check")
    return PSet.parse(args.pset)


def _timed(function: Callable, *args, **kwargs):
    started = time.perf_counter()
    result = function(*args, **kwargs)
    return result, time.perf_counter() - started


def _assertionDecision(assertions: Dict[str, Decision], bound: int) -> Decision:
    return for_all(assertions.values(), bound)


def run_check(args) -> Report:
    M = parseFile(args.file).monoid(args.name)
    predicate = PREDICATES[args.predicate]
    extra = (_pset(args),) if args.predicate in PSET_PREDICATES else ()
    decision, elapsed = _timed(predicate, M, *extra, bound=args.bound)
    report = Report(f"check {args.name}")
    certificate = (
        formatWitness(M, args.predicate, decision.witness) if decision.isFalse else None
    )
    report.add(args.predicate, args.name, decision, certificate=certificate, elapsed=elapsed)
    return report


def run_refine(args) -> Report:
    M = parseFile(args.file).monoid(args.name)
    decision, elapsed = _timed(
        refinement_matrix_decision, M, args.a0, args.a1, args.b0, args.b1, bound=args.bound
    )
    report = Report(f"refine {args.name}")
    certificate = decision.witness.format(M) if decision.isTrue else None
    subject = f"{args.name}:{args.a0}+{args.a1}={args.b0}+{args.b1}"
    report.add("refinement-matrix", subject, decision, certificate=certificate, elapsed=elapsed)
    return report


def run_solve(args) -> Report:
    M = parseFile(args.file).monoid(args.name)
    system = parseSystemFile(args.system, M)
    decision, elapsed = _timed(solve_system_decision, M, system, bound=args.bound)
    report = Report(f"solve {args.name}")
    certificate = None
    if decision.isTrue:
        certificate = ", ".join(
            f"{name} = {M.format(x)}"
            for name, x in zip(system.unknownNames, decision.witness)
        )
    report.add("solve", args.name, decision, certificate=certificate, elapsed=elapsed)
    return report


def run_quotient(args) -> Report:
    M = parseFile(args.file).monoid(args.name)
    if not isinstance(M, FiniteMonoid):
        raise UsageError(f"Quotients need a finite monoid, {args.name} is {M.qualname}")
    build, predicate = QUOTIENTS[args.kind]
    extra = (_pset(args),) if args.kind == "torsion" else ()
    (Q, congruence), elapsed = _timed(build, M, *extra)
    report = Report(f"quotient {args.name}")
    report.add(
        f"{args.kind}-quotient",
        args.name,
        Decision.yes(),
        certificate=congruence.format(),
        details=Q.formatTable().splitlines(),
        elapsed=elapsed,
    )
    report.add(args.kind, f"{args.name}/~", predicate(Q, *extra))
    report.add("conical", f"{args.name}/~", is_conical(Q))
    return report


def run_step(args) -> Report:
    M = parseFile(args.file).monoid(args.name)
    bound = getSettings().ball_bound if args.bound is None else args.bound
    report = Report(f"step {args.name}")
    if args.construction == "refinement":
        step, elapsed = _timed(refinement_step, M, *args.elements, bound=bound)
        report.add(
            "refinement-step",
            args.name,
            _assertionDecision(step.assertions, bound),
            details=step.summary(),
            elapsed=elapsed,
        )
    elif args.construction == "division":
        a, p = args.elements
        started = time.perf_counter()
        N = division_extend(M, a, int(p))
        assertions = division_assertions(N, bound)
        report.add(
            "division-step",
            args.name,
            _assertionDecision(assertions, bound),
            details=[f"extension {N.name}"]
            + [f"assert {name} {decision}" for name, decision in assertions.items()],
            elapsed=time.perf_counter() - started,
        )
    else:
        solution, elapsed = _timed(solve_wsd, M, *args.elements, bound=bound)
        report.add(
            "wsd-step",
            args.name,
            _assertionDecision(solution.assertions, bound),
            details=solution.summary(),
            elapsed=elapsed,
        )
    return report


def run_example(args) -> Report:
    return run_example314(args.max_n, args.max_k, args.claim2_n, args.max_m)


def run_lambda(args) -> Report:
    return sweep_lambda_wsd()


def run_corpus(args) -> Report:
    return run_sweeps()


_STEP_ARITY = {"refinement": 4, "division": 2, "wsd": 4}


def _parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="cone_workbench",
        description="Check properties of commutative monoids and run extension steps.",
    )
    parser.add_argument("--config", default=None, help="YAML settings file")
    parser.add_argument("--log-level", choices=list(LEVELS), default=None)
    parser.add_argument(
        "--timings", action="store_true", help="Print elapsed time per record"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="Decide a predicate on a monoid")
    check.add_argument("file")
    check.add_argument("name")
    check.add_argument("predicate", choices=list(PREDICATES))
    check.add_argument("--bound", type=int, default=None)
    check.add_argument("--pset", default=None, help="Generators of P, e.g. 2,3")
    check.set_defaults(run=run_check)

    refine = commands.add_parser("refine", help="Find a refinement matrix")
    refine.add_argument("file")
    refine.add_argument("name")
    for element in ("a0", "a1", "b0", "b1"):
        refine.add_argument(element)
    refine.add_argument("--bound", type=int, default=None)
    refine.set_defaults(run=run_refine)

    solve = commands.add_parser("solve", help="Solve an equation system")
    solve.add_argument("file")
    solve.add_argument("name")
    solve.add_argument("system")
    solve.add_argument("--bound", type=int, default=None)
    solve.set_defaults(run=run_solve)

    quotient = commands.add_parser("quotient", help="Print a least quotient")
    quotient.add_argument("file")
    quotient.add_argument("name")
    quotient.add_argument("kind", choices=list(QUOTIENTS))
    quotient.add_argument("--pset", default=None)
    quotient.set_defaults(run=run_quotient)

    step = commands.add_parser("step", help="Run one extension step")
    step.add_argument("file")
    step.add_argument("name")
    step.add_argument("construction", choices=list(_STEP_ARITY))
    step.add_argument("elements", nargs="+")
    step.add_argument("--bound", type=int, default=None)
    step.set_defaults(run=run_step)

    example = commands.add_parser("example314", help="Verify the leveled cone example")
    example.add_argument("--max-n", type=int, default=6)
    example.add_argument("--max-k", type=int, default=6)
    example.add_argument("--claim2-n", type=int, default=4)
    example.add_argument("--max-m", type=int, default=8)
    example.set_defaults(run=run_example)

    lambda_wsd = commands.add_parser("lambda-wsd", help="Lower-set WSD counterexample")
    lambda_wsd.set_defaults(run=run_lambda)

    corpus = commands.add_parser("corpus", help="Run the built-in sweeps")
    corpus.set_defaults(run=run_corpus)

    args = parser.parse_args(argv)
    if args.command == "step" and len(args.elements) != _STEP_ARITY[args.construction]:
        parser.error(
            f"step {args.construction} takes {_STEP_ARITY[args.construction]} arguments"
        )
    return args


def _configure(args) -> None:
    settings = loadSettings(args.config) if args.config else getSettings()
    useSettings(settings)
    level = args.log_level or settings.log_level
    setLogger(Logger(filename=settings.log_file, level=level))


def main(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    args = _parse_args(argv)
    stdout = stdout or sys.stdout
    logger = None
    try:
        _configure(args)
        logger = getLogger()
        report = args.run(args)
    except ContradictionError as e:
        getLogger().log(f"Contradiction: {e}", main, level="error")
        return EXIT_FAILED
    except (SearchSpaceExceeded, UndecidableBaseError, IncompleteRewriteSystemError) as e:
        getLogger().log(f"Undecided: {e}", main, level="error")
        return EXIT_UNKNOWN
    except (ValueError, TypeError, OSError) as e:
        getLogger().log(f"{e.__class__.__name__}: {e}", main, level="error")
        return EXIT_USAGE
    finally:
        if logger is not None:
            logger.writeBufferToFile()

    stdout.write(report.serialize(timings=args.timings))
    return report.exitCode


def entrypoint(argv: Optional[List[str]] = None) -> None:
    sys.exit(main(argv))
