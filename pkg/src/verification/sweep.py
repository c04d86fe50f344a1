"""Sweeps over the corpus and the fixed examples, each returning a Report.

`run_sweeps` runs them all; it is what the `corpus` command prints.
"""
import random
import time
from itertools import product
from math import ceil
from typing import Callable, Iterator, List, Optional, Tuple

from src.cones.example import run_example314
from src.cones.lowerset import LowerSetMonoid, lambda_wsd_failure
from src.core.backend import MonoidBackend
from src.core.backends import NaturalNumbers
from src.core.decision import Decision
from src.core.predicates import (
    asymp,
    for_all,
    is_antisymmetric,
    is_cancellative,
    is_conical,
    is_p_torsion_free,
    is_quasi_divisible,
    is_refinement,
    is_separative,
    is_simple,
    is_stably_finite,
    leq_alg,
    quasi_divisible_witness,
)
from src.core.pset import PSet
from src.core.report import Report
from src.extensions.division import division_assertions, division_extend
from src.extensions.wsd import confluence_sweep, solve_wsd, wsd_extend
from src.finite.congruence import (
    all_congruences,
    antisymmetric_quotient,
    cancellative_quotient,
    p_torsion_quotient,
    quotient,
    separative_quotient,
)
from src.finite.constructions import truncated_naturals
from src.finite.corpus import corpus_monoid, corpus_monoids
from src.finite.decomposition import (
    RefinementViolation,
    decompose_multiple,
    meet_in_class,
    subcone_at,
)
from src.finite.monoid import FiniteMonoid
from src.presentation.constructions import r_plus, refinement_step
from src.presentation.words import Presentation
from src.utils.config import getSettings
from src.utils.decorators import log_operation
from src.utils.logger import getLogger

WSD_BASES: List[Tuple[Callable[[], MonoidBackend], Tuple]] = [
    (lambda: NaturalNumbers(), (1, 1, 2, 0)),
    (lambda: corpus_monoid("threechain"), ("1", "1", "1", "inf")),
    (lambda: corpus_monoid("fourchain"), ("1", "1", "1", "2")),
    (lambda: corpus_monoid("semilattice2"), ("a", "b", "a", "b")),
    (lambda: corpus_monoid("boolean"), ("1", "1", "1", "1")),
]

TORSION_SETS = (PSet([2]), PSet([3]), PSet([2, 3]))


@log_operation()
def sweep_membership_oracle(top: int = 6) -> Report:
    """The x0 + x3 = x1 + x2 test against all combinations of the four generators."""
    R = r_plus()
    started = time.perf_counter()
    reachable = set()
    for coefficients in product(range(top + 1), repeat=4):
        v = R.image(coefficients)
        if max(v) <= top:
            reachable.add(v)

    def instances() -> Iterator[Decision]:
        for v in product(range(top + 1), repeat=4):
            member = R.contains(v)
            combination = R.combination(v)
            if member != (v in reachable) or member != (combination is not None):
                yield Decision.no(v)
            elif combination is not None and R.image(combination) != v:
                yield Decision.no(v)

    report = Report("membership-oracle")
    report.add(
        "rplus-oracle",
        f"[0,{top}]^4",
        for_all(instances(), top),
        details=[f"{len(reachable)} members of {(top + 1) ** 4} vectors"],
        elapsed=time.perf_counter() - started,
    )
    return report


@log_operation()
def sweep_refinement_step(bound: int = 5) -> Report:
    """One refinement step on the free monoid on t, for t + t = t + t."""
    P = Presentation(("t",), name="free1")
    started = time.perf_counter()
    step = refinement_step(P, "1*t", "1*t", "1*t", "1*t", bound=bound)
    elapsed = time.perf_counter() - started
    report = Report("refinement-step")
    for name, decision in step.assertions.items():
        report.add(f"refinement-step.{name}", P.name, decision, elapsed=elapsed)
    report.add(
        "completion",
        P.name,
        Decision.of(step.extension.isDecidable),
        details=step.extension.system.format(),
    )
    return report


@log_operation()
def sweep_division(
    tops: Tuple[int, ...] = (2, 3, 4), primes: Tuple[int, ...] = (2, 3)
) -> Report:
    """Adjoin a p-th part of every nonzero a in the truncations of Z+."""
    report = Report("division")
    for top in tops:
        M = truncated_naturals(top, "threechain" if top == 2 else f"trunc{top}")
        for a in M.enumerate():
            if M.isZero(a):
                continue
            for p in primes:
                started = time.perf_counter()
                N = division_extend(M, a, p)
                assertions = division_assertions(N)
                report.add(
                    "division-step",
                    N.name,
                    for_all(assertions.values(), M.size),
                    details=[f"assert {k} {d}" for k, d in assertions.items()],
                    elapsed=time.perf_counter() - started,
                )
    return report


@log_operation()
def sweep_wsd_confluence(
    peaks: Optional[int] = None, seed: Optional[int] = None
) -> Report:
    """Local confluence on random peaks, and the WSD witnesses, per base.

    `peaks` (the configured sample count by default) is the total number
    of genuine peaks, split evenly over the bases.
    """
    settings = getSettings()
    peaks = settings.confluence_samples if peaks is None else peaks
    seed = settings.random_seed if seed is None else seed
    per_base = ceil(peaks / len(WSD_BASES))
    rng = random.Random(seed)
    report = Report("wsd")
    total = 0
    for build, instance in WSD_BASES:
        M = build()
        started = time.perf_counter()
        N = wsd_extend(M, *instance)
        confluent = confluence_sweep(N, per_base, rng)
        details = []
        if confluent.isTrue:
            found, draws = confluent.witness
            total += found
            details.append(f"{found} peaks in {draws} draws")
        report.add(
            "local-confluence",
            N.name,
            confluent,
            details=details,
            elapsed=time.perf_counter() - started,
        )
        solution = solve_wsd(M, *instance)
        report.add(
            "wsd-witnesses",
            N.name,
            for_all(solution.assertions.values(), N.bound),
            details=solution.summary(),
        )
    report.add(
        "confluence-peaks",
        "total",
        Decision.of(total >= peaks, total),
        details=[f"{total} of {peaks} peaks"],
    )
    return report


def _least(M: FiniteMonoid, build, holds) -> Decision:
    Q, least = build(M)
    if not holds(Q):
        return Decision.no(least.format())
    for congruence in all_congruences(M):
        if holds(quotient(M, congruence)) and not least <= congruence:
            return Decision.no(congruence.format())
    return Decision.yes()


@log_operation()
def sweep_quotients(max_size: int = 6) -> Report:
    """Least quotients against every congruence, and conicality of quotients of cones."""
    P = PSet([2, 3])
    kinds = {
        "cancellative": (cancellative_quotient, lambda Q: is_cancellative(Q).isTrue),
        "separative": (separative_quotient, lambda Q: is_separative(Q).isTrue),
        "torsion": (
            lambda M: p_torsion_quotient(M, P),
            lambda Q: is_p_torsion_free(Q, P).isTrue,
        ),
        "antisymmetric": (antisymmetric_quotient, lambda Q: is_antisymmetric(Q).isTrue),
    }
    report = Report("quotients")
    for M in corpus_monoids(max_size=max_size):
        for kind, (build, holds) in kinds.items():
            started = time.perf_counter()
            decision = _least(M, build, holds)
            report.add(
                f"least-{kind}", M.name, decision, elapsed=time.perf_counter() - started
            )

        if not is_conical(M).isTrue:
            continue
        preserving = ["separative", "torsion"]
        # the class of 0 stays trivial only when x + z = z forces x = 0
        if is_stably_finite(M).isTrue:
            preserving.append("cancellative")
        for kind in preserving:
            Q, _ = kinds[kind][0](M)
            report.add(f"conical-{kind}-quotient", M.name, is_conical(Q))
    return report


def _decompositions(M: FiniteMonoid, max_n: int) -> Decision:
    for n in range(1, max_n + 1):
        for a, b, c in product(M.enumerate(), repeat=3):
            if M.add(a, b) != M.multiple(n, c):
                continue
            try:
                parts = decompose_multiple(M, a, b, n, c)
            except RefinementViolation:
                return Decision.no((a, b, n, c))
            if (
                M.sum(parts) != c
                or M.sum(M.multiple(k, x) for k, x in enumerate(parts)) != a
                or M.sum(M.multiple(n - k, x) for k, x in enumerate(parts)) != b
            ):
                return Decision.no((a, b, n, c))
    return Decision.yes()


def _meets(M: FiniteMonoid) -> Decision:
    for a, b in product(M.enumerate(), repeat=2):
        if not asymp(M, a, b).isTrue:
            continue
        try:
            c = meet_in_class(M, a, b)
        except RefinementViolation:
            return Decision.no((a, b))
        if not (M.exactLeq(c, a)[0] and M.exactLeq(c, b)[0]):
            return Decision.no((a, b))
    return Decision.yes()


def _simpleSubcones(M: FiniteMonoid) -> Decision:
    for a in M.enumerate():
        if not is_simple(subcone_at(M, a)).isTrue:
            return Decision.no(M.format(a))
    return Decision.yes()


def _refinementSubcones(M: FiniteMonoid) -> Decision:
    for a in M.enumerate():
        if not is_refinement(subcone_at(M, a)).isTrue:
            return Decision.no(M.format(a))
    return Decision.yes()


@log_operation()
def sweep_decompositions(max_size: int = 5, max_n: int = 3) -> Report:
    """Decompositions of multiples, meets in classes and simple subcones.

    Subcones of separative quasi-divisible cones are also checked to be
    refinement monoids.
    """
    report = Report("decompositions")
    for M in corpus_monoids(max_size=max_size):
        if not (is_conical(M).isTrue and is_refinement(M).isTrue):
            continue
        report.add("decompose-multiple", M.name, _decompositions(M, max_n))
        report.add("meet-in-class", M.name, _meets(M))
        report.add("simple-subcones", M.name, _simpleSubcones(M))
        if is_separative(M).isTrue and is_quasi_divisible(M).isTrue:
            report.add("refinement-subcones", M.name, _refinementSubcones(M))
    return report


@log_operation()
def sweep_lambda_wsd() -> Report:
    started = time.perf_counter()
    result = lambda_wsd_failure()
    elapsed = time.perf_counter() - started
    a0, a1, b, c = result.instance
    subject = LowerSetMonoid().name
    report = Report("lambda-wsd")
    report.add(
        "instance-equality",
        subject,
        result.equality,
        certificate=f"({a0}, {a1}, {b}, {c})",
    )
    report.add(
        "wsd",
        subject,
        result.decision,
        expected=False,
        details=result.trace,
        elapsed=elapsed,
    )
    return report


def _quasi_divisible_bounds(M: FiniteMonoid) -> Decision:
    # x = 2u + 3v gives 2(u + v) <= x <= 3(u + v)
    for x in M.enumerate():
        u, v = quasi_divisible_witness(M, x).witness
        y = M.add(u, v)
        if not (
            leq_alg(M, M.multiple(2, y), x).isTrue
            and leq_alg(M, x, M.multiple(3, y)).isTrue
        ):
            return Decision.no(M.format(x))
    return Decision.yes()


@log_operation()
def sweep_implications() -> Report:
    """Torsion-free monoids are separative; quasi-divisible ones sit between 2y and 3y."""
    report = Report("implications")
    for M in corpus_monoids():
        for P in TORSION_SETS:
            if is_p_torsion_free(M, P).isTrue:
                report.add("torsion-free-separative", f"{M.name}/{P}", is_separative(M))
        if is_quasi_divisible(M).isTrue:
            report.add("quasi-divisible-bounds", M.name, _quasi_divisible_bounds(M))
    return report


SWEEPS = (
    sweep_membership_oracle,
    sweep_refinement_step,
    sweep_division,
    sweep_wsd_confluence,
    sweep_quotients,
    sweep_decompositions,
    run_example314,
    sweep_lambda_wsd,
    sweep_implications,
)


@log_operation()
def run_sweeps() -> Report:
    report = Report("corpus")
    for sweep in SWEEPS:
        part = sweep()
        getLogger().debug(
            f"{part.title}: {len(part.records)} records, {len(part.failures)} failed",
            run_sweeps,
        )
        report.extend(part)
    return report
