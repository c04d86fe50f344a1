"""The monoid M of (k/2)(9/2)^n, k in <2, 7>, and the interval d_0 <= d_1 <= ...

M sits in Q+, so its elements are written Sum_l (k_l/2)(9/2)^l with k_l in
A = <2, 7>. Everything here is exact; a failed check raises, since it would
contradict a proved statement.
"""
import time
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.cones.rational import RationalCone, cone_membership
from src.core.decision import Decision
from src.core.report import Report
from src.utils.decorators import log_operation
from src.utils.io import formatRational
from src.utils.logger import getLogger

A_GENERATORS = (2, 7)
# <2, 7> misses exactly these
A_GAPS = (1, 3, 5)
RATIO = Fraction(9, 2)


class ContradictionError(RuntimeError):
    """A check came out against what it verifies."""


def d(n: int) -> Fraction:
    return RATIO**n


def in_A(k: int) -> bool:
    return k >= 0 and k not in A_GAPS


def example314_monoid(n_max: int) -> RationalCone:
    """M truncated to the generators of levels n <= n_max.

    Any element of M below d_{n_max + 1} only uses those levels.
    """
    generators = [
        (Fraction(k, 2) * d(n),) for n in range(n_max + 1) for k in A_GENERATORS
    ]
    return RationalCone(generators, f"M{n_max}")


def top_level(x: Fraction) -> int:
    """The largest n with d_n <= x, or 0."""
    n = 0
    while d(n + 1) <= x:
        n += 1
    return n


def leveled_membership(x: Fraction) -> Decision:
    """Decide x in M by choosing k_l in A from the top level down.

    Terms of level <= n lie in 2^(-n-1) Z+, which fixes the parity of k_n;
    k_n (9/2)^n / 2 <= x bounds it. The witness of True maps each level to
    its k_l; the witness of False is the number of states exhausted.
    """
    x = Fraction(x)
    if x < 0:
        return Decision.no(0)
    failed = set()

    def search(n: int, r: Fraction) -> Optional[Dict[int, int]]:
        if r == 0:
            return {}
        if n < 0 or (n, r) in failed:
            return None
        scaled = r * 2 ** (n + 1)
        if scaled.denominator != 1:
            failed.add((n, r))
            return None
        scaled, term = scaled.numerator, 9**n
        if n == 0:
            if in_A(scaled):
                return {0: scaled}
            failed.add((n, r))
            return None
        for k in range(scaled // term, -1, -1):
            if (scaled - k * term) % 2 or not in_A(k):
                continue
            rest = search(n - 1, r - Fraction(k * term, 2 ** (n + 1)))
            if rest is not None:
                if k:
                    rest[n] = k
                return rest
        failed.add((n, r))
        return None

    levels = search(top_level(x), x)
    if levels is None:
        return Decision.no(len(failed))
    if level_sum(levels) != x:
        raise ContradictionError(
            f"{_formatLevels(levels)} does not add up to {formatRational(x)}"
        )
    return Decision.yes(dict(sorted(levels.items())))


def level_sum(levels: Dict[int, int]) -> Fraction:
    return sum((Fraction(k, 2) * d(n) for n, k in levels.items()), Fraction(0))


def _formatLevels(levels: Dict[int, int]) -> str:
    terms = [f"({k}/2)(9/2)^{n}" for n, k in levels.items()]
    return " + ".join(terms) if terms else "0"


def _certify(
    report: Report, check: str, subject: str, value: Fraction, level: int
) -> None:
    C = example314_monoid(level)
    started = time.perf_counter()
    decision = cone_membership(C, value)
    elapsed = time.perf_counter() - started
    if decision.isUnknown:
        report.add(check, subject, decision, elapsed=elapsed)
        return
    if not decision.isTrue:
        raise ContradictionError(f"{check}: {subject} = {formatRational(value)} is not in {C.name}")
    if C.combine(decision.witness) != (value,):
        raise ContradictionError(f"{check}: certificate for {subject} does not add up")
    report.add(
        check,
        subject,
        decision,
        certificate=C.formatCombination(decision.witness),
        elapsed=elapsed,
    )


@log_operation()
def verify_claim1(n_max: int) -> Report:
    """d_n, d_{n+1} - d_n and 2d_{n+1} - 4d_n lie in M for n <= n_max."""
    report = Report("claim1")
    for n in range(n_max + 1):
        values: List[Tuple[str, Fraction]] = [
            (f"d{n}", d(n)),
            (f"d{n + 1}-d{n}", d(n + 1) - d(n)),
            (f"2d{n + 1}-4d{n}", 2 * d(n + 1) - 4 * d(n)),
        ]
        for subject, value in values:
            _certify(report, "claim1", subject, value, n)
        getLogger().debug(f"claim1 holds at level {n}", verify_claim1)
    return report


@log_operation()
def verify_claim2(k_max: int, n_max: int) -> Report:
    """2d_{n+k-1} - 2^k d_n lies in M for 1 <= k <= k_max and n <= n_max."""
    report = Report("claim2")
    for k in range(1, k_max + 1):
        for n in range(n_max + 1):
            value = 2 * d(n + k - 1) - 2**k * d(n)
            _certify(report, "claim2", f"2d{n + k - 1}-{2**k}d{n}", value, n + k - 1)
        getLogger().debug(f"claim2 holds for k = {k}", verify_claim2)
    return report


@log_operation()
def verify_nonmembership(m_max: int) -> Report:
    """d_m - 2 is not in M for m <= m_max, i.e. 2d_0 is not below any d_m."""
    report = Report("nonmembership")
    for m in range(m_max + 1):
        value = d(m) - 2
        started = time.perf_counter()
        decision = leveled_membership(value)
        elapsed = time.perf_counter() - started
        if decision.isTrue:
            raise ContradictionError(
                f"d{m} - 2 = {_formatLevels(decision.witness)} lies in M"
            )
        if value < 0:
            details = [f"d{m} - 2 = {formatRational(value)} < 0"]
        else:
            details = [
                f"levels <= {top_level(value)} exhausted over {decision.witness} states"
            ]
        report.add(
            "nonmembership",
            f"d{m}-2",
            decision,
            expected=False,
            details=details,
            elapsed=elapsed,
        )
    return report


@log_operation()
def run_example314(
    n_max: int = 6, k_max: int = 6, claim2_n: int = 4, m_max: int = 8
) -> Report:
    report = Report("example314")
    report.extend(verify_claim1(n_max))
    report.extend(verify_claim2(k_max, claim2_n))
    report.extend(verify_nonmembership(m_max))
    return report
