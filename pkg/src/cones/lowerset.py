# Nonempty bounded lower subsets of Q+ with cuts in Q(sqrt 2)
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, List, Optional, Tuple, Union

from src.cones.numbers import SQRT2, NumberQSqrt2
from src.core.backend import MonoidBackend
from src.core.decision import Decision
from src.core.equations import PreconditionError, RefinementMatrix
from src.utils.decorators import log_operation
from src.utils.io import parseRational

Cut = Union[NumberQSqrt2, Fraction, int]


class LowerSetError(ValueError):
    pass


@dataclass(frozen=True)
class LowerSet:
    """[0, cut] or [0, cut) intersected with Q+.

    A closed set needs a rational cut; an irrational cut always gives the
    open set, since both intervals meet Q+ in the same points.
    """

    cut: NumberQSqrt2
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "cut", NumberQSqrt2.of(self.cut))
        if self.cut.sign() < 0:
            raise LowerSetError(f"Negative cut {self.cut}")
        if not self.cut.isRational:
            object.__setattr__(self, "closed", False)
        if not self.closed and self.cut.sign() == 0:
            raise LowerSetError("[0, 0) is empty")

    @classmethod
    def point(cls, cut: Cut) -> "LowerSet":
        return cls(cut, True)

    @classmethod
    def below(cls, cut: Cut) -> "LowerSet":
        """The set cut^- = [0, cut)."""
        return cls(cut, False)

    def __add__(self, other: "LowerSet") -> "LowerSet":
        return LowerSet(self.cut + other.cut, self.closed and other.closed)

    def __str__(self) -> str:
        return f"{self.cut}" if self.closed else f"{self.cut}-"


ZERO = LowerSet.point(0)


class LowerSetMonoid(MonoidBackend):
    """Lower sets under pointwise addition.

    X <= Y exactly when X = Y, or cut(X) < cut(Y) and Y closed forces X
    closed. The ball of bound b holds the sets with cuts k/2, sqrt2 - 1 and
    2 - sqrt2 for k <= 2b, both flags where allowed.
    """

    def __init__(self, name: Optional[str] = None):
        super().__init__(name or "Lambda(Q+)")

    @property
    def zero(self) -> LowerSet:
        return ZERO

    def add(self, x: LowerSet, y: LowerSet) -> LowerSet:
        return x + y

    def contains(self, x) -> bool:
        return isinstance(x, LowerSet)

    def enumerate(self, bound: Optional[int] = None) -> List[LowerSet]:
        cuts = [NumberQSqrt2(Fraction(k, 2)) for k in range((bound or 0) * 2 + 1)]
        cuts += [SQRT2 - 1, 2 - SQRT2]
        sets = [ZERO]
        for cut, closed in product(cuts[1:], (True, False)):
            if closed and not cut.isRational:
                continue
            sets.append(LowerSet(cut, closed))
        return self.dedupe(sets)

    def exactLeq(self, x: LowerSet, y: LowerSet) -> Tuple[bool, Any]:
        if x == y:
            return (True, ZERO)
        if x.cut < y.cut and (x.closed or not y.closed):
            return (True, LowerSet(y.cut - x.cut, y.closed))
        return (False, None)

    def exactPropto(self, x: LowerSet, y: LowerSet) -> bool:
        return x == ZERO or y != ZERO

    def format(self, x: LowerSet) -> str:
        return str(x)

    def element(self, text: str) -> LowerSet:
        """`r` for [0, r] and `r-` for [0, r), with r rational."""
        text = text.strip()
        closed = not text.endswith("-")
        return LowerSet(parseRational(text.rstrip("-")), closed)


def _entry(cut: NumberQSqrt2, closed: bool) -> Optional[LowerSet]:
    if cut.sign() < 0 or (closed and not cut.isRational) or (not closed and cut.sign() == 0):
        return None
    return LowerSet(cut, closed)


def lambda_refinement_matrix(
    a0: LowerSet, a1: LowerSet, b0: LowerSet, b1: LowerSet
) -> Optional[RefinementMatrix]:
    """A refinement matrix for a0 + a1 = b0 + b1 in Lambda(Q+).

    Entries are (t, a0 - t, b0 - t, a1 - b0 + t) for t in the middle or at
    an end of the feasible range, trying every flag assignment.

    Raises:
        PreconditionError: if a0 + a1 != b0 + b1.
    """
    if a0 + a1 != b0 + b1:
        raise PreconditionError(f"{a0} + {a1} != {b0} + {b1}")
    M = LowerSetMonoid()
    low = max(NumberQSqrt2(0), a0.cut - b1.cut)
    high = min(a0.cut, b0.cut)
    for t in (NumberQSqrt2(Fraction(1, 2)) * (low + high), low, high):
        cuts = (t, a0.cut - t, b0.cut - t, a1.cut - b0.cut + t)
        for flags in product((True, False), repeat=4):
            entries = [_entry(cut, closed) for cut, closed in zip(cuts, flags)]
            if None in entries:
                continue
            matrix = RefinementMatrix(*entries)
            if matrix.verify(M, a0, a1, b0, b1):
                return matrix
    return None


@dataclass
class LambdaWsdResult:
    instance: Tuple[LowerSet, LowerSet, LowerSet, LowerSet]
    equality: Decision
    decision: Decision
    trace: List[str]


def _flags(a: LowerSet, c: LowerSet) -> List[bool]:
    # x + c = a + c pins cut(x) = cut(a); with c closed it also pins the flag
    if c.closed:
        return [a.closed]
    flags = []
    if a.cut.isRational:
        flags.append(True)
    if a.cut.sign() > 0:
        flags.append(False)
    return flags


def solve_lambda_wsd(
    a0: LowerSet, a1: LowerSet, b: LowerSet, c: LowerSet
) -> Tuple[Decision, List[str]]:
    """Decide whether some x0 + x1 = b has x_i + c = a_i + c.

    The witness of True is (x0, x1). The trace explains the case analysis.

    Raises:
        PreconditionError: if a0 + a1 + c != b + c.
    """
    if a0 + a1 + c != b + c:
        raise PreconditionError(f"{a0} + {a1} + {c} != {b} + {c}")
    trace = [f"x_i + {c} = a_i + {c} forces cut(x_i) = cut(a_i)"]
    options = []
    for i, a in enumerate((a0, a1)):
        flags = _flags(a, c)
        kinds = " or ".join("closed" if f else "open" for f in flags)
        reason = "irrational" if not a.cut.isRational else "rational"
        trace.append(f"cut(x{i}) = {a.cut} is {reason}, so x{i} is {kinds}")
        options.append(flags)
    trace.append(
        f"{b} is {'closed' if b.closed else 'open'}, so x0 + x1 = {b} needs "
        + ("x0 and x1 closed" if b.closed else "x0 or x1 open")
    )
    for f0, f1 in product(*options):
        if (f0 and f1) == b.closed:
            witness = (LowerSet(a0.cut, f0), LowerSet(a1.cut, f1))
            trace.append(f"x0 = {witness[0]}, x1 = {witness[1]}")
            return Decision.yes(witness), trace
    trace.append("no choice of flags fits: the instance has no solution")
    return Decision.no((a0, a1, b, c)), trace


@log_operation()
def lambda_wsd_failure() -> LambdaWsdResult:
    """The instance alpha, 1 - alpha, 1, 1^- with alpha = sqrt2 - 1."""
    alpha = SQRT2 - 1
    instance = (
        LowerSet.below(alpha),
        LowerSet.below(1 - alpha),
        LowerSet.point(1),
        LowerSet.below(1),
    )
    a0, a1, b, c = instance
    left, right = a0 + a1 + c, b + c
    equality = Decision.of(left == right, (left, right))
    decision, trace = solve_lambda_wsd(*instance)
    trace.insert(0, f"{a0} + {a1} + {c} = {left} = {b} + {c}")
    return LambdaWsdResult(instance, equality, decision, trace)
