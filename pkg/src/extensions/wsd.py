# Extensions in which a0 + a1 + c = b + c splits b, and their rewriting
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from src.core.backend import MonoidBackend
from src.core.decision import Decision
from src.core.equations import PreconditionError
from src.core.predicates import (
    default_bound,
    is_conical,
    is_injective_on,
    is_order_embedding,
    leq_alg,
)
from src.extensions.errors import (
    DegenerateInstanceError,
    UndecidableBaseError,
    require_decidable,
)
from src.utils.config import getSettings
from src.utils.decorators import log_operation, resolve_elements
from src.utils.io import formatWord
from src.utils.logger import getLogger

Counts = Tuple[int, int]
Pair = Tuple[Any, Counts]


class WsdExtension(MonoidBackend):
    """M x (Z+)^2 modulo the rewriting

        (x, e_i + r) -> (x + a_i, r)   when c <= x
        (x, e0 + e1 + r) -> (x + b, r)

    The rewriting is confluent and each step shrinks r, so every pair has
    a unique normal form; elements are compared through them.
    """

    def __init__(
        self,
        base: MonoidBackend,
        a0: Any,
        a1: Any,
        b: Any,
        c: Any,
        bound: Optional[int] = None,
        name: Optional[str] = None,
    ):
        super().__init__(name or f"{base.name}[wsd]")
        self.base = base
        self.a0, self.a1, self.b, self.c = a0, a1, b, c
        self.bound = default_bound(bound)

    @property
    def zero(self) -> Pair:
        return (self.base.zero, (0, 0))

    @property
    def isComplete(self) -> bool:
        # with c = 0 every count is consumed and the carrier is a copy of M
        return self.base.isComplete and self.base.isZero(self.c)

    @property
    def x0(self) -> Pair:
        return (self.base.zero, (1, 0))

    @property
    def x1(self) -> Pair:
        return (self.base.zero, (0, 1))

    def j(self, x: Any) -> Pair:
        return (x, (0, 0))

    def abovec(self, x: Any) -> bool:
        decision = leq_alg(self.base, self.c, x, self.bound)
        if decision.isUnknown:
            raise UndecidableBaseError(
                f"Cannot decide {self.base.format(self.c)} <= {self.base.format(x)} in {self.base.qualname}"
            )
        return decision.isTrue

    def steps(self, pair: Pair) -> List[Pair]:
        """Every single rewrite of the pair."""
        x, (r0, r1) = pair
        following = []
        if r0 and r1:
            following.append((self.base.add(x, self.b), (r0 - 1, r1 - 1)))
        if (r0 or r1) and self.abovec(x):
            if r0:
                following.append((self.base.add(x, self.a0), (r0 - 1, r1)))
            if r1:
                following.append((self.base.add(x, self.a1), (r0, r1 - 1)))
        return following

    def normalForm(self, pair: Pair) -> Pair:
        """Consume e0 + e1 with b first, then single counts once c <= x."""
        M = self.base
        x, (r0, r1) = pair
        k = min(r0, r1)
        x, r0, r1 = M.add(x, M.multiple(k, self.b)), r0 - k, r1 - k
        if (r0 or r1) and self.abovec(x):
            x = M.sum((x, M.multiple(r0, self.a0), M.multiple(r1, self.a1)))
            r0 = r1 = 0
        return (x, (r0, r1))

    def add(self, x: Pair, y: Pair) -> Pair:
        counts = (x[1][0] + y[1][0], x[1][1] + y[1][1])
        return self.normalForm((self.base.add(x[0], y[0]), counts))

    def eq(self, x: Pair, y: Pair) -> bool:
        left, right = self.normalForm(x), self.normalForm(y)
        return left[1] == right[1] and self.base.eq(left[0], right[0])

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == 2
            and self.base.contains(x[0])
            and isinstance(x[1], tuple)
            and len(x[1]) == 2
            and all(isinstance(r, int) and r >= 0 for r in x[1])
        )

    def enumerate(self, bound: Optional[int] = None) -> List[Pair]:
        bound = bound or 0
        counts = [(r0, r1) for r0 in range(bound + 1) for r1 in range(bound + 1 - r0)]
        pairs = [self.normalForm((x, r)) for r in counts for x in self.base.enumerate(bound)]
        return self.dedupe(pairs)

    def exactLeq(self, x: Pair, y: Pair) -> Optional[Tuple[bool, Any]]:
        # rewriting only adds to the first entry, so below a copy of M the
        # order is the order of M
        left, right = self.normalForm(x), self.normalForm(y)
        if left[1] != (0, 0) or right[1] != (0, 0):
            return None
        decision = leq_alg(self.base, left[0], right[0], self.bound)
        if decision.isUnknown:
            return None
        return (True, self.j(decision.witness)) if decision.isTrue else (False, None)

    def format(self, x: Pair) -> str:
        return f"[{self.base.format(x[0])}, {formatWord(x[1], ('e0', 'e1'))}]"

    def descendants(self, pair: Pair) -> List[Pair]:
        seen: List[Pair] = [pair]
        frontier = [pair]
        while frontier:
            following = []
            for xi in frontier:
                for eta in self.steps(xi):
                    if not any(self._same(eta, known) for known in seen):
                        seen.append(eta)
                        following.append(eta)
            frontier = following
        return seen

    def _same(self, x: Pair, y: Pair) -> bool:
        return x[1] == y[1] and self.base.eq(x[0], y[0])


def _checkInstance(M: MonoidBackend, a0, a1, b, c) -> None:
    M.check(a0, a1, b, c)
    if not M.eq(M.sum((a0, a1, c)), M.add(b, c)):
        raise PreconditionError(
            f"a0 + a1 + c != b + c for ({M.format(a0)}, {M.format(a1)}, {M.format(b)}, {M.format(c)})"
        )


@log_operation()
@resolve_elements("a0", "a1", "b", "c")
def wsd_extend(
    M: MonoidBackend, a0, a1, b, c, bound: Optional[int] = None
) -> WsdExtension:
    """The extension in which [0, e0], [0, e1] split b.

    Raises:
        PreconditionError: if a0 + a1 + c != b + c.
        DegenerateInstanceError: if a0, a1 or b is 0.
        UndecidableBaseError: if equality in M cannot be decided.
    """
    _checkInstance(M, a0, a1, b, c)
    for name, value in (("a0", a0), ("a1", a1), ("b", b)):
        if M.isZero(value):
            raise DegenerateInstanceError(f"{name} is 0; the instance is solved in {M.qualname}")
    require_decidable(M)
    return WsdExtension(M, a0, a1, b, c, bound)


@dataclass
class WsdSolution:
    """Witnesses x0 + x1 = b with x_i + c = a_i + c, in M or in an extension."""

    base: MonoidBackend
    instance: Tuple[Any, Any, Any, Any]
    witnesses: Tuple[Any, Any]
    extension: Optional[WsdExtension] = None
    assertions: Dict[str, Decision] = field(default_factory=dict)

    @property
    def host(self) -> MonoidBackend:
        return self.base if self.extension is None else self.extension

    @property
    def holds(self) -> bool:
        return not any(d.isFalse for d in self.assertions.values())

    def summary(self) -> List[str]:
        host = self.host
        lines = [f"witnesses ({host.format(self.witnesses[0])}, {host.format(self.witnesses[1])})"]
        if self.extension is not None:
            lines.append(f"extension {self.extension.name}")
        lines += [f"assert {name} {decision}" for name, decision in self.assertions.items()]
        return lines


def _solves(H: MonoidBackend, x0, x1, a0, a1, b, c) -> bool:
    return (
        H.eq(H.add(x0, c), H.add(a0, c))
        and H.eq(H.add(x1, c), H.add(a1, c))
        and H.eq(H.add(x0, x1), b)
    )


@resolve_elements("a0", "a1", "b", "c")
def solve_wsd(
    M: MonoidBackend, a0, a1, b, c, bound: Optional[int] = None
) -> WsdSolution:
    """Split b in M when a0, a1 or b is 0, and in `wsd_extend` otherwise.

    Raises:
        PreconditionError: if a0 + a1 + c != b + c.
        DegenerateInstanceError: if b = 0 but a0 + c = a1 + c = c fails.
    """
    _checkInstance(M, a0, a1, b, c)
    instance = (a0, a1, b, c)
    zero = M.zero
    degenerate = None
    if M.isZero(a0):
        degenerate = (zero, b)
    elif M.isZero(a1):
        degenerate = (b, zero)
    elif M.isZero(b):
        degenerate = (zero, zero)
    if degenerate is not None:
        if not _solves(M, *degenerate, *instance):
            raise DegenerateInstanceError(
                f"b = 0 but a0 + c, a1 + c and c differ in {M.qualname}"
            )
        return WsdSolution(M, instance, degenerate, assertions={"solves": Decision.yes()})

    N = wsd_extend(M, a0, a1, b, c, bound)
    bound = N.bound
    images = [N.j(x) for x in instance]
    assertions = {
        "solves": Decision.of(_solves(N, N.x0, N.x1, *images)),
        "injective": is_injective_on(N.j, M, N, bound),
        "order_embedding": is_order_embedding(N.j, M, N, bound),
        "conical": is_conical(N, bound),
    }
    return WsdSolution(M, instance, (N.x0, N.x1), N, assertions)


def _joinable(N: WsdExtension, left: Pair, right: Pair) -> bool:
    below = N.descendants(right)
    return any(any(N._same(x, y) for y in below) for x in N.descendants(left))


def peak_decision(N: WsdExtension, peak: Pair) -> Decision:
    """Whether every two single rewrites of the peak have a common descendant.

    The witness of True is the number of distinct single rewrites.
    """
    reducts: List[Pair] = []
    for eta in N.steps(peak):
        if not any(N._same(eta, known) for known in reducts):
            reducts.append(eta)
    for i, left in enumerate(reducts):
        for right in reducts[i + 1:]:
            if not _joinable(N, left, right):
                return Decision.no((peak, left, right))
    return Decision.yes(len(reducts))


@log_operation()
def confluence_sweep(
    N: WsdExtension,
    peaks: Optional[int] = None,
    rng: Optional[random.Random] = None,
    max_count: int = 3,
    max_draws: Optional[int] = None,
) -> Decision:
    """Check local confluence on randomly drawn pairs (x, r) until `peaks`
    of them had two or more distinct rewrites.

    x comes from the base ball and both counts from 0..max_count. Draws
    that are not peaks do not count. The witness of True is the pair
    (peaks, draws); Unknown(max_draws) means the draws ran out first.
    """
    settings = getSettings()
    target = settings.confluence_samples if peaks is None else peaks
    max_draws = 100 * max(target, 1) if max_draws is None else max_draws
    rng = rng or random.Random(settings.random_seed)
    ball = N.base.enumerate(N.bound)
    decisions: Dict[Tuple[int, Counts], Decision] = {}
    found = draws = 0
    while found < target:
        if draws == max_draws:
            getLogger().warning(
                f"{N.name}: {found} of {target} peaks after {draws} draws", confluence_sweep
            )
            return Decision.unknown(max_draws)
        draws += 1
        index = rng.randrange(len(ball))
        counts = (rng.randint(0, max_count), rng.randint(0, max_count))
        key = (index, counts)
        if key not in decisions:
            decisions[key] = peak_decision(N, (ball[index], counts))
        decision = decisions[key]
        if decision.isFalse:
            getLogger().warning(f"Peak {decision.witness} does not join", confluence_sweep)
            return decision
        if decision.witness >= 2:
            found += 1
    distinct = sum(1 for d in decisions.values() if d.witness >= 2)
    getLogger().debug(
        f"{N.name}: {found} peaks ({distinct} distinct) in {draws} draws", confluence_sweep
    )
    return Decision.yes((found, draws))
