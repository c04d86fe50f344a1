# Completion of commutative presentations into confluent rewrite systems
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement
from typing import Deque, List, Optional, Sequence, Tuple

from src.core.decision import Decision
from src.presentation.words import (
    Presentation,
    PresentationError,
    Relation,
    Word,
    add_words,
    divides,
    overlap,
    subtract_words,
)
from src.utils.config import getSettings
from src.utils.decorators import log_operation
from src.utils.logger import getLogger

CriticalPair = Tuple[Word, Word, Word]


class IncompleteRewriteSystemError(RuntimeError):
    pass


class CompletionStatus(Enum):
    COMPLETE = "Complete"
    CAPPED = "Capped"


def _reduce(rules: Sequence[Relation], w: Word) -> Word:
    changed = True
    while changed:
        changed = False
        for lhs, rhs in rules:
            if not divides(lhs, w):
                continue
            # a rule applies as often as lhs fits, since rhs only adds
            times = min(b // a for a, b in zip(lhs, w) if a)
            w = tuple(b - times * a + times * c for a, b, c in zip(lhs, w, rhs))
            changed = True
    return w


def _criticalPairs(rules: Sequence[Relation]) -> List[CriticalPair]:
    pairs = []
    for i, (l0, r0) in enumerate(rules):
        for l1, r1 in rules[i + 1:]:
            peak = overlap(l0, l1)
            if peak == add_words(l0, l1):
                continue
            pairs.append(
                (
                    peak,
                    add_words(subtract_words(peak, l0), r0),
                    add_words(subtract_words(peak, l1), r1),
                )
            )
    return pairs


@dataclass(frozen=True)
class RewriteSystem:
    presentation: Presentation
    rules: Tuple[Relation, ...]
    status: CompletionStatus
    iterations: int

    @property
    def isComplete(self) -> bool:
        return self.status is CompletionStatus.COMPLETE

    def reduce(self, w: Word) -> Word:
        """Some irreducible descendant of w; unique only when complete."""
        return _reduce(self.rules, tuple(w))

    def normalForm(self, w: Word) -> Word:
        if not self.isComplete:
            raise IncompleteRewriteSystemError(
                f"Rewrite system for {self.presentation.name} is {self}"
            )
        return self.reduce(w)

    def format(self) -> List[str]:
        P = self.presentation
        lines = [f"status {self}"]
        for lhs, rhs in self.rules:
            lines.append(f"rule {P.formatWord(lhs)} -> {P.formatWord(rhs)}")
        return lines

    def __str__(self) -> str:
        if self.isComplete:
            return self.status.value
        return f"{self.status.value}({self.iterations})"


@log_operation()
def complete(P: Presentation, max_iterations: Optional[int] = None) -> RewriteSystem:
    """Orient the relations of P and close them under critical pairs.

    Rules rewrite the larger word to the smaller one. Every added rule
    removes the rules whose left-hand side it divides (their equations are
    processed again) and queues its critical pairs with the others. The
    result is interreduced and sorted by left-hand side. After
    `max_iterations` added rules the system is returned as Capped.
    """
    limit = getSettings().completion_max_rules if max_iterations is None else max_iterations
    if limit < 1:
        raise PresentationError(f"max_iterations must be >= 1, got {limit}")
    logger = getLogger()

    rules: List[Relation] = []
    pending: Deque[Relation] = deque(P.relations)
    added = 0
    while pending:
        while pending:
            u, v = pending.popleft()
            rule = P.orient(_reduce(rules, u), _reduce(rules, v))
            if rule is None:
                continue
            if added >= limit:
                logger.warning(
                    f"Completion of {P.name} capped after {added} rules", complete
                )
                return RewriteSystem(
                    P, tuple(_interreduce(P, rules)), CompletionStatus.CAPPED, added
                )
            added += 1
            if added % 500 == 0:
                logger.debug(f"{P.name}: {added} rules, {len(pending)} pending", complete)

            lhs, rhs = rule
            kept = []
            for old in rules:
                if divides(lhs, old[0]):
                    pending.append(old)
                else:
                    kept.append(old)
            for old_lhs, old_rhs in kept:
                peak = overlap(lhs, old_lhs)
                if peak != add_words(lhs, old_lhs):
                    pending.append(
                        (
                            add_words(subtract_words(peak, lhs), rhs),
                            add_words(subtract_words(peak, old_lhs), old_rhs),
                        )
                    )
            rules = kept + [rule]

        rules = _interreduce(P, rules)
        for _, left, right in _criticalPairs(rules):
            if _reduce(rules, left) != _reduce(rules, right):
                pending.append((left, right))

    return RewriteSystem(P, tuple(rules), CompletionStatus.COMPLETE, added)


def _interreduce(P: Presentation, rules: List[Relation]) -> List[Relation]:
    reduced = []
    for i, (lhs, rhs) in enumerate(rules):
        if any(
            divides(other, lhs) and (other != lhs or j < i)
            for j, (other, _) in enumerate(rules)
            if j != i
        ):
            continue
        reduced.append((lhs, rhs))
    reduced = [(lhs, _reduce(reduced, rhs)) for lhs, rhs in reduced]
    return sorted(reduced, key=lambda rule: P.key(rule[0]))


def normal_form(R: RewriteSystem, w: Word) -> Word:
    """Raises IncompleteRewriteSystemError on a Capped system."""
    return R.normalForm(w)


def words_equal(
    R: RewriteSystem, u: Word, v: Word, depth: Optional[int] = None
) -> Decision:
    """Equality of two words in the presented monoid.

    Exact for complete systems. A capped system can only confirm equality,
    by finding a common descendant within `depth` single rewrites.
    """
    if R.isComplete:
        left, right = R.normalForm(u), R.normalForm(v)
        return Decision.of(left == right, left)

    depth = getSettings().common_reduct_depth if depth is None else depth
    left, right = _descendants(R, tuple(u), depth), _descendants(R, tuple(v), depth)
    common = sorted(left & right, key=R.presentation.key)
    if common:
        return Decision.yes(common[0])
    return Decision.unknown(depth)


def _descendants(R: RewriteSystem, w: Word, depth: int) -> set:
    seen = {w}
    frontier = [w]
    for _ in range(depth):
        following = []
        for x in frontier:
            for lhs, rhs in R.rules:
                if divides(lhs, x):
                    y = add_words(subtract_words(x, lhs), rhs)
                    if y not in seen:
                        seen.add(y)
                        following.append(y)
        frontier = following
    return seen


def critical_pairs(R: RewriteSystem) -> List[CriticalPair]:
    """(peak, left reduct, right reduct) for every overlapping pair of rules."""
    return _criticalPairs(R.rules)


def is_locally_confluent(R: RewriteSystem) -> Decision:
    for peak, left, right in critical_pairs(R):
        if R.reduce(left) != R.reduce(right):
            return Decision.no((peak, left, right))
    return Decision.yes()


def words_up_to(rank: int, degree: int) -> List[Word]:
    words = []
    for d in range(degree + 1):
        for letters in combinations_with_replacement(range(rank), d):
            w = [0] * rank
            for letter in letters:
                w[letter] += 1
            words.append(tuple(w))
    return words


def normal_form_census(R: RewriteSystem, degree: int) -> List[Word]:
    """Distinct normal forms of the words of total degree <= degree."""
    forms = {R.normalForm(w) for w in words_up_to(R.presentation.rank, degree)}
    return sorted(forms, key=R.presentation.key)
