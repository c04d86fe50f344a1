# Presented monoids as backends, with equality through normal forms
from itertools import product
from threading import Lock
from typing import Dict, List, Optional

from src.core.backend import MonoidBackend
from src.presentation.rewriting import (
    RewriteSystem,
    complete,
    normal_form_census,
)
from src.presentation.words import Presentation, Word, add_words


class PresentedMonoid(MonoidBackend):
    """The monoid presented by P, computed with a rewrite system for P.

    Elements are words; two words are equal when their normal forms are.
    When every generator has a pure power among the rule left-hand sides
    there are finitely many irreducible words and the carrier is finite.

    Balls of an infinite carrier are cached per bound behind a lock. The
    cache only memoizes a pure function of the rewrite system, so sharing
    an instance between threads is safe.
    """

    def __init__(self, system: RewriteSystem, name: Optional[str] = None):
        super().__init__(name or system.presentation.name)
        self.system = system
        self.presentation = system.presentation
        self._balls: Dict[int, List[Word]] = {}
        self._ballsLock = Lock()
        self._carrier = self._finiteCarrier() if system.isComplete else None

    @classmethod
    def fromPresentation(
        cls, P: Presentation, max_iterations: Optional[int] = None
    ) -> "PresentedMonoid":
        return cls(complete(P, max_iterations))

    @property
    def isDecidable(self) -> bool:
        return self.system.isComplete

    @property
    def zero(self) -> Word:
        return self.presentation.empty

    @property
    def isComplete(self) -> bool:
        return self._carrier is not None

    def normal(self, w: Word) -> Word:
        return self.system.normalForm(w)

    def add(self, x: Word, y: Word) -> Word:
        return self.normal(add_words(x, y))

    def eq(self, x: Word, y: Word) -> bool:
        return self.normal(x) == self.normal(y)

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == self.presentation.rank
            and all(isinstance(a, int) and a >= 0 for a in x)
        )

    def enumerate(self, bound: Optional[int] = None) -> List[Word]:
        if self._carrier is not None:
            return list(self._carrier)
        bound = bound or 0
        with self._ballsLock:
            if bound not in self._balls:
                self._balls[bound] = normal_form_census(self.system, bound)
            return list(self._balls[bound])

    def element(self, text: str) -> Word:
        return self.normal(self.presentation.parseWord(text))

    def generator(self, name: str) -> Word:
        return self.normal(self.presentation.generator(name))

    def format(self, x: Word) -> str:
        return self.presentation.formatWord(self.normal(x))

    def _finiteCarrier(self) -> Optional[List[Word]]:
        P = self.presentation
        powers = [None] * P.rank
        for lhs, _ in self.system.rules:
            support = [i for i, a in enumerate(lhs) if a]
            if len(support) == 1:
                i = support[0]
                powers[i] = lhs[i] if powers[i] is None else min(powers[i], lhs[i])
        if any(power is None for power in powers):
            return None
        irreducible = [
            w
            for w in product(*(range(power) for power in powers))
            if self.system.reduce(w) == w
        ]
        return sorted(irreducible, key=P.key)
