"""Finitely generated submonoids of (Q+)^d and exact membership in them."""
from fractions import Fraction
from itertools import product
from math import floor, lcm
from typing import Any, List, Optional, Sequence, Set, Tuple

from src.core.backend import DomainMismatchError, MonoidBackend
from src.core.decision import Decision
from src.core.equations import SearchSpaceExceeded
from src.utils.config import getSettings
from src.utils.decorators import log_operation
from src.utils.io import formatVector, parseRational
from src.utils.logger import getLogger

Vector = Tuple[Fraction, ...]


def parseVector(text: str) -> Vector:
    return tuple(parseRational(token) for token in text.split(","))


def _denominatorOrder(v: Vector) -> Tuple[int, Tuple[int, ...]]:
    common = lcm(*(a.denominator for a in v))
    return common, tuple(int(a * common) for a in v)


class RationalCone(MonoidBackend):
    """Nonnegative integer combinations of rational vectors >= 0.

    Zero generators are dropped. Every remaining generator is positive in
    some coordinate, so a vector has finitely many representations and
    membership is decidable.
    """

    def __init__(self, generators: Sequence[Sequence[Any]], name: Optional[str] = None):
        super().__init__(name or "cone")
        vectors = [tuple(Fraction(a) for a in g) for g in generators]
        if not vectors:
            raise ValueError("A rational cone needs at least one generator")
        dims = {len(v) for v in vectors}
        if len(dims) != 1:
            raise ValueError(f"Generators of mixed dimension {sorted(dims)}")
        if any(a < 0 for v in vectors for a in v):
            raise ValueError("Generators must be nonnegative")
        self.dim = dims.pop()
        self.generators: Tuple[Vector, ...] = tuple(v for v in vectors if any(v))

    @property
    def zero(self) -> Vector:
        return (Fraction(0),) * self.dim

    def vector(self, x: Any) -> Vector:
        if isinstance(x, str):
            x = parseVector(x)
        elif not isinstance(x, (tuple, list)):
            x = (x,)
        if len(x) != self.dim:
            raise DomainMismatchError(f"{x} is not a vector of length {self.dim}")
        return tuple(Fraction(a) for a in x)

    def element(self, text: str) -> Vector:
        return self.vector(text)

    def add(self, x: Vector, y: Vector) -> Vector:
        return tuple(a + b for a, b in zip(x, y))

    def contains(self, x) -> bool:
        try:
            v = self.vector(x)
        except (DomainMismatchError, TypeError, ValueError):
            return False
        return cone_membership(self, v).isTrue

    def combine(self, coefficients: Sequence[int]) -> Vector:
        total = self.zero
        for k, g in zip(coefficients, self.generators):
            total = self.add(total, tuple(k * a for a in g))
        return total

    def enumerate(self, bound: Optional[int] = None) -> List[Vector]:
        """Combinations of at most `bound` generators, denominator first.

        Vectors are ordered by their common denominator, then by their
        numerators over it.
        """
        bound = bound or 0
        n = len(self.generators)
        vectors = {
            self.combine(c)
            for c in product(range(bound + 1), repeat=n)
            if sum(c) <= bound
        }
        return sorted(vectors, key=_denominatorOrder)

    def eq(self, x: Vector, y: Vector) -> bool:
        return self.vector(x) == self.vector(y)

    def exactLeq(self, x: Vector, y: Vector) -> Optional[Tuple[bool, Any]]:
        difference = tuple(b - a for a, b in zip(self.vector(x), self.vector(y)))
        if any(a < 0 for a in difference):
            return (False, None)
        decision = cone_membership(self, difference)
        if decision.isUnknown:
            return None
        return (True, difference) if decision.isTrue else (False, None)

    def exactPropto(self, x: Vector, y: Vector) -> Optional[bool]:
        # in dimension one every large enough element of the group lies in the cone
        if self.dim != 1:
            return None
        return self.isZero(x) or not self.isZero(y)

    def format(self, x: Vector) -> str:
        return formatVector(x)

    def formatCombination(self, coefficients: Sequence[int]) -> str:
        terms = [
            f"{k}*({formatVector(g)})"
            for k, g in zip(coefficients, self.generators)
            if k
        ]
        return " + ".join(terms) if terms else "0"


class _MembershipSearch:
    """Depth-first search over generator coefficients, largest generator first.

    A branch is cut when the remainder leaves the lattice spanned by the
    generators still available, or is positive where they all vanish.
    """

    def __init__(self, C: RationalCone, coeff_bound: Optional[int]):
        order = sorted(range(len(C.generators)), key=lambda i: -sum(C.generators[i]))
        self.order = order
        self.gens = [C.generators[i] for i in order]
        self.coeff_bound = coeff_bound
        self.ceiling = getSettings().search_ceiling
        self.capped = False
        self.nodes = 0
        self.failed: Set[Tuple[int, Vector]] = set()

        n, d = len(self.gens), C.dim
        self.denominators: List[List[int]] = [[1] * d for _ in range(n + 1)]
        self.support: List[List[bool]] = [[False] * d for _ in range(n + 1)]
        for i in reversed(range(n)):
            for j in range(d):
                self.denominators[i][j] = lcm(
                    self.denominators[i + 1][j], self.gens[i][j].denominator
                )
                self.support[i][j] = self.support[i + 1][j] or self.gens[i][j] > 0

    def _viable(self, i: int, r: Vector) -> bool:
        for j, a in enumerate(r):
            if a and not self.support[i][j]:
                return False
            if (a * self.denominators[i][j]).denominator != 1:
                return False
        return True

    def run(self, i: int, r: Vector) -> Optional[List[int]]:
        n = len(self.gens)
        if not any(r):
            return [0] * (n - i)
        if i == n or (i, r) in self.failed or not self._viable(i, r):
            return None
        self.nodes += 1
        if self.nodes > self.ceiling:
            raise SearchSpaceExceeded(self.nodes, self.ceiling)

        g = self.gens[i]
        kmax = min(floor(a / b) for a, b in zip(r, g) if b > 0)
        if self.coeff_bound is not None and kmax > self.coeff_bound:
            self.capped = True
            kmax = self.coeff_bound
        for k in range(kmax, -1, -1):
            rest = self.run(i + 1, tuple(a - k * b for a, b in zip(r, g)))
            if rest is not None:
                return [k] + rest
        self.failed.add((i, r))
        return None


@log_operation()
def cone_membership(
    C: RationalCone, v: Any, coeff_bound: Optional[int] = None
) -> Decision:
    """Whether v is a nonnegative integer combination of C's generators.

    The witness of True lists the coefficients in generator order. Without
    a coefficient bound the search is exhaustive; with one, a search that
    had to cut coefficients answers Unknown(coeff_bound) instead of False.
    A search that passes the configured node ceiling answers
    Unknown(ceiling).
    """
    v = C.vector(v)
    if any(a < 0 for a in v):
        return Decision.no()
    search = _MembershipSearch(C, coeff_bound)
    try:
        found = search.run(0, v)
    except SearchSpaceExceeded as e:
        getLogger().warning(str(e), cone_membership)
        return Decision.unknown(e.ceiling)
    if found is None:
        return Decision.unknown(coeff_bound) if search.capped else Decision.no()
    coefficients = [0] * len(found)
    for position, k in zip(search.order, found):
        coefficients[position] = k
    return Decision.yes(tuple(coefficients))

