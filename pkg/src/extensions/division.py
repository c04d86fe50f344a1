# Adjoining a p-th part of an element: pairs (x, m) standing for x + m.u with p.u = a
from math import ceil
from typing import Any, Dict, List, Optional, Tuple

from src.core.backend import MonoidBackend
from src.core.decision import Decision
from src.core.predicates import (
    default_bound,
    for_all,
    is_conical,
    is_injective_on,
    is_unitary_extension,
)
from src.extensions.errors import DegenerateInstanceError, require_decidable
from src.utils.decorators import log_operation, resolve_elements

Pair = Tuple[Any, int]


class DivisionExtension(MonoidBackend):
    """M x Z+ modulo (x, m) ~ (y, n) iff m = n mod p and x + [m/p]a = y + [n/p]a.

    [r] rounds up. The class of (0, 1) is a p-th part of (a, 0), and every
    pair equals one whose second entry is below p.
    """

    def __init__(self, base: MonoidBackend, a: Any, p: int, name: Optional[str] = None):
        super().__init__(name or f"{base.name}[{base.format(a)}/{p}]")
        self.base = base
        self.a = a
        self.p = p

    @property
    def zero(self) -> Pair:
        return (self.base.zero, 0)

    @property
    def isComplete(self) -> bool:
        return self.base.isComplete

    @property
    def u(self) -> Pair:
        return (self.base.zero, 1)

    def j(self, x: Any) -> Pair:
        return (x, 0)

    def add(self, x: Pair, y: Pair) -> Pair:
        return (self.base.add(x[0], y[0]), x[1] + y[1])

    def _shifted(self, x: Pair) -> Any:
        return self.base.add(x[0], self.base.multiple(ceil(x[1] / self.p), self.a))

    def eq(self, x: Pair, y: Pair) -> bool:
        return (x[1] - y[1]) % self.p == 0 and self.base.eq(
            self._shifted(x), self._shifted(y)
        )

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == 2
            and self.base.contains(x[0])
            and isinstance(x[1], int)
            and x[1] >= 0
        )

    def reduced(self, x: Pair) -> Pair:
        """The equal pair (x + k.a, m - k.p) with second entry below p."""
        k, r = divmod(x[1], self.p)
        return (self.base.add(x[0], self.base.multiple(k, self.a)), r)

    def enumerate(self, bound: Optional[int] = None) -> List[Pair]:
        pairs = [(x, r) for r in range(self.p) for x in self.base.enumerate(bound)]
        return self.dedupe(pairs)

    def format(self, x: Pair) -> str:
        return f"[{self.base.format(x[0])}, {x[1]}]"


@log_operation()
@resolve_elements("a")
def division_extend(M: MonoidBackend, a: Any, p: int) -> DivisionExtension:
    """An extension of M in which a has a p-th part.

    Raises:
        DegenerateInstanceError: if a = 0.
        UndecidableBaseError: if equality in M cannot be decided.
    """
    M.check(a)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if M.isZero(a):
        raise DegenerateInstanceError(f"Cannot divide 0 in {M.qualname}")
    require_decidable(M)
    return DivisionExtension(M, a, p)


def division_assertions(
    N: DivisionExtension, bound: Optional[int] = None
) -> Dict[str, Decision]:
    """The properties the extension is built to have, checked on M's ball."""
    bound = default_bound(bound)
    M, a, p = N.base, N.a, N.p
    ball = M.enumerate(bound)

    def translates():
        for x in ball:
            for y in ball:
                pair_side = N.eq(N.add(N.j(x), N.u), N.add(N.j(y), N.u))
                base_side = M.eq(M.add(x, a), M.add(y, a))
                if pair_side != base_side:
                    yield Decision.no((x, y))

    def cofinal():
        # (x, m) + (0, k.p - m) = (x + k.a, 0) with k = [m/p]
        for x, m in N.enumerate(bound):
            k = ceil(m / p)
            top = N.j(M.add(x, M.multiple(k, a)))
            if not N.eq(N.add((x, m), (M.zero, k * p - m)), top):
                yield Decision.no((x, m))

    return {
        "divides": Decision.of(N.eq(N.multiple(p, N.u), N.j(a))),
        "injective": is_injective_on(N.j, M, N, bound),
        "translates": for_all(translates(), bound),
        "cofinal": for_all(cofinal(), bound),
        "unitary": is_unitary_extension(
            lambda x: x[1] % p == 0, N, bound, cofinal=False
        ),
        "conical": is_conical(N, bound),
    }
