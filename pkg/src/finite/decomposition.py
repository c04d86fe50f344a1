# Decompositions inside finite refinement monoids, found by exhaustive search.
from itertools import product
from typing import List, Tuple

from src.core.decision import Decision
from src.core.equations import PreconditionError
from src.core.predicates import asymp
from src.finite.monoid import FiniteMonoid
from src.utils.decorators import log_operation, resolve_elements


class RefinementViolation(RuntimeError):
    """A search that refinement guarantees to succeed came back empty."""


@resolve_elements("a")
def subcone_at(M: FiniteMonoid, a: int) -> FiniteMonoid:
    """M(a): the elements x with x ~ a (mutually below multiples), plus 0."""
    M.check(a)
    members = [x for x in M.enumerate() if asymp(M, x, a).isTrue]
    sub, _ = M.submonoid(members, name=f"{M.name}({M.label(a)})")
    return sub


@log_operation()
@resolve_elements("a", "b", "c")
def decompose_multiple(
    M: FiniteMonoid, a: int, b: int, n: int, c: int
) -> Tuple[int, ...]:
    """c_0, ..., c_n with a = sum k.c_k, b = sum (n-k).c_k and c = sum c_k.

    Raises:
        PreconditionError: if n < 1 or a + b != n.c.
        RefinementViolation: if no decomposition exists.
    """
    M.check(a, b, c)
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if M.add(a, b) != M.multiple(n, c):
        raise PreconditionError(
            f"{M.label(a)} + {M.label(b)} != {n}.{M.label(c)} in {M.name}"
        )
    for parts in product(M.enumerate(), repeat=n + 1):
        if (
            M.sum(parts) == c
            and M.sum(M.multiple(k, ck) for k, ck in enumerate(parts)) == a
            and M.sum(M.multiple(n - k, ck) for k, ck in enumerate(parts)) == b
        ):
            return parts
    raise RefinementViolation(
        f"No decomposition of {M.label(a)} + {M.label(b)} = {n}.{M.label(c)} in {M.name}"
    )


@resolve_elements("a", "b")
def meet_in_class(M: FiniteMonoid, a: int, b: int) -> int:
    """Some c below both a and b with c ~ a.

    Raises:
        PreconditionError: unless a ~ b.
        RefinementViolation: if no such c exists.
    """
    M.check(a, b)
    if not asymp(M, a, b).isTrue:
        raise PreconditionError(
            f"{M.label(a)} and {M.label(b)} are not in the same class of {M.name}"
        )
    for c in M.enumerate():
        if (
            M.exactLeq(c, a)[0]
            and M.exactLeq(c, b)[0]
            and asymp(M, c, a).isTrue
        ):
            return c
    raise RefinementViolation(
        f"The class of {M.label(a)} is not downward directed at {M.label(b)} in {M.name}"
    )


def is_halving_cancellable(M: FiniteMonoid) -> Decision:
    """a + c = b + c implies 2x = c and a + x = b + x for some x.

    The counterexample is (a, b, c).
    """
    elements = M.enumerate()
    halves: List[List[int]] = [[] for _ in elements]
    for x in elements:
        halves[M.add(x, x)].append(x)
    for a in elements:
        for b in elements:
            for c in elements:
                if M.add(a, c) != M.add(b, c):
                    continue
                if not any(M.add(a, x) == M.add(b, x) for x in halves[c]):
                    return Decision.no((a, b, c))
    return Decision.yes()
