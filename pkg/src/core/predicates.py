# The algebraic preorder and the structural predicates, checked on balls.
from typing import Any, Callable, Iterable, Iterator, Optional

from src.core.backend import MonoidBackend
from src.core.decision import Decision
from src.core.equations import refinement_matrix_decision
from src.core.pset import PSet
from src.utils.config import getSettings
from src.utils.decorators import log_operation, resolve_elements


class SubmonoidClosureError(ValueError):
    pass


def default_bound(bound: Optional[int]) -> int:
    return getSettings().check_bound if bound is None else bound


def for_all(instances: Iterable[Decision], bound: int) -> Decision:
    """Fold per-instance decisions of a universally quantified check.

    The first False wins; otherwise any Unknown makes the result Unknown.
    """
    inconclusive = False
    for decision in instances:
        if decision.isFalse:
            return decision
        if decision.isUnknown:
            inconclusive = True
    return Decision.unknown(bound) if inconclusive else Decision.yes()


@resolve_elements("x", "y")
def leq_alg(M: MonoidBackend, x, y, bound: Optional[int] = None) -> Decision:
    """x <= y in the algebraic preorder, i.e. x + z = y for some z.

    The witness of a True answer is z.
    """
    M.check(x, y)
    bound = default_bound(bound)
    exact = M.exactLeq(x, y)
    if exact is not None:
        holds, difference = exact
        return Decision.of(holds, difference)

    if M.isComplete:
        candidates, exhaustive = M.enumerate(), True
    else:
        # every witness z satisfies z <= y
        below = M.downSet(y)
        if below is not None:
            candidates, exhaustive = below, True
        else:
            candidates, exhaustive = M.enumerate(bound), False

    for z in candidates:
        if M.eq(M.add(x, z), y):
            return Decision.yes(z)
    return Decision.no() if exhaustive else Decision.unknown(bound)


@resolve_elements("x", "y")
def propto(M: MonoidBackend, x, y, bound: Optional[int] = None) -> Decision:
    """x <= n.y for some n >= 1; the witness is n.

    Multiples of y are eventually periodic, so once a multiple repeats
    every further n is covered. Complete backends always reach that point.
    """
    M.check(x, y)
    bound = default_bound(bound)
    seen = []
    multiple = M.zero
    inconclusive = False
    n = 0
    while True:
        n += 1
        multiple = M.add(multiple, y)
        if any(M.eq(multiple, earlier) for earlier in seen):
            return Decision.unknown(bound) if inconclusive else Decision.no()
        seen.append(multiple)
        decision = leq_alg(M, x, multiple, bound)
        if decision.isTrue:
            return Decision.yes(n)
        if decision.isUnknown:
            inconclusive = True
        if not M.isComplete and n >= bound:
            break

    hint = M.exactPropto(x, y)
    if hint is not None:
        return Decision.of(hint)
    return Decision.unknown(bound)


@resolve_elements("x", "y")
def asymp(M: MonoidBackend, x, y, bound: Optional[int] = None) -> Decision:
    return propto(M, x, y, bound) & propto(M, y, x, bound)


def _pairs(ball) -> Iterator:
    for i, x in enumerate(ball):
        for y in ball[i:]:
            yield x, y


@log_operation()
def is_conical(M: MonoidBackend, bound: Optional[int] = None) -> Decision:
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for x, y in _pairs(ball):
            if M.isZero(M.add(x, y)) and not (M.isZero(x) and M.isZero(y)):
                yield Decision.no((x, y))

    return for_all(instances(), bound)


@log_operation()
def is_cancellative(M: MonoidBackend, bound: Optional[int] = None) -> Decision:
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for x, y in _pairs(ball):
            if M.eq(x, y):
                continue
            for z in ball:
                if M.eq(M.add(x, z), M.add(y, z)):
                    yield Decision.no((x, y, z))

    return for_all(instances(), bound)


@log_operation()
def is_separative(M: MonoidBackend, bound: Optional[int] = None) -> Decision:
    """2x = x + y = 2y forces x = y."""
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for x, y in _pairs(ball):
            if M.eq(x, y):
                continue
            double = M.add(x, x)
            if M.eq(double, M.add(x, y)) and M.eq(double, M.add(y, y)):
                yield Decision.no((x, y))

    return for_all(instances(), bound)


@log_operation()
def is_stably_finite(M: MonoidBackend, bound: Optional[int] = None) -> Decision:
    """x + y = y forces x = 0."""
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for x in ball:
            if M.isZero(x):
                continue
            for y in ball:
                if M.eq(M.add(x, y), y):
                    yield Decision.no((x, y))

    return for_all(instances(), bound)


@log_operation()
def is_antisymmetric(M: MonoidBackend, bound: Optional[int] = None) -> Decision:
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for x, y in _pairs(ball):
            if M.eq(x, y):
                continue
            forward = leq_alg(M, x, y, bound)
            if forward.isFalse:
                continue
            backward = leq_alg(M, y, x, bound)
            if forward.isTrue and backward.isTrue:
                yield Decision.no((x, y))
            elif not backward.isFalse:
                yield Decision.unknown(bound)

    return for_all(instances(), bound)


@log_operation()
def is_simple(M: MonoidBackend, bound: Optional[int] = None) -> Decision:
    """Every u with u not below 0 is an order-unit on the ball.

    The counterexample is (x, u) with x not bounded by multiples of u.
    """
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for u in ball:
            positive = leq_alg(M, u, M.zero, bound)
            if positive.isTrue:
                continue
            if positive.isUnknown:
                yield Decision.unknown(bound)
                continue
            for x in ball:
                decision = propto(M, x, u, bound)
                yield Decision.no((x, u)) if decision.isFalse else decision

    return for_all(instances(), bound)


@log_operation()
def is_p_torsion_free(
    M: MonoidBackend, P: PSet, bound: Optional[int] = None
) -> Decision:
    """p.x = p.y forces x = y, for p among the generators of P."""
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for p in P.generators:
            for x, y in _pairs(ball):
                if not M.eq(x, y) and M.eq(M.multiple(p, x), M.multiple(p, y)):
                    yield Decision.no((p, x, y))

    return for_all(instances(), bound)


@log_operation()
def is_p_unperforated(
    M: MonoidBackend, P: PSet, bound: Optional[int] = None
) -> Decision:
    """p.x <= p.y forces x <= y, for p among the generators of P."""
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for p in P.generators:
            for x in ball:
                for y in ball:
                    direct = leq_alg(M, x, y, bound)
                    if direct.isTrue:
                        continue
                    scaled = leq_alg(M, M.multiple(p, x), M.multiple(p, y), bound)
                    if scaled.isFalse:
                        continue
                    if scaled.isTrue and direct.isFalse:
                        yield Decision.no((p, x, y))
                    else:
                        yield Decision.unknown(bound)

    return for_all(instances(), bound)


@resolve_elements("x")
def quasi_divisible_witness(
    M: MonoidBackend, x, bound: Optional[int] = None
) -> Decision:
    """Some (u, v) with 2u + 3v = x.

    Both u and v are below x, so a down-set makes the search exhaustive.
    """
    bound = default_bound(bound)
    for p, pack in ((2, lambda w: (w, M.zero)), (3, lambda w: (M.zero, w))):
        part = M.divide(x, p)
        if part is not None and M.eq(M.multiple(p, part), x):
            return Decision.yes(pack(part))

    if M.isComplete:
        candidates, exhaustive = M.enumerate(), True
    else:
        below = M.downSet(x)
        if below is not None:
            candidates, exhaustive = list(below), True
        else:
            candidates, exhaustive = M.enumerate(bound), False

    for u in candidates:
        double = M.multiple(2, u)
        for v in candidates:
            if M.eq(M.add(double, M.multiple(3, v)), x):
                return Decision.yes((u, v))
    return Decision.no() if exhaustive else Decision.unknown(bound)


@log_operation()
def is_quasi_divisible(M: MonoidBackend, bound: Optional[int] = None) -> Decision:
    """Every x in the ball is 2u + 3v; the counterexample is x."""
    bound = default_bound(bound)

    def instances():
        for x in M.enumerate(bound):
            decision = quasi_divisible_witness(M, x, bound)
            yield Decision.no(x) if decision.isFalse else decision

    return for_all(instances(), bound)


@log_operation()
def is_refinement(M: MonoidBackend, bound: Optional[int] = None) -> Decision:
    """Every a0 + a1 = b0 + b1 in the ball admits a refinement matrix.

    The counterexample is the quadruple (a0, a1, b0, b1).
    """
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for a0 in ball:
            for a1 in ball:
                total = M.add(a0, a1)
                for b0 in ball:
                    for b1 in ball:
                        if not M.eq(M.add(b0, b1), total):
                            continue
                        decision = refinement_matrix_decision(
                            M, a0, a1, b0, b1, bound
                        )
                        if decision.isFalse:
                            yield Decision.no((a0, a1, b0, b1))
                        else:
                            yield decision

    return for_all(instances(), bound)


@log_operation()
def is_unitary_extension(
    M_sub: Callable[[Any], bool],
    N: MonoidBackend,
    bound: Optional[int] = None,
    strong: bool = False,
    multiplier_bound: Optional[int] = None,
    cofinal: bool = True,
) -> Decision:
    """Whether the submonoid picked out by M_sub sits unitarily in N.

    Checks cofinality, unless `cofinal` is False because the caller has
    established it on generators. Then checks that a0 + b = a1 with a0, a1
    in the submonoid forces b into it and, when `strong`, that m.b in the
    submonoid forces b into it for 2 <= m <= multiplier_bound.

    Raises:
        SubmonoidClosureError: if M_sub misses 0 or is not closed under
            addition on the ball.
    """
    bound = default_bound(bound)
    multiplier_bound = bound if multiplier_bound is None else multiplier_bound
    ball = N.enumerate(bound)
    sub = [x for x in ball if M_sub(x)]

    if not M_sub(N.zero):
        raise SubmonoidClosureError(f"Submonoid of {N.qualname} misses 0")
    for x, y in _pairs(sub):
        if not M_sub(N.add(x, y)):
            raise SubmonoidClosureError(
                f"{N.format(x)} + {N.format(y)} leaves the submonoid of {N.qualname}"
            )

    def cofinality():
        for y in ball:
            verdicts = [leq_alg(N, y, a, bound) for a in sub]
            if any(d.isTrue for d in verdicts):
                continue
            if N.isComplete and all(d.isFalse for d in verdicts):
                yield Decision.no(("cofinal", y))
            else:
                yield Decision.unknown(bound)

    def differences():
        for a0 in sub:
            for a1 in sub:
                for b in ball:
                    if N.eq(N.add(a0, b), a1) and not M_sub(b):
                        yield Decision.no(("unitary", a0, a1, b))

    def multiples():
        for m in range(2, multiplier_bound + 1):
            for b in ball:
                if M_sub(N.multiple(m, b)) and not M_sub(b):
                    yield Decision.no(("strong", m, b))

    def instances():
        if cofinal:
            yield from cofinality()
        yield from differences()
        if strong:
            yield from multiples()

    return for_all(instances(), bound)


@log_operation()
def is_order_embedding(
    f: Callable[[Any], Any],
    M: MonoidBackend,
    N: MonoidBackend,
    bound: Optional[int] = None,
) -> Decision:
    """x <= y in M exactly when f(x) <= f(y) in N, on M's ball."""
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for x in ball:
            for y in ball:
                source = leq_alg(M, x, y, bound)
                image = leq_alg(N, f(x), f(y), bound)
                if source.isUnknown or image.isUnknown:
                    yield Decision.unknown(bound)
                elif source.isTrue != image.isTrue:
                    yield Decision.no((x, y))

    return for_all(instances(), bound)


@log_operation()
def is_injective_on(
    f: Callable[[Any], Any], M: MonoidBackend, N: MonoidBackend, bound=None
) -> Decision:
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for x, y in _pairs(ball):
            if not M.eq(x, y) and N.eq(f(x), f(y)):
                yield Decision.no((x, y))

    return for_all(instances(), bound)


def is_homomorphism_on(
    f: Callable[[Any], Any], M: MonoidBackend, N: MonoidBackend, bound=None
) -> Decision:
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        if not N.eq(f(M.zero), N.zero):
            yield Decision.no((M.zero,))
        for x, y in _pairs(ball):
            if not N.eq(f(M.add(x, y)), N.add(f(x), f(y))):
                yield Decision.no((x, y))

    return for_all(instances(), bound)


def check_axioms(M: MonoidBackend, bound: Optional[int] = None) -> Decision:
    """Associativity, commutativity and neutrality of zero on the ball."""
    bound = default_bound(bound)
    ball = M.enumerate(bound)

    def instances():
        for x in ball:
            if not M.eq(M.add(x, M.zero), x):
                yield Decision.no(("zero", x))
            for y in ball:
                xy = M.add(x, y)
                if not M.eq(xy, M.add(y, x)):
                    yield Decision.no(("commutative", x, y))
                for z in ball:
                    if not M.eq(M.add(xy, z), M.add(x, M.add(y, z))):
                        yield Decision.no(("associative", x, y, z))

    return for_all(instances(), bound)
