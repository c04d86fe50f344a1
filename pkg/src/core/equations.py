# Equation systems over a monoid backend and the searches built on them.
from dataclasses import dataclass
from math import prod
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from src.core.backend import MonoidBackend
from src.core.decision import Decision
from src.utils.config import getSettings
from src.utils.decorators import log_operation, resolve_elements
from src.utils.logger import getLogger


class PreconditionError(ValueError):
    pass


class SearchSpaceExceeded(RuntimeError):
    def __init__(self, size: int, ceiling: int):
        super().__init__(
            f"Search space of {size} assignments exceeds the ceiling of {ceiling}"
        )
        self.size = size
        self.ceiling = ceiling


@dataclass(frozen=True)
class Equation:
    """p.x + a = q.x + b over k unknowns x."""

    coeffs_left: Tuple[int, ...]
    const_left: Any
    coeffs_right: Tuple[int, ...]
    const_right: Any

    def __post_init__(self):
        object.__setattr__(self, "coeffs_left", tuple(self.coeffs_left))
        object.__setattr__(self, "coeffs_right", tuple(self.coeffs_right))
        if len(self.coeffs_left) != len(self.coeffs_right):
            raise PreconditionError(
                f"Coefficient vectors differ in length: {len(self.coeffs_left)} != {len(self.coeffs_right)}"
            )
        if any(p < 0 for p in self.coeffs_left + self.coeffs_right):
            raise PreconditionError("Coefficients must be non-negative")

    @property
    def size(self) -> int:
        return len(self.coeffs_left)

    @property
    def unknowns(self) -> List[int]:
        return [
            i
            for i, (p, q) in enumerate(zip(self.coeffs_left, self.coeffs_right))
            if p or q
        ]

    def side(self, M: MonoidBackend, coeffs, const, assignment) -> Any:
        value = const
        for coefficient, x in zip(coeffs, assignment):
            if coefficient:
                value = M.add(value, M.multiple(coefficient, x))
        return value

    def evaluate(self, M: MonoidBackend, assignment: Sequence[Any]):
        return (
            self.side(M, self.coeffs_left, self.const_left, assignment),
            self.side(M, self.coeffs_right, self.const_right, assignment),
        )

    def holds(self, M: MonoidBackend, assignment: Sequence[Any]) -> bool:
        left, right = self.evaluate(M, assignment)
        return M.eq(left, right)

    def upperBound(self, index: int) -> Optional[Any]:
        """The constant bounding unknown `index` from above, if any.

        When every unknown sits on one side, each unknown with a positive
        coefficient there is below the other side's constant.
        """
        if self.coeffs_left[index] and not any(self.coeffs_right):
            return self.const_right
        if self.coeffs_right[index] and not any(self.coeffs_left):
            return self.const_left
        return None


@dataclass(frozen=True)
class EquationSystem:
    unknown_count: int
    equations: Tuple[Equation, ...]
    names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != self.unknown_count:
                raise PreconditionError(
                    f"Expected {self.unknown_count} unknown names, got {len(self.names)}"
                )
        for equation in self.equations:
            if equation.size != self.unknown_count:
                raise PreconditionError(
                    f"Equation has {equation.size} coefficients, expected {self.unknown_count}"
                )

    @property
    def unknownNames(self) -> Tuple[str, ...]:
        return self.names or tuple(f"x{i}" for i in range(self.unknown_count))

    def check(self, M: MonoidBackend) -> None:
        for equation in self.equations:
            M.check(equation.const_left, equation.const_right)

    def isSolvedBy(self, M: MonoidBackend, assignment: Sequence[Any]) -> bool:
        return all(equation.holds(M, assignment) for equation in self.equations)


@dataclass(frozen=True)
class RefinementMatrix:
    c00: Any
    c01: Any
    c10: Any
    c11: Any

    @property
    def entries(self) -> Tuple[Any, Any, Any, Any]:
        return (self.c00, self.c01, self.c10, self.c11)

    def verify(self, M: MonoidBackend, a0, a1, b0, b1) -> bool:
        return (
            M.eq(M.add(self.c00, self.c01), a0)
            and M.eq(M.add(self.c10, self.c11), a1)
            and M.eq(M.add(self.c00, self.c10), b0)
            and M.eq(M.add(self.c01, self.c11), b1)
        )

    def format(self, M: MonoidBackend) -> str:
        return "(" + ", ".join(M.format(c) for c in self.entries) + ")"


def _domains(M: MonoidBackend, system: EquationSystem, bound: int):
    """Candidate values per unknown and whether each list is exhaustive."""
    ball = None
    domains, exhaustive = [], True
    for index in range(system.unknown_count):
        domain = None
        for equation in system.equations:
            ceiling = equation.upperBound(index)
            if ceiling is None:
                continue
            below = M.downSet(ceiling)
            if below is not None and (domain is None or len(below) < len(domain)):
                domain = below
        if domain is None:
            if ball is None:
                ball = M.enumerate(bound)
            domain = ball
            exhaustive = exhaustive and M.isComplete
        # largest candidates first
        domains.append(list(reversed(list(domain))))
    return domains, exhaustive


@log_operation()
def solve_system_decision(
    M: MonoidBackend,
    system: EquationSystem,
    bound: Optional[int] = None,
    ceiling: Optional[int] = None,
) -> Decision:
    """Search an assignment solving every equation of the system.

    Unknowns below a constant (an equation with all unknowns on one side)
    range over that constant's down-set, the rest over the backend's ball.
    Candidates are tried from the end of the enumeration backwards, and
    each equation is checked as soon as its unknowns are assigned.

    Returns:
        True with the assignment as witness, False when the search space is
        exhausted and provably complete, Unknown(bound) otherwise.

    Raises:
        SearchSpaceExceeded: if the candidate space exceeds the ceiling.
    """
    settings = getSettings()
    bound = settings.check_bound if bound is None else bound
    ceiling = settings.search_ceiling if ceiling is None else ceiling
    system.check(M)

    domains, exhaustive = _domains(M, system, bound)
    size = prod(len(domain) for domain in domains)
    if size > ceiling:
        raise SearchSpaceExceeded(size, ceiling)

    # Equations are checked at the position of their last unknown.
    checkpoints: Dict[int, List[Equation]] = {}
    for equation in system.equations:
        unknowns = equation.unknowns
        position = unknowns[-1] if unknowns else -1
        checkpoints.setdefault(position, []).append(equation)

    k = system.unknown_count
    assignment: List[Any] = [M.zero] * k
    if not all(e.holds(M, assignment) for e in checkpoints.get(-1, [])):
        return Decision.no()

    def search(index: int) -> bool:
        if index == k:
            return True
        for candidate in domains[index]:
            assignment[index] = candidate
            if all(e.holds(M, assignment) for e in checkpoints.get(index, [])):
                if search(index + 1):
                    return True
        assignment[index] = M.zero
        return False

    if search(0):
        return Decision.yes(tuple(assignment))
    if exhaustive:
        return Decision.no()
    getLogger().debug(
        f"No solution among {size} candidates in {M.qualname}, bound {bound}",
        solve_system_decision,
    )
    return Decision.unknown(bound)


def solve_system(
    M: MonoidBackend,
    system: EquationSystem,
    bound: Optional[int] = None,
    ceiling: Optional[int] = None,
) -> Optional[Tuple[Any, ...]]:
    """The first assignment found by `solve_system_decision`, or None."""
    decision = solve_system_decision(M, system, bound, ceiling)
    return decision.witness if decision.isTrue else None


def refinement_system(M: MonoidBackend, a0, a1, b0, b1) -> EquationSystem:
    """Unknowns x00, x01, x10, x11 with rows summing to a_i, columns to b_j."""
    zero, none = M.zero, (0, 0, 0, 0)
    return EquationSystem(
        4,
        (
            Equation((1, 1, 0, 0), zero, none, a0),
            Equation((0, 0, 1, 1), zero, none, a1),
            Equation((1, 0, 1, 0), zero, none, b0),
            Equation((0, 1, 0, 1), zero, none, b1),
        ),
        names=("x00", "x01", "x10", "x11"),
    )


@resolve_elements("a0", "a1", "b0", "b1")
def refinement_matrix_decision(
    M: MonoidBackend, a0, a1, b0, b1, bound: Optional[int] = None
) -> Decision:
    M.check(a0, a1, b0, b1)
    if not M.eq(M.add(a0, a1), M.add(b0, b1)):
        raise PreconditionError(
            f"{M.format(a0)} + {M.format(a1)} != {M.format(b0)} + {M.format(b1)} in {M.qualname}"
        )
    system = refinement_system(M, a0, a1, b0, b1)
    decision = solve_system_decision(M, system, bound)
    if decision.isTrue:
        return Decision.yes(RefinementMatrix(*decision.witness))
    return decision


def find_refinement_matrix(
    M: MonoidBackend, a0, a1, b0, b1, bound: Optional[int] = None
) -> Optional[RefinementMatrix]:
    """A refinement matrix for a0 + a1 = b0 + b1, or None within the bound.

    Raises:
        PreconditionError: if a0 + a1 != b0 + b1.
    """
    decision = refinement_matrix_decision(M, a0, a1, b0, b1, bound)
    return decision.witness if decision.isTrue else None


def wsd_system(M: MonoidBackend, a0, a1, b, c) -> EquationSystem:
    return EquationSystem(
        2,
        (
            Equation((1, 0), c, (0, 0), M.add(a0, c)),
            Equation((0, 1), c, (0, 0), M.add(a1, c)),
            Equation((1, 1), M.zero, (0, 0), b),
        ),
        names=("x0", "x1"),
    )


@resolve_elements("a0", "a1", "b", "c")
def wsd_instance_decision(
    M: MonoidBackend, a0, a1, b, c, bound: Optional[int] = None
) -> Decision:
    M.check(a0, a1, b, c)
    if not M.eq(M.sum((a0, a1, c)), M.add(b, c)):
        raise PreconditionError(
            f"a0 + a1 + c != b + c for ({M.format(a0)}, {M.format(a1)}, {M.format(b)}, {M.format(c)})"
        )
    if M.isZero(a0):
        return Decision.yes((M.zero, b))
    if M.isZero(a1):
        return Decision.yes((b, M.zero))
    return solve_system_decision(M, wsd_system(M, a0, a1, b, c), bound)


def check_wsd_instance(
    M: MonoidBackend, a0, a1, b, c, bound: Optional[int] = None
) -> Optional[Tuple[Any, Any]]:
    """Witnesses x0 + x1 = b with a_i + c = x_i + c, or None at exhaustion.

    Raises:
        PreconditionError: if a0 + a1 + c != b + c.
    """
    decision = wsd_instance_decision(M, a0, a1, b, c, bound)
    return decision.witness if decision.isTrue else None


@resolve_elements("a")
def normal_division_system(
    M: MonoidBackend, a, p: int, subset: Iterable[Any]
) -> EquationSystem:
    """The system {p.z = a} plus {x + z = y + z : x, y in subset, x + a = y + a}.

    A solution is a p-th part of `a` compatible with the given finite set.
    """
    if p < 1:
        raise PreconditionError(f"p must be >= 1, got {p}")
    subset = list(subset)
    M.check(a, *subset)
    equations = [Equation((p,), M.zero, (0,), a)]
    for i, x in enumerate(subset):
        for y in subset[i + 1 :]:
            if not M.eq(x, y) and M.eq(M.add(x, a), M.add(y, a)):
                equations.append(Equation((1,), x, (1,), y))
    return EquationSystem(1, equations, names=("z",))
