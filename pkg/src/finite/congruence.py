# Congruences on finite monoids, their closure and the least quotients.
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from src.core.pset import PSet
from src.finite.monoid import FiniteMonoid
from src.utils.config import getSettings
from src.utils.decorators import enforce_type, log_operation
from src.utils.logger import getLogger


class CongruenceError(ValueError):
    pass


class Congruence:
    """A partition of a finite monoid compatible with addition.

    Classes are numbered by their first element, so the class of 0 is 0.
    """

    def __init__(self, monoid: FiniteMonoid, assignment: Sequence[int]):
        if len(assignment) != monoid.size:
            raise CongruenceError(
                f"Partition covers {len(assignment)} of {monoid.size} elements"
            )
        renumber = {}
        for c in assignment:
            renumber.setdefault(c, len(renumber))
        self._monoid = monoid
        self._classes = tuple(renumber[c] for c in assignment)
        self._check()

    def _check(self) -> None:
        M, classes = self._monoid, self._classes
        representative = {}
        for x, c in enumerate(classes):
            representative.setdefault(c, x)
        for x, c in enumerate(classes):
            r = representative[c]
            for y in range(M.size):
                if classes[M.add(x, y)] != classes[M.add(r, y)]:
                    raise CongruenceError(
                        f"Partition is not compatible: {M.label(x)} ~ {M.label(r)} but "
                        f"{M.label(M.add(x, y))} !~ {M.label(M.add(r, y))}"
                    )

    @classmethod
    def identity(cls, monoid: FiniteMonoid) -> "Congruence":
        return cls(monoid, range(monoid.size))

    @property
    def monoid(self) -> FiniteMonoid:
        return self._monoid

    @property
    def classes(self) -> Tuple[int, ...]:
        return self._classes

    @property
    def size(self) -> int:
        return max(self._classes) + 1

    @property
    def isIdentity(self) -> bool:
        return self.size == self._monoid.size

    @property
    def blocks(self) -> List[List[int]]:
        blocks: List[List[int]] = [[] for _ in range(self.size)]
        for x, c in enumerate(self._classes):
            blocks[c].append(x)
        return blocks

    def classOf(self, x: int) -> int:
        return self._classes[x]

    def related(self, x: int, y: int) -> bool:
        return self._classes[x] == self._classes[y]

    def pairs(self) -> List[Tuple[int, int]]:
        """Generating pairs: each element with the first element of its class."""
        return [(block[0], x) for block in self.blocks for x in block[1:]]

    def __le__(self, other: "Congruence") -> bool:
        n = self._monoid.size
        return all(
            other.related(x, y)
            for x in range(n)
            for y in range(x + 1, n)
            if self.related(x, y)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Congruence)
            and self._monoid == other._monoid
            and self._classes == other._classes
        )

    def __hash__(self) -> int:
        return hash(self._classes)

    def format(self) -> str:
        M = self._monoid
        return " ".join(
            "{" + ",".join(M.label(x) for x in block) + "}" for block in self.blocks
        )

    def __str__(self) -> str:
        return f"<C({self.format()})>"

    def __repr__(self) -> str:
        return self.__str__()


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> bool:
        i, j = self.find(i), self.find(j)
        if i == j:
            return False
        # smaller index stays the root
        if j < i:
            i, j = j, i
        self.parent[j] = i
        return True


@enforce_type(M="FiniteMonoid")
def congruence_closure(
    M: FiniteMonoid, pairs: Iterable[Tuple[int, int]]
) -> Congruence:
    """The smallest congruence containing the given pairs.

    Each newly merged pair has its translates by every element queued, so
    the fixpoint is closed under addition.
    """
    sets = _UnionFind(M.size)
    worklist = [(M.element(x) if isinstance(x, str) else x,
                 M.element(y) if isinstance(y, str) else y) for x, y in pairs]
    M.check(*(x for pair in worklist for x in pair))
    while worklist:
        x, y = worklist.pop()
        if sets.union(x, y):
            for z in range(M.size):
                worklist.append((M.add(x, z), M.add(y, z)))
    return Congruence(M, [sets.find(x) for x in range(M.size)])


def quotient(M: FiniteMonoid, congruence: Congruence) -> FiniteMonoid:
    """M modulo the congruence; each class is labelled by its first element."""
    blocks = congruence.blocks
    labels = [M.label(block[0]) for block in blocks]
    table = [
        [congruence.classOf(M.add(bx[0], by[0])) for by in blocks] for bx in blocks
    ]
    return FiniteMonoid(labels, table, f"{M.name}/~")


def projection(congruence: Congruence) -> Callable[[int], int]:
    return congruence.classOf


Relation = Callable[[FiniteMonoid, int, int], bool]


def _leastCongruence(M: FiniteMonoid, related: Relation, label: str):
    """Iterate `related` on successive quotients until nothing collapses.

    The result is the least congruence whose quotient satisfies the
    property `related` detects, when every congruence with that property
    contains the relation.
    """
    congruence = Congruence.identity(M)
    while True:
        Q = quotient(M, congruence)
        blocks = congruence.blocks
        fresh = [
            (blocks[x][0], blocks[y][0])
            for x in range(Q.size)
            for y in range(x + 1, Q.size)
            if related(Q, x, y)
        ]
        if not fresh:
            getLogger().debug(
                f"{label} congruence of {M.name}: {congruence.format()}",
                _leastCongruence,
            )
            return Q, congruence
        congruence = congruence_closure(M, congruence.pairs() + fresh)


def _cancellatively(M: FiniteMonoid, x: int, y: int) -> bool:
    return any(M.add(x, z) == M.add(y, z) for z in range(M.size))


def _separatively(M: FiniteMonoid, x: int, y: int) -> bool:
    # n.x + y = (n+1).x and x + n.y = (n+1).y for some n <= |M| + 1
    nx, ny = x, y
    for _ in range(M.size + 1):
        if M.add(nx, y) == M.add(nx, x) and M.add(x, ny) == M.add(ny, y):
            return True
        nx, ny = M.add(nx, x), M.add(ny, y)
    return False


def _antisymmetrically(M: FiniteMonoid, x: int, y: int) -> bool:
    return M.exactLeq(x, y)[0] and M.exactLeq(y, x)[0]


@log_operation()
def cancellative_quotient(M: FiniteMonoid):
    """Least congruence with cancellative quotient: x ~ y iff x+z = y+z."""
    return _leastCongruence(M, _cancellatively, "cancellative")


@log_operation()
def separative_quotient(M: FiniteMonoid):
    return _leastCongruence(M, _separatively, "separative")


@log_operation()
def p_torsion_quotient(M: FiniteMonoid, P: PSet):
    """Least congruence with P-torsion-free quotient: x ~ y iff p.x = p.y."""

    def related(Q: FiniteMonoid, x: int, y: int) -> bool:
        return any(Q.multiple(p, x) == Q.multiple(p, y) for p in P.generators)

    return _leastCongruence(M, related, f"{P}-torsion")


@log_operation()
def antisymmetric_quotient(M: FiniteMonoid):
    """Collapse x and y whenever x <= y <= x, until the order is antisymmetric."""
    return _leastCongruence(M, _antisymmetrically, "antisymmetric")


def _restrictedGrowthStrings(n: int) -> Iterator[List[int]]:
    if n == 0:
        yield []
        return
    word = [0] * n

    def fill(position: int, top: int):
        if position == n:
            yield list(word)
            return
        for c in range(top + 2):
            word[position] = c
            yield from fill(position + 1, max(top, c))

    yield from fill(1, 0)


@log_operation()
def all_congruences(
    M: FiniteMonoid, limit: Optional[int] = None
) -> List[Congruence]:
    """Every congruence of M, via all set partitions of its elements.

    Raises:
        ValueError: if M is larger than the configured enumeration limit.
    """
    limit = getSettings().congruence_enumeration_limit if limit is None else limit
    if M.size > limit:
        raise ValueError(
            f"Congruence enumeration is limited to {limit} elements, {M.name} has {M.size}"
        )
    congruences = []
    for word in _restrictedGrowthStrings(M.size):
        try:
            congruences.append(Congruence(M, word))
        except CongruenceError:
            continue
    return congruences
