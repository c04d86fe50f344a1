# Cayley-table monoids: the exhaustive backend every predicate can be checked on.
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.core.backend import DomainMismatchError, MonoidBackend


class InvalidTableError(ValueError):
    pass


class FiniteMonoid(MonoidBackend):
    """A commutative monoid on {0, ..., n-1} given by its addition table.

    Element 0 is neutral. The table is validated at construction: total,
    commutative, associative over all triples, and 0 acts as identity.
    Instances are immutable and hashable on (labels, table).
    """

    def __init__(
        self,
        labels: Sequence[str],
        table: Sequence[Sequence[int]],
        name: Optional[str] = None,
    ):
        super().__init__(name)
        self._labels = tuple(str(label) for label in labels)
        self._table = tuple(tuple(int(v) for v in row) for row in table)
        self._validate()
        self._index = {label: i for i, label in enumerate(self._labels)}

        # _leq[x][y] is the first z with x + z = y, or None
        n = self.size
        self._leq: List[List[Optional[int]]] = [[None] * n for _ in range(n)]
        for x in range(n):
            for z in range(n):
                y = self._table[x][z]
                if self._leq[x][y] is None:
                    self._leq[x][y] = z

    def _validate(self) -> None:
        n = len(self._labels)
        if n == 0:
            raise InvalidTableError("A monoid needs at least one element")
        if len(set(self._labels)) != n:
            raise InvalidTableError(f"Duplicate element labels in {self._labels}")
        if len(self._table) != n or any(len(row) != n for row in self._table):
            raise InvalidTableError(f"Table must be {n}x{n}")
        for x, row in enumerate(self._table):
            for y, v in enumerate(row):
                if not 0 <= v < n:
                    raise InvalidTableError(
                        f"Entry {self._labels[x]}+{self._labels[y]} out of range: {v}"
                    )
        for x in range(n):
            if self._table[0][x] != x:
                raise InvalidTableError(
                    f"{self._labels[0]} is not neutral: {self._labels[0]}+{self._labels[x]} = {self._labels[self._table[0][x]]}"
                )
            for y in range(x + 1, n):
                if self._table[x][y] != self._table[y][x]:
                    raise InvalidTableError(
                        f"Table is not commutative at ({self._labels[x]}, {self._labels[y]})"
                    )
        t = self._table
        for x, y, z in product(range(n), repeat=3):
            if t[t[x][y]][z] != t[x][t[y][z]]:
                raise InvalidTableError(
                    f"Table is not associative at ({self._labels[x]}, {self._labels[y]}, {self._labels[z]})"
                )

    @classmethod
    def fromOperation(
        cls,
        labels: Sequence[str],
        operation: Callable[[int, int], int],
        name: Optional[str] = None,
    ) -> "FiniteMonoid":
        n = len(labels)
        return cls(
            labels, [[operation(x, y) for y in range(n)] for x in range(n)], name
        )

    @classmethod
    def fromSums(
        cls,
        labels: Sequence[str],
        sums: Dict[Tuple[str, str], str],
        name: Optional[str] = None,
    ) -> "FiniteMonoid":
        """Build from labelled sums; both orders of every pair must agree.

        Raises:
            InvalidTableError: on a missing or conflicting entry.
        """
        index = {label: i for i, label in enumerate(labels)}
        n = len(labels)
        table: List[List[Optional[int]]] = [[None] * n for _ in range(n)]
        for (x, y), s in sums.items():
            for label in (x, y, s):
                if label not in index:
                    raise InvalidTableError(f"Unknown element '{label}'")
            table[index[x]][index[y]] = index[s]
        for x in range(n):
            for y in range(n):
                if table[x][y] is None:
                    table[x][y] = table[y][x]
                if table[x][y] is None:
                    raise InvalidTableError(
                        f"Missing sum {labels[x]} + {labels[y]}"
                    )
                if table[y][x] is not None and table[y][x] != table[x][y]:
                    raise InvalidTableError(
                        f"Table is not commutative at ({labels[x]}, {labels[y]})"
                    )
        return cls(labels, table, name)

    @property
    def size(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def table(self) -> Tuple[Tuple[int, ...], ...]:
        return self._table

    @property
    def zero(self) -> int:
        return 0

    @property
    def isComplete(self) -> bool:
        return True

    def add(self, x: int, y: int) -> int:
        return self._table[x][y]

    def contains(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.size

    def enumerate(self, bound: Optional[int] = None) -> List[int]:
        return list(range(self.size))

    def element(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainMismatchError(
                f"'{label}' is not an element of {self.qualname}"
            ) from None

    def label(self, x: int) -> str:
        return self._labels[x]

    def format(self, x) -> str:
        return self._labels[x]

    def downSet(self, x: int) -> List[int]:
        return [z for z in range(self.size) if self._leq[z][x] is not None]

    def exactLeq(self, x: int, y: int):
        z = self._leq[x][y]
        return (z is not None, z)

    def submonoid(self, elements: Iterable[int], name: Optional[str] = None):
        """The submonoid on the given elements, zero first, in table order.

        Returns the monoid and the list mapping its indices into this one.

        Raises:
            InvalidTableError: if the elements are not closed under addition.
        """
        members = sorted(set(elements) | {0})
        position = {x: i for i, x in enumerate(members)}
        table = []
        for x in members:
            row = []
            for y in members:
                s = self._table[x][y]
                if s not in position:
                    raise InvalidTableError(
                        f"{self.label(x)} + {self.label(y)} = {self.label(s)} leaves the submonoid"
                    )
                row.append(position[s])
            table.append(row)
        labels = [self._labels[x] for x in members]
        return FiniteMonoid(labels, table, name), members

    def formatTable(self) -> str:
        width = max(len(label) for label in self._labels)
        header = " " * width + " | " + " ".join(
            label.rjust(width) for label in self._labels
        )
        lines = [header, "-" * len(header)]
        for x, row in enumerate(self._table):
            lines.append(
                self._labels[x].rjust(width)
                + " | "
                + " ".join(self._labels[v].rjust(width) for v in row)
            )
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteMonoid)
            and self._labels == other._labels
            and self._table == other._table
        )

    def __hash__(self) -> int:
        return hash((self._labels, self._table))
