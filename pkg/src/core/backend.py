# The contract every monoid implementation satisfies.
from abc import ABC, abstractmethod
from typing import Any, Iterable, List, Optional, Sequence, Tuple


class DomainMismatchError(ValueError):
    pass


class MonoidBackend(ABC):
    """A commutative monoid presented through its operations.

    Backends with a finite carrier enumerate it completely; the others
    enumerate a ball of bounded size, so every check over them is a bounded
    check. Optional hooks (`downSet`, `exactLeq`, `exactPropto`, `divide`)
    let searches that are bounded by the algebraic preorder finish with a
    definite answer.
    """

    def __init__(self, name: Optional[str] = None):
        self._name = name

    @property
    def name(self) -> str:
        return self._name or "NO_NAME"

    @name.setter
    def name(self, new_name: str) -> None:
        self._name = new_name

    @property
    def qualname(self) -> str:
        return f"{self.__class__.__name__}({self.name})"

    def __str__(self) -> str:
        return f"<M({self.name})>"

    def __repr__(self) -> str:
        return self.__str__()

    @property
    @abstractmethod
    def zero(self) -> Any:
        ...

    @abstractmethod
    def add(self, x: Any, y: Any) -> Any:
        ...

    @abstractmethod
    def contains(self, x: Any) -> bool:
        """Whether x belongs to the element domain of the backend."""

    @abstractmethod
    def enumerate(self, bound: Optional[int] = None) -> List[Any]:
        """Elements in the backend's deterministic order.

        Complete for finite backends (the bound is ignored), a ball of
        bounded size otherwise. No two listed elements are equal.
        """

    @property
    def isComplete(self) -> bool:
        return False

    def eq(self, x: Any, y: Any) -> bool:
        return x == y

    def isZero(self, x: Any) -> bool:
        return self.eq(x, self.zero)

    def check(self, *elements: Any) -> None:
        for x in elements:
            if not self.contains(x):
                raise DomainMismatchError(
                    f"{x!r} is not an element of {self.qualname}"
                )

    def multiple(self, n: int, x: Any) -> Any:
        if n < 0:
            raise ValueError(f"Multiplier must be non-negative, got {n}")
        result = self.zero
        power = x
        while n:
            if n & 1:
                result = self.add(result, power)
            n >>= 1
            if n:
                power = self.add(power, power)
        return result

    def sum(self, elements: Iterable[Any]) -> Any:
        result = self.zero
        for x in elements:
            result = self.add(result, x)
        return result

    def format(self, x: Any) -> str:
        return str(x)

    def dedupe(self, elements: Iterable[Any]) -> List[Any]:
        """Drop elements equal (per `eq`) to an earlier one, keeping order."""
        kept: List[Any] = []
        for x in elements:
            if not any(self.eq(x, y) for y in kept):
                kept.append(x)
        return kept

    def downSet(self, x: Any) -> Optional[Sequence[Any]]:
        """All z with z <= x, when that set is finite and computable."""
        if not self.isComplete:
            return None
        elements = self.enumerate()
        return [
            z
            for z in elements
            if any(self.eq(self.add(z, w), x) for w in elements)
        ]

    def exactLeq(self, x: Any, y: Any) -> Optional[Tuple[bool, Any]]:
        """Decide x <= y exactly: (True, z) with x+z=y, or (False, None).

        None means the backend has no order oracle.
        """
        return None

    def exactPropto(self, x: Any, y: Any) -> Optional[bool]:
        """Decide whether x <= n*y for some n; None when unavailable."""
        return None

    def divide(self, x: Any, n: int) -> Optional[Any]:
        """Some u with n*u = x, when the backend can produce one directly."""
        return None
