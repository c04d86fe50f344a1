from dataclasses import dataclass
from typing import Iterable, List, Tuple


@dataclass(frozen=True)
class PSet:
    """A multiplicative subsemigroup of N given by generators, all >= 2.

    Torsion-freeness and unperforation for p and q imply them for pq, so
    checks only iterate over the generators.
    """

    generators: Tuple[int, ...]

    def __init__(self, generators: Iterable[int]):
        generators = tuple(sorted(set(int(p) for p in generators)))
        if not generators:
            raise ValueError("A multiplicative set needs at least one generator")
        if any(p < 2 for p in generators):
            raise ValueError(f"Generators must be >= 2, got {generators}")
        object.__setattr__(self, "generators", generators)

    @classmethod
    def parse(cls, text: str) -> "PSet":
        """Parse a comma-separated list such as `2,3`."""
        try:
            return cls(int(token) for token in text.split(",") if token.strip())
        except ValueError as e:
            raise ValueError(f"Malformed multiplicative set '{text}': {e}") from e

    def __contains__(self, n: int) -> bool:
        if n < 2:
            return False
        if n in self.generators:
            return True
        return any(n % p == 0 and (n // p) in self for p in self.generators)

    def elements(self, up_to: int) -> List[int]:
        """All members of the semigroup that are <= up_to, ascending."""
        return [n for n in range(2, up_to + 1) if n in self]

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.generators) + "}"
