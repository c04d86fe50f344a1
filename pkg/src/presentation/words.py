# Words over generators and finite presentations of commutative monoids
import re
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.utils.io import formatWord

Word = Tuple[int, ...]
Relation = Tuple[Word, Word]

_NAME_PATTERN = re.compile(r"^[^\s+*=#]+$")


class PresentationError(ValueError):
    pass


def add_words(u: Word, v: Word) -> Word:
    return tuple(a + b for a, b in zip(u, v))


def subtract_words(u: Word, v: Word) -> Word:
    """u - v, for v <= u componentwise."""
    return tuple(a - b for a, b in zip(u, v))


def divides(u: Word, v: Word) -> bool:
    """u occurs inside v, i.e. u <= v componentwise."""
    return all(a <= b for a, b in zip(u, v))


def overlap(u: Word, v: Word) -> Word:
    """Smallest word containing both u and v."""
    return tuple(max(a, b) for a, b in zip(u, v))


def degree(w: Word) -> int:
    return sum(w)


@dataclass(frozen=True)
class Presentation:
    """Generators and relations of a commutative monoid.

    Words compare by the graded-lexicographic order: total degree first,
    then the exponent tuple with generator 0 most significant. Generators
    listed in `eliminated` take priority over degree, so words using them
    are larger than every word that does not.
    """

    generators: Tuple[str, ...]
    relations: Tuple[Relation, ...] = ()
    eliminated: Tuple[int, ...] = field(default=())
    name: str = "P"

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(
            self, "relations", tuple((tuple(u), tuple(v)) for u, v in self.relations)
        )
        object.__setattr__(self, "eliminated", tuple(sorted(set(self.eliminated))))

        if len(set(self.generators)) != len(self.generators):
            raise PresentationError(f"Duplicate generator names in {self.generators}")
        for generator in self.generators:
            if not _NAME_PATTERN.match(generator) or generator == "0":
                raise PresentationError(f"Invalid generator name '{generator}'")
        for u, v in self.relations:
            for w in (u, v):
                if len(w) != self.rank:
                    raise PresentationError(
                        f"Relation word {w} does not have {self.rank} entries"
                    )
                if any(not isinstance(a, int) or a < 0 for a in w):
                    raise PresentationError(f"Negative exponent in {w}")
        if any(i < 0 or i >= self.rank for i in self.eliminated):
            raise PresentationError(f"Eliminated index out of range: {self.eliminated}")

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def empty(self) -> Word:
        return (0,) * self.rank

    def generator(self, name: str) -> Word:
        try:
            index = self.generators.index(name)
        except ValueError:
            raise PresentationError(f"Unknown generator '{name}' in {self.name}")
        return tuple(1 if i == index else 0 for i in range(self.rank))

    def word(self, exponents: Dict[str, int]) -> Word:
        w = list(self.empty)
        for name, exponent in exponents.items():
            if name not in self.generators:
                raise PresentationError(f"Unknown generator '{name}' in {self.name}")
            w[self.generators.index(name)] += exponent
        return tuple(w)

    def parseWord(self, text: str) -> Word:
        """Parse `0`, or `INT*NAME + ...`; a bare NAME stands for 1*NAME."""
        text = text.strip()
        if text == "0":
            return self.empty
        if not text:
            raise PresentationError("Empty word")
        w = list(self.empty)
        for term in text.split("+"):
            term = term.strip()
            coefficient, star, name = term.partition("*")
            if not star:
                coefficient, name = "1", term
            coefficient, name = coefficient.strip(), name.strip()
            if not coefficient.isdigit():
                raise PresentationError(f"Malformed term '{term}' in word '{text}'")
            if name not in self.generators:
                raise PresentationError(f"Unknown generator '{name}' in word '{text}'")
            w[self.generators.index(name)] += int(coefficient)
        return tuple(w)

    def formatWord(self, w: Sequence[int]) -> str:
        return formatWord(w, self.generators)

    def key(self, w: Word) -> Tuple:
        return (sum(w[i] for i in self.eliminated), degree(w), tuple(w))

    def orient(self, u: Word, v: Word) -> Optional[Relation]:
        """The relation as a rule from the larger word to the smaller one."""
        if u == v:
            return None
        return (u, v) if self.key(u) > self.key(v) else (v, u)

    def eliminating(self, names: Iterable[str]) -> "Presentation":
        indices = [self.generators.index(name) for name in names]
        return replace(self, eliminated=tuple(indices))

    def format(self) -> List[str]:
        lines = [f"generators {' '.join(self.generators)}"]
        for u, v in self.relations:
            lines.append(f"relation {self.formatWord(u)} = {self.formatWord(v)}")
        return lines
