# Line-oriented monoid files and equation-system files
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.cones.rational import RationalCone
from src.core.backend import DomainMismatchError, MonoidBackend
from src.core.equations import Equation, EquationSystem, PreconditionError
from src.finite.monoid import FiniteMonoid, InvalidTableError
from src.presentation.presented import PresentedMonoid
from src.presentation.words import Presentation, PresentationError
from src.utils.io import formatRational, parseRational

_NAME_PATTERN = re.compile(r"^[^\s+*=#]+$")
_COEFFICIENT_PATTERN = re.compile(r"^\d+$")

KINDS = ("finite", "presented", "qcone")


class MonoidFileError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _lines(text: str) -> List[Tuple[int, List[str]]]:
    """Non-empty lines as (1-based number, tokens), comments removed."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            lines.append((number, tokens))
    return lines


def _checkName(name: str, line: int) -> str:
    if not _NAME_PATTERN.match(name):
        raise MonoidFileError(f"Invalid name '{name}'", line)
    return name


@dataclass
class Declaration:
    """One `monoid NAME KIND ... end` block.

    Subclasses hold the body in the form it was written, so printing a
    parsed canonical file gives it back unchanged.
    """

    name: str
    line: int

    kind = ""

    def header(self) -> str:
        return f"monoid {self.name} {self.kind}"

    def body(self) -> List[str]:
        raise NotImplementedError

    def build(self) -> MonoidBackend:
        raise NotImplementedError

    def format(self) -> List[str]:
        return [self.header()] + self.body() + ["end"]


@dataclass
class FiniteDeclaration(Declaration):
    elements: Tuple[str, ...] = ()
    sums: Dict[Tuple[str, str], str] = field(default_factory=dict)

    kind = "finite"

    def body(self) -> List[str]:
        lines = [f"elements {' '.join(self.elements)}"]
        for x in self.elements:
            for y in self.elements:
                lines.append(f"add {x} {y} {self.sums[(x, y)]}")
        return lines

    def build(self) -> FiniteMonoid:
        try:
            return FiniteMonoid.fromSums(self.elements, self.sums, self.name)
        except InvalidTableError as e:
            raise MonoidFileError(f"{self.name}: {e}", self.line) from e


@dataclass
class PresentedDeclaration(Declaration):
    presentation: Optional[Presentation] = None

    kind = "presented"

    def body(self) -> List[str]:
        return self.presentation.format()

    def build(self) -> PresentedMonoid:
        return PresentedMonoid.fromPresentation(self.presentation)


@dataclass
class ConeDeclaration(Declaration):
    dimension: int = 1
    generators: Tuple[Tuple[Fraction, ...], ...] = ()

    kind = "qcone"

    def header(self) -> str:
        return f"{super().header()} {self.dimension}"

    def body(self) -> List[str]:
        return [
            "generator " + " ".join(formatRational(a) for a in g)
            for g in self.generators
        ]

    def build(self) -> RationalCone:
        try:
            return RationalCone(self.generators, self.name)
        except ValueError as e:
            raise MonoidFileError(f"{self.name}: {e}", self.line) from e


@dataclass
class MonoidFile:
    declarations: Dict[str, Declaration] = field(default_factory=dict)
    _built: Dict[str, MonoidBackend] = field(default_factory=dict, repr=False)

    @property
    def names(self) -> List[str]:
        return list(self.declarations)

    def monoid(self, name: str) -> MonoidBackend:
        if name not in self.declarations:
            raise MonoidFileError(f"No monoid named '{name}'")
        if name not in self._built:
            self._built[name] = self.declarations[name].build()
        return self._built[name]

    def format(self) -> str:
        blocks = ["\n".join(d.format()) for d in self.declarations.values()]
        return "\n\n".join(blocks) + "\n"


class _Reader:
    def __init__(self, text: str):
        self.lines = _lines(text)
        self.position = 0

    @property
    def done(self) -> bool:
        return self.position >= len(self.lines)

    def next(self, context: str) -> Tuple[int, List[str]]:
        if self.done:
            last = self.lines[-1][0] if self.lines else 1
            raise MonoidFileError(f"Unexpected end of file in {context}", last)
        line = self.lines[self.position]
        self.position += 1
        return line

    def peek(self) -> Optional[str]:
        return None if self.done else self.lines[self.position][1][0]


def _parseFinite(reader: _Reader, declaration: FiniteDeclaration) -> None:
    number, tokens = reader.next(declaration.name)
    if tokens[0] != "elements" or len(tokens) < 2:
        raise MonoidFileError("Expected 'elements NAME+'", number)
    elements = tuple(_checkName(t, number) for t in tokens[1:])
    if len(set(elements)) != len(elements):
        raise MonoidFileError(f"Duplicate element names in {declaration.name}", number)
    declaration.elements = elements

    while reader.peek() == "add":
        number, tokens = reader.next(declaration.name)
        if len(tokens) != 4:
            raise MonoidFileError("Expected 'add NAME NAME NAME'", number)
        x, y, s = tokens[1:]
        for label in (x, y, s):
            if label not in elements:
                raise MonoidFileError(f"Unknown element '{label}'", number)
        if declaration.sums.get((x, y), s) != s:
            raise MonoidFileError(f"Conflicting sums for {x} + {y}", number)
        declaration.sums[(x, y)] = s

    for x in elements:
        for y in elements:
            if (x, y) not in declaration.sums:
                raise MonoidFileError(
                    f"{declaration.name}: missing 'add {x} {y} ...'", declaration.line
                )
            if declaration.sums[(x, y)] != declaration.sums[(y, x)]:
                raise MonoidFileError(
                    f"{declaration.name}: table is not commutative at ({x}, {y})",
                    declaration.line,
                )
    declaration.build()


def _parsePresented(reader: _Reader, declaration: PresentedDeclaration) -> None:
    number, tokens = reader.next(declaration.name)
    if tokens[0] != "generators" or len(tokens) < 2:
        raise MonoidFileError("Expected 'generators NAME+'", number)
    try:
        P = Presentation(tuple(tokens[1:]), name=declaration.name)
        relations = []
        while reader.peek() == "relation":
            number, tokens = reader.next(declaration.name)
            left, equals, right = " ".join(tokens[1:]).partition("=")
            if not equals or "=" in right:
                raise MonoidFileError("Expected 'relation WORD = WORD'", number)
            relations.append((P.parseWord(left), P.parseWord(right)))
        declaration.presentation = Presentation(
            P.generators, tuple(relations), name=declaration.name
        )
    except PresentationError as e:
        raise MonoidFileError(str(e), number) from e


def _parseCone(reader: _Reader, declaration: ConeDeclaration) -> None:
    generators = []
    number = declaration.line
    while reader.peek() == "generator":
        number, tokens = reader.next(declaration.name)
        if len(tokens) - 1 != declaration.dimension:
            raise MonoidFileError(
                f"Expected {declaration.dimension} rationals, got {len(tokens) - 1}",
                number,
            )
        try:
            generator = tuple(parseRational(t) for t in tokens[1:])
        except ValueError as e:
            raise MonoidFileError(str(e), number) from e
        if any(a < 0 for a in generator):
            raise MonoidFileError("Cone generators must be non-negative", number)
        generators.append(generator)
    if not generators:
        raise MonoidFileError(f"{declaration.name}: a cone needs a generator", number)
    declaration.generators = tuple(generators)


def parse(text: str) -> MonoidFile:
    """Parse a monoid file.

    Raises:
        MonoidFileError: with the 1-based line of the first problem.
    """
    reader = _Reader(text)
    monoids = MonoidFile()
    while not reader.done:
        number, tokens = reader.next("file")
        if tokens[0] != "monoid":
            raise MonoidFileError(f"Unknown keyword '{tokens[0]}'", number)
        if len(tokens) < 3:
            raise MonoidFileError("Expected 'monoid NAME KIND'", number)
        name, kind = _checkName(tokens[1], number), tokens[2]
        if name in monoids.declarations:
            raise MonoidFileError(f"Monoid '{name}' is declared twice", number)

        if kind == "finite" and len(tokens) == 3:
            declaration = FiniteDeclaration(name, number)
            _parseFinite(reader, declaration)
        elif kind == "presented" and len(tokens) == 3:
            declaration = PresentedDeclaration(name, number)
            _parsePresented(reader, declaration)
        elif kind == "qcone" and len(tokens) == 4:
            if not _COEFFICIENT_PATTERN.match(tokens[3]) or int(tokens[3]) < 1:
                raise MonoidFileError(f"Invalid cone dimension '{tokens[3]}'", number)
            declaration = ConeDeclaration(name, number, dimension=int(tokens[3]))
            _parseCone(reader, declaration)
        else:
            raise MonoidFileError(
                f"Unknown monoid kind '{' '.join(tokens[2:])}', expected one of {', '.join(KINDS)}",
                number,
            )

        number, tokens = reader.next(name)
        if tokens != ["end"]:
            raise MonoidFileError(f"Unknown keyword '{tokens[0]}' in {name}", number)
        monoids.declarations[name] = declaration
    return monoids


def parseFile(path: Union[str, Path]) -> MonoidFile:
    with open(path) as f:
        return parse(f.read())


def _side(
    M: MonoidBackend, text: str, unknowns: Sequence[str], line: int
) -> Tuple[List[int], object]:
    coefficients = [0] * len(unknowns)
    constant = M.zero
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise MonoidFileError(f"Empty term in '{text.strip()}'", line)
        count, star, token = term.partition("*")
        if star:
            count, token = count.strip(), token.strip()
            if not _COEFFICIENT_PATTERN.match(count):
                raise MonoidFileError(f"Malformed term '{term}'", line)
            count = int(count)
        else:
            count, token = 1, term
        if token in unknowns:
            coefficients[unknowns.index(token)] += count
            continue
        if token == "0":
            continue
        try:
            value = M.element(token)
        except (DomainMismatchError, PresentationError, ValueError) as e:
            raise MonoidFileError(str(e), line) from e
        constant = M.add(constant, M.multiple(count, value))
    return coefficients, constant


def parseSystem(text: str, M: MonoidBackend) -> EquationSystem:
    """Parse `unknowns NAME+` followed by `equation LHS = RHS` lines.

    A term is `INT*TOKEN` or `TOKEN`; tokens naming an unknown are unknowns,
    anything else is a constant read by `M.element`.

    Raises:
        MonoidFileError: with the 1-based line of the first problem.
    """
    unknowns: Optional[List[str]] = None
    equations = []
    for number, tokens in _lines(text):
        keyword = tokens[0]
        if keyword == "unknowns":
            if unknowns is not None:
                raise MonoidFileError("Unknowns are declared twice", number)
            unknowns = [_checkName(t, number) for t in tokens[1:]]
            if not unknowns or len(set(unknowns)) != len(unknowns):
                raise MonoidFileError("Expected distinct unknown names", number)
        elif keyword == "equation":
            if unknowns is None:
                raise MonoidFileError("Equation before 'unknowns'", number)
            left, equals, right = " ".join(tokens[1:]).partition("=")
            if not equals or "=" in right:
                raise MonoidFileError("Expected 'equation LHS = RHS'", number)
            p, a = _side(M, left, unknowns, number)
            q, b = _side(M, right, unknowns, number)
            equations.append(Equation(p, a, q, b))
        else:
            raise MonoidFileError(f"Unknown keyword '{keyword}'", number)
    if unknowns is None:
        raise MonoidFileError("Missing 'unknowns' line")
    try:
        return EquationSystem(len(unknowns), tuple(equations), names=tuple(unknowns))
    except PreconditionError as e:
        raise MonoidFileError(str(e)) from e


def parseSystemFile(path: Union[str, Path], M: MonoidBackend) -> EquationSystem:
    with open(path) as f:
        return parseSystem(f.read(), M)
