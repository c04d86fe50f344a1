# Amalgamated sums and the single refinement step built from them
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from src.core.backend import MonoidBackend
from src.core.decision import Decision
from src.core.equations import PreconditionError, RefinementMatrix
from src.core.predicates import (
    is_conical,
    is_homomorphism_on,
    is_injective_on,
    is_unitary_extension,
)
from src.finite.monoid import FiniteMonoid
from src.presentation.presented import PresentedMonoid
from src.presentation.rewriting import IncompleteRewriteSystemError
from src.presentation.words import Presentation, PresentationError, Word
from src.utils.config import getSettings
from src.utils.decorators import log_operation

WordLike = Union[Word, str]

R_PLUS_VECTORS = (
    ("alpha0", (1, 1, 0, 0)),
    ("alpha1", (0, 0, 1, 1)),
    ("beta0", (1, 0, 1, 0)),
    ("beta1", (0, 1, 0, 1)),
)


@dataclass(frozen=True)
class RPlus:
    """The positive cone of {x in Z^4 : x0 + x3 = x1 + x2}.

    As a monoid it is presented by alpha0 + alpha1 = beta0 + beta1; `vectors`
    are the generators inside (Z+)^4.
    """

    presentation: Presentation
    vectors: Tuple[Word, ...]

    def contains(self, v: Sequence[int]) -> bool:
        return len(v) == 4 and all(x >= 0 for x in v) and v[0] + v[3] == v[1] + v[2]

    def combination(self, v: Sequence[int]) -> Optional[Tuple[int, int, int, int]]:
        """Coefficients of alpha0, alpha1, beta0, beta1 summing to v, if any.

        Once the alpha0 coefficient is fixed the other three are forced, so
        trying every value of it is an exhaustive search.
        """
        if len(v) != 4 or any(x < 0 for x in v):
            return None
        for alpha0 in range(min(v[0], v[1]) + 1):
            beta0, beta1 = v[0] - alpha0, v[1] - alpha0
            alpha1 = v[2] - beta0
            if alpha1 >= 0 and alpha1 + beta1 == v[3]:
                return (alpha0, alpha1, beta0, beta1)
        return None

    def image(self, w: Word) -> Word:
        return tuple(
            sum(c * vector[i] for c, vector in zip(w, self.vectors)) for i in range(4)
        )


def r_plus() -> RPlus:
    names = tuple(name for name, _ in R_PLUS_VECTORS)
    presentation = Presentation(names, [((1, 1, 0, 0), (0, 0, 1, 1))], name="R+")
    return RPlus(presentation, tuple(vector for _, vector in R_PLUS_VECTORS))


def _asWord(P: Presentation, w: WordLike) -> Word:
    if isinstance(w, str):
        return P.parseWord(w)
    w = tuple(w)
    if len(w) != P.rank:
        raise PresentationError(f"Word {w} does not have {P.rank} entries for {P.name}")
    return w


def pushout(
    A_gens: Sequence[str],
    B: Presentation,
    C: Presentation,
    e_images: Sequence[WordLike],
    f_images: Sequence[WordLike],
    name: Optional[str] = None,
) -> Presentation:
    """Present the amalgamated sum of B and C along e: A -> B and f: A -> C.

    Generators of B come first, then those of C; the relations are those of
    both plus e(a) = f(a) for every generator a of A.
    """
    if not (len(A_gens) == len(e_images) == len(f_images)):
        raise PresentationError(
            f"{len(A_gens)} generators but {len(e_images)} e-images and {len(f_images)} f-images"
        )
    clash = set(B.generators) & set(C.generators)
    if clash:
        raise PresentationError(f"Generators {sorted(clash)} occur in both {B.name} and {C.name}")

    def left(w: Word) -> Word:
        return tuple(w) + C.empty

    def right(w: Word) -> Word:
        return B.empty + tuple(w)

    relations = [(left(u), left(v)) for u, v in B.relations]
    relations += [(right(u), right(v)) for u, v in C.relations]
    for e_image, f_image in zip(e_images, f_images):
        relations.append((left(_asWord(B, e_image)), right(_asWord(C, f_image))))
    return Presentation(
        B.generators + C.generators,
        relations,
        name=name or f"{B.name}+{C.name}",
    )


def to_presentation(M: FiniteMonoid) -> Presentation:
    """One generator per nonzero element and the relations gx + gy = g(x+y)."""
    generators = M.labels[1:]
    rank = len(generators)

    def unit(x: int) -> Word:
        return tuple(1 if i == x - 1 else 0 for i in range(rank))

    relations = []
    for x in range(1, M.size):
        for y in range(x, M.size):
            lhs = tuple(a + b for a, b in zip(unit(x), unit(y)))
            relations.append((lhs, unit(M.add(x, y))))
    return Presentation(generators, relations, name=M.name)


def element_word(M: FiniteMonoid, x: int) -> Word:
    """The word of element x in `to_presentation(M)`."""
    return tuple(1 if i == x - 1 else 0 for i in range(M.size - 1))


@dataclass
class RefinementStep:
    """A refinement matrix for a0 + a1 = b0 + b1 in an extension of M.

    `presentation` and `extension` are None for degenerate instances, whose
    matrix lives in M itself.
    """

    base: MonoidBackend
    instance: Tuple[Any, Any, Any, Any]
    matrix: RefinementMatrix
    presentation: Optional[Presentation] = None
    extension: Optional[PresentedMonoid] = None
    embed: Optional[Callable[[Any], Word]] = None
    assertions: Dict[str, Decision] = field(default_factory=dict)

    @property
    def isDegenerate(self) -> bool:
        return self.extension is None

    @property
    def holds(self) -> bool:
        return not any(d.isFalse for d in self.assertions.values())

    def summary(self) -> List[str]:
        host = self.base if self.isDegenerate else self.extension
        lines = [f"matrix {self.matrix.format(host)}"]
        if self.presentation is not None:
            lines += self.presentation.format()
            lines += self.extension.system.format()
        lines += [f"assert {name} {decision}" for name, decision in self.assertions.items()]
        return lines


def _base(M, max_iterations: Optional[int]):
    """The backend for M, its presentation, and the word of each element."""
    if isinstance(M, FiniteMonoid):
        return M, to_presentation(M), lambda x: element_word(M, x)
    if isinstance(M, Presentation):
        M = PresentedMonoid.fromPresentation(M, max_iterations)
    if isinstance(M, PresentedMonoid):
        if not M.isDecidable:
            raise IncompleteRewriteSystemError(f"Rewrite system for {M.name} is {M.system}")
        return M, M.presentation, M.normal
    raise TypeError(f"Cannot build a refinement step over {type(M).__name__}")


def _freshNames(taken: Sequence[str]) -> List[str]:
    names = [f"e{i}" for i in range(4)]
    while set(names) & set(taken):
        names = [f"{n}'" for n in names]
    return names


def _degenerateMatrix(M: MonoidBackend, a0, a1, b0, b1) -> RefinementMatrix:
    zero = M.zero
    if M.isZero(a0):
        return RefinementMatrix(zero, zero, b0, b1)
    if M.isZero(a1):
        return RefinementMatrix(b0, b1, zero, zero)
    if M.isZero(b0):
        return RefinementMatrix(zero, a0, zero, a1)
    return RefinementMatrix(a0, zero, a1, zero)


@log_operation()
def refinement_step(
    M: Union[FiniteMonoid, Presentation, PresentedMonoid],
    a0,
    a1,
    b0,
    b1,
    max_iterations: Optional[int] = None,
    bound: Optional[int] = None,
) -> RefinementStep:
    """Adjoin e0..e3 with e0+e1 = a0, e2+e3 = a1, e0+e2 = b0, e1+e3 = b1.

    This is the amalgamated sum of (Z+)^4 and M along R+. The adjoined
    generators are eliminated first, so an element of the extension lies in
    the copy of M exactly when its normal form avoids them. Cofinality of
    that copy follows from the matrix identities; the other unitary
    conditions, injectivity and conicality are checked on the ball.

    Raises:
        PreconditionError: if a0 + a1 != b0 + b1 in M.
        IncompleteRewriteSystemError: if a completion hits its cap.
    """
    base, P, toWord = _base(M, max_iterations)
    bound = getSettings().ball_bound if bound is None else bound
    a0, a1, b0, b1 = (
        base.element(x) if isinstance(x, str) else x for x in (a0, a1, b0, b1)
    )
    base.check(a0, a1, b0, b1)
    if not base.eq(base.add(a0, a1), base.add(b0, b1)):
        raise PreconditionError(
            f"{base.format(a0)} + {base.format(a1)} != {base.format(b0)} + {base.format(b1)} in {base.name}"
        )

    instance = (a0, a1, b0, b1)
    if any(base.isZero(x) for x in instance):
        matrix = _degenerateMatrix(base, *instance)
        return RefinementStep(
            base,
            instance,
            matrix,
            assertions={"matrix": Decision.of(matrix.verify(base, *instance))},
        )

    names = _freshNames(P.generators)
    B = Presentation(tuple(names), name="(Z+)^4")
    A = r_plus()
    N = pushout(
        A.presentation.generators,
        B,
        P,
        A.vectors,
        [toWord(x) for x in instance],
        name=f"{base.name}'",
    ).eliminating(names)
    extension = PresentedMonoid.fromPresentation(N, max_iterations)
    if not extension.isDecidable:
        raise IncompleteRewriteSystemError(f"Rewrite system for {N.name} is {extension.system}")

    def embed(x) -> Word:
        return extension.normal(B.empty + toWord(x))

    def inCopy(x: Word) -> bool:
        return not any(extension.normal(x)[:4])

    matrix = RefinementMatrix(*(extension.generator(n) for n in names))
    images = [embed(x) for x in instance]
    assertions = {
        "matrix": Decision.of(matrix.verify(extension, *images)),
        "homomorphism": is_homomorphism_on(embed, base, extension, bound),
        "injective": is_injective_on(embed, base, extension, bound),
        "conical": is_conical(extension, bound),
        "unitary": is_unitary_extension(
            inCopy, extension, bound, strong=True, cofinal=False
        ),
    }
    return RefinementStep(base, instance, matrix, N, extension, embed, assertions)
