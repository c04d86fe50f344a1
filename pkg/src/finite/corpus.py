"""The curated set of small monoids that sweeps and examples run over."""
from typing import Callable, Dict, List, Optional

from src.finite.constructions import (
    chain_semilattice,
    cyclic_monoid,
    direct_product,
    free_semilattice,
    truncated_naturals,
    zero_adjoined_group,
)
from src.finite.monoid import FiniteMonoid


def _trivial() -> FiniteMonoid:
    return FiniteMonoid(["0"], [[0]], "trivial")


CORPUS: Dict[str, Callable[[], FiniteMonoid]] = {
    "trivial": _trivial,
    "boolean": lambda: chain_semilattice(2, "boolean"),
    "chain3": lambda: chain_semilattice(3, "chain3"),
    "semilattice2": lambda: free_semilattice(2, "semilattice2"),
    "z2": lambda: cyclic_monoid(0, 2, "z2"),
    "z3": lambda: cyclic_monoid(0, 3, "z3"),
    # {0, 1, inf} with 1 + 1 = inf
    "threechain": lambda: truncated_naturals(2, "threechain"),
    "fourchain": lambda: truncated_naturals(3, "fourchain"),
    # <g | 2g = 3g>
    "idempotent2": lambda: cyclic_monoid(2, 1, "idempotent2"),
    # <g | g = 3g>
    "periodic2": lambda: cyclic_monoid(1, 2, "periodic2"),
    "zeroZ2": lambda: zero_adjoined_group(2, "zeroZ2"),
    "zeroZ3": lambda: zero_adjoined_group(3, "zeroZ3"),
    "boolean_x_boolean": lambda: direct_product(
        chain_semilattice(2, "boolean"), chain_semilattice(2, "boolean"),
        "boolean_x_boolean",
    ),
    "boolean_x_threechain": lambda: direct_product(
        chain_semilattice(2, "boolean"), truncated_naturals(2, "threechain"),
        "boolean_x_threechain",
    ),
    "threechain_x_idempotent2": lambda: direct_product(
        truncated_naturals(2, "threechain"), cyclic_monoid(2, 1, "idempotent2"),
        "threechain_x_idempotent2",
    ),
    "z2_x_boolean": lambda: direct_product(
        cyclic_monoid(0, 2, "z2"), chain_semilattice(2, "boolean"),
        "z2_x_boolean",
    ),
}


def corpus_monoid(name: str) -> FiniteMonoid:
    try:
        return CORPUS[name]()
    except KeyError:
        raise KeyError(f"No corpus monoid named '{name}'") from None


def corpus_monoids(max_size: Optional[int] = None) -> List[FiniteMonoid]:
    monoids = [build() for build in CORPUS.values()]
    if max_size is not None:
        monoids = [M for M in monoids if M.size <= max_size]
    return monoids
