"""Families of finite monoids and the product construction."""
from itertools import product
from typing import Optional

from src.finite.monoid import FiniteMonoid


def direct_product(
    M: FiniteMonoid, N: FiniteMonoid, name: Optional[str] = None
) -> FiniteMonoid:
    """M x N with componentwise addition; labels are `x.y`, M's index major."""
    pairs = list(product(range(M.size), range(N.size)))
    index = {pair: i for i, pair in enumerate(pairs)}
    labels = [f"{M.label(x)}.{N.label(y)}" for x, y in pairs]

    def operation(i: int, j: int) -> int:
        (x0, y0), (x1, y1) = pairs[i], pairs[j]
        return index[(M.add(x0, x1), N.add(y0, y1))]

    return FiniteMonoid.fromOperation(
        labels, operation, name or f"{M.name}x{N.name}"
    )


def truncated_naturals(top: int, name: Optional[str] = None) -> FiniteMonoid:
    """{0, 1, ..., top-1, inf}: sums reaching `top` become inf."""
    if top < 1:
        raise ValueError(f"top must be >= 1, got {top}")
    labels = [str(i) for i in range(top)] + ["inf"]
    return FiniteMonoid.fromOperation(
        labels, lambda x, y: min(x + y, top), name or f"trunc{top}"
    )


def cyclic_monoid(
    index: int, period: int, name: Optional[str] = None
) -> FiniteMonoid:
    """<g | index.g = (index+period).g> on 0, g, 2g, ..., (index+period-1)g."""
    if index < 0 or period < 1:
        raise ValueError(f"Need index >= 0 and period >= 1, got {index}, {period}")
    n = index + period

    def reduce(s: int) -> int:
        return s if s < n else index + (s - index) % period

    labels = ["0"] + ["g" if i == 1 else f"{i}g" for i in range(1, n)]
    return FiniteMonoid.fromOperation(
        labels, lambda x, y: reduce(x + y), name or f"cyclic{index}.{period}"
    )


def chain_semilattice(length: int, name: Optional[str] = None) -> FiniteMonoid:
    """{0, ..., length-1} under max."""
    labels = [str(i) for i in range(length)]
    return FiniteMonoid.fromOperation(labels, max, name or f"chain{length}")


def free_semilattice(rank: int, name: Optional[str] = None) -> FiniteMonoid:
    """Subsets of `rank` generators under union, as bitmasks."""
    generators = "abcdefgh"[:rank]
    labels = [
        "".join(g for bit, g in enumerate(generators) if mask >> bit & 1) or "0"
        for mask in range(1 << rank)
    ]
    return FiniteMonoid.fromOperation(
        labels, lambda x, y: x | y, name or f"semilattice{rank}"
    )


def zero_adjoined_group(order: int, name: Optional[str] = None) -> FiniteMonoid:
    """{0} together with a cyclic group Z/order whose identity is `e`."""
    labels = ["0", "e"] + [f"g{i}" for i in range(1, order)]

    def operation(x: int, y: int) -> int:
        if x == 0 or y == 0:
            return x or y
        return 1 + ((x - 1) + (y - 1)) % order

    return FiniteMonoid.fromOperation(labels, operation, name or f"zeroZ{order}")
