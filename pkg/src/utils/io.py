from fractions import Fraction
from typing import Iterable, Sequence, Union

from shortuuid import ShortUUID


def stableIdentifier(*parts: object, length: int = 10) -> str:
    """Generate a short identifier that depends only on the given parts.

    Reports must be byte-identical across runs, so identifiers are derived
    from names instead of being random.
    """
    name = "/".join(str(part) for part in parts)
    return ShortUUID().uuid(name=name)[:length]


def parseRational(token: str) -> Fraction:
    """Parse `INT` or `INT/INT` into an exact rational.

    Raises:
        ValueError: if the token is not an integer or a fraction of integers.
    """
    token = token.strip()
    if token.count("/") > 1 or not token:
        raise ValueError(f"Malformed rational '{token}'")
    numerator, _, denominator = token.partition("/")
    try:
        value = Fraction(int(numerator), int(denominator) if denominator else 1)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Malformed rational '{token}'") from e
    return value


def formatRational(value: Union[Fraction, int]) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def formatVector(values: Iterable[Union[Fraction, int]]) -> str:
    return ",".join(formatRational(value) for value in values)


def formatWord(exponents: Sequence[int], names: Sequence[str]) -> str:
    """Write an exponent vector as `2*a + 1*b`, or `0` for the empty word."""
    terms = [
        f"{exponent}*{name}"
        for exponent, name in zip(exponents, names)
        if exponent
    ]
    return " + ".join(terms) if terms else "0"
