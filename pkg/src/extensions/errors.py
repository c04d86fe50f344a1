class DegenerateInstanceError(ValueError):
    """A parameter is zero where the construction needs it nonzero."""


class UndecidableBaseError(RuntimeError):
    """The base cannot settle an equality or order question the construction asks."""


def require_decidable(M) -> None:
    if not getattr(M, "isDecidable", True):
        raise UndecidableBaseError(f"Equality in {M.qualname} is not decidable")
