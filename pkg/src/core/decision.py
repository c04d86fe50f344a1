"""Three-valued answers for bounded checks."""
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional


class Verdict(Enum):
    TRUE = "True"
    FALSE = "False"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Decision:
    """True, False, or Unknown(bound) together with an optional witness.

    For an existential check the witness proves True; for a universally
    quantified check it is the counterexample behind False. Unknown records
    the bound whose search was exhausted without settling the question.
    """

    verdict: Verdict
    bound: Optional[int] = None
    witness: Any = None

    @classmethod
    def yes(cls, witness: Any = None) -> "Decision":
        return cls(Verdict.TRUE, witness=witness)

    @classmethod
    def no(cls, witness: Any = None) -> "Decision":
        return cls(Verdict.FALSE, witness=witness)

    @classmethod
    def unknown(cls, bound: Optional[int]) -> "Decision":
        return cls(Verdict.UNKNOWN, bound=bound)

    @classmethod
    def of(cls, value: bool, witness: Any = None) -> "Decision":
        return cls.yes(witness) if value else cls.no(witness)

    @property
    def isTrue(self) -> bool:
        return self.verdict is Verdict.TRUE

    @property
    def isFalse(self) -> bool:
        return self.verdict is Verdict.FALSE

    @property
    def isUnknown(self) -> bool:
        return self.verdict is Verdict.UNKNOWN

    def __bool__(self):
        raise TypeError(
            "Decision is three-valued; use isTrue/isFalse/isUnknown"
        )

    def __and__(self, other: "Decision") -> "Decision":
        if self.isFalse:
            return self
        if other.isFalse:
            return other
        if self.isUnknown:
            return self
        if other.isUnknown:
            return other
        return Decision.yes((self.witness, other.witness))

    def __str__(self) -> str:
        if self.isUnknown:
            return f"Unknown({self.bound})"
        return self.verdict.value

    def __repr__(self) -> str:
        return f"<D({self}, {self.witness!r})>"
