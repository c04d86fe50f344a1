"""Check results collected for printing; serialization is byte-stable."""
from dataclasses import dataclass, field
from typing import Any, Iterable, List, Optional, Sequence

from src.core.decision import Decision
from src.utils.io import stableIdentifier

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


@dataclass
class Record:
    check: str
    subject: str
    decision: Decision
    expected: bool = True
    certificate: Optional[str] = None
    details: Sequence[str] = ()
    elapsed: float = 0.0

    @property
    def id(self) -> str:
        return stableIdentifier(self.check, self.subject)

    @property
    def failed(self) -> bool:
        if self.decision.isUnknown:
            return False
        return self.decision.isTrue != self.expected

    def lines(self, timings: bool = False) -> List[str]:
        head = f"{self.id} {self.check} {self.subject} {self.decision}"
        if not self.expected:
            head += " expected False"
        if self.failed:
            head += " FAILED"
        lines = [head]
        if self.certificate is not None:
            lines.append(f"  witness {self.certificate}")
        lines += [f"  {line}" for line in self.details]
        if timings:
            lines.append(f"  elapsed {self.elapsed:.3f}s")
        return lines


@dataclass
class Report:
    title: str
    records: List[Record] = field(default_factory=list)

    def add(
        self,
        check: str,
        subject: str,
        decision: Decision,
        expected: bool = True,
        certificate: Any = None,
        details: Iterable[str] = (),
        elapsed: float = 0.0,
    ) -> Record:
        record = Record(
            check,
            subject,
            decision,
            expected,
            None if certificate is None else str(certificate),
            tuple(details),
            elapsed,
        )
        self.records.append(record)
        return record

    def extend(self, other: "Report") -> None:
        self.records.extend(other.records)

    @property
    def failures(self) -> List[Record]:
        return [r for r in self.records if r.failed]

    @property
    def unknowns(self) -> List[Record]:
        return [r for r in self.records if r.decision.isUnknown]

    @property
    def exitCode(self) -> int:
        if self.failures:
            return EXIT_FAILED
        if self.unknowns:
            return EXIT_UNKNOWN
        return EXIT_OK

    def serialize(self, timings: bool = False) -> str:
        lines = [f"report {self.title}"]
        for record in self.records:
            lines += record.lines(timings)
        counts = (
            f"{len(self.records)} records, {len(self.failures)} failed, "
            f"{len(self.unknowns)} unknown"
        )
        lines.append(counts)
        return "\n".join(lines) + "\n"
