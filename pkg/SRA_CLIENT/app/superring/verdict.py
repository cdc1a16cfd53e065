"""Tri-state answers of the decision procedures."""

from dataclasses import dataclass
from enum import Enum
from typing import Any


class Verdict(Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> "Verdict":
        return cls.TRUE if flag else cls.FALSE

    def __bool__(self):
        return self is Verdict.TRUE

    def __str__(self):
        return self.value


def conjunction(*verdicts: Verdict) -> Verdict:
    """FALSE if any is FALSE, else UNKNOWN if any is UNKNOWN, else TRUE."""
    if any(v is Verdict.FALSE for v in verdicts):
        return Verdict.FALSE
    if any(v is Verdict.UNKNOWN for v in verdicts):
        return Verdict.UNKNOWN
    return Verdict.TRUE


@dataclass(frozen=True)
class Decision:
    """A verdict with the witness or certificate that supports it."""

    verdict: Verdict
    witness: Any = None
    reason: str = ""

    def __str__(self):
        text = self.verdict.value
        if self.reason:
            text += f" ({self.reason})"
        return text
