"""Three-valued membership verdicts and check reports."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


class Status(str, enum.Enum):
    IN = "in"
    OUT = "out"
    INCONCLUSIVE = "inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass
class Verdict:
    """Outcome of a spectrum-membership question.

    ``evidence`` holds the numbers the decision was made from (sup values,
    growth factors, partial products) so the verdict can be re-derived
    offline.
    """

    status: Status
    evidence: dict[str, Any] = field(default_factory=dict)
    witness: Any = None
    reason: str | None = None

    @property
    def is_in(self) -> bool:
        return self.status is Status.IN

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"status": self.status.value, "evidence": self.evidence}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        return out


@dataclass
class Report:
    """Result of checking an inequality family on a finite window.

    Violations are collected rather than raised.
    """

    passed: bool
    checked: int
    violations: list[dict[str, Any]] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "violations": self.violations,
            "details": self.details,
        }
