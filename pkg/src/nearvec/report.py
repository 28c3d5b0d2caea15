"""Structured pass/fail reports returned by the verification operations."""

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a check: overall verdict, counters, and any violations.

    ``details`` holds JSON-friendly summary values; ``violations`` holds one
    JSON-friendly record per failed case (empty when ``passed``).
    """

    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    def to_json(self):
        return {
            "check": self.name,
            "passed": self.passed,
            "details": self.details,
            "violations": self.violations,
        }

    def __bool__(self):
        return self.passed
