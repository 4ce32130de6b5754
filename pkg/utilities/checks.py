"""Outcome of an identity or axiom check."""

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Any = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return {"name": self.name, "pass": self.passed, "witness": self.witness}


def first_failure(name, failures):
    """Build a CheckResult from an iterator that yields failure witnesses."""
    for witness in failures:
        return CheckResult(name, False, witness)
    return CheckResult(name, True)
