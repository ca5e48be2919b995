"""Verification reports shared by every checker."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

__all__ = ["Check", "VerificationReport", "StructureError", "VerificationFailed", "run_identity"]


class StructureError(ValueError):
    """Inconsistent input detected before any identity is checked."""


@dataclass(frozen=True)
class Check:
    """Outcome of one identity, checked exhaustively over basis tuples.

    ``anchor`` names the identity as a formula so a failure can be traced
    back to the mathematics it encodes.  A failing check always carries a
    witness: the basis labels where the two sides differ, plus both sides.
    """

    name: str
    anchor: str
    passed: bool
    witness: tuple = ()
    lhs: str = ""
    rhs: str = ""
    cases: int = 0
    expected: bool = True

    @property
    def ok(self) -> bool:
        return self.passed == self.expected

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "passed": self.passed,
            "expected": self.expected,
            "cases": self.cases,
            "witness": list(self.witness),
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def ok(self) -> bool:
        """True when every check came out as expected."""
        return all(c.ok for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport", prefix: str = "") -> "VerificationReport":
        for c in other.checks:
            self.checks.append(replace(c, name=prefix + c.name) if prefix else c)
        return self

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def expect(self, name: str, passed: bool) -> None:
        """Declare the expected outcome of a check (default is pass)."""
        for i, c in enumerate(self.checks):
            if c.name == name:
                self.checks[i] = replace(c, expected=passed)
                return
        raise KeyError(name)

    def sorted(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.name)

    def to_dict(self) -> dict:
        return {"checks": [c.to_dict() for c in self.sorted()]}

    def to_json(self, **extra) -> str:
        body = dict(extra)
        body.update(self.to_dict())
        return json.dumps(body, indent=2, sort_keys=False, ensure_ascii=False)

    def format_text(self) -> str:
        lines = []
        for c in self.sorted():
            status = "PASS" if c.passed else "FAIL"
            note = "" if c.expected else " (expected failure)"
            lines.append(f"{status} {c.name} [{c.anchor}] ({c.cases} cases){note}")
            if not c.passed:
                lines.append(f"     witness: {', '.join(map(str, c.witness))}")
                lines.append(f"     lhs: {c.lhs}")
                lines.append(f"     rhs: {c.rhs}")
        return "\n".join(lines)


def run_identity(
    name: str,
    anchor: str,
    cases: Iterable[tuple[Sequence, object, object]],
    fmt=str,
) -> Check:
    """Evaluate ``(witness, lhs, rhs)`` triples, stopping at the first mismatch."""
    n = 0
    for witness, lhs, rhs in cases:
        n += 1
        if lhs != rhs:
            return Check(name, anchor, False, tuple(witness), fmt(lhs), fmt(rhs), n)
    return Check(name, anchor, True, cases=n)


class VerificationFailed(StructureError):
    """An input failed the axioms an operation requires; carries the report."""

    def __init__(self, message: str, report: VerificationReport):
        failing = report.failures()
        if failing:
            c = failing[0]
            message = f"{message}: {c.name} fails at {', '.join(map(str, c.witness))}"
        super().__init__(message)
        self.report = report
