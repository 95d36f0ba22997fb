"""Clause-by-clause violation reports shared by every checker.

A checker never stops at the first failure: it evaluates every clause on
every basis tuple and returns the full list of violations, so a broken
structure constant in an input file is located precisely.
"""

from __future__ import annotations


class Violation:
    __slots__ = ("clause", "witness", "lhs", "rhs")

    def __init__(self, clause: str, witness=None, lhs=None, rhs=None):
        self.clause = clause
        self.witness = witness
        self.lhs = lhs
        self.rhs = rhs

    def to_json(self) -> dict:
        out = {"clause": self.clause}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.rhs is not None:
            out["rhs"] = self.rhs
        return out

    def __repr__(self):
        if self.witness is not None:
            return f"Violation({self.clause}, witness={self.witness})"
        return f"Violation({self.clause})"


class Report:
    """Result of running one checker: an ordered list of violations."""

    def __init__(self, subject: str, violations: list[Violation] | None = None):
        self.subject = subject
        self.violations = violations if violations is not None else []

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, clause: str, witness=None, lhs=None, rhs=None):
        self.violations.append(Violation(clause, witness, lhs, rhs))

    def extend(self, other: "Report", prefix: str = ""):
        for v in other.violations:
            self.violations.append(
                Violation(prefix + v.clause if prefix else v.clause, v.witness, v.lhs, v.rhs))

    def clauses(self) -> list[str]:
        return sorted({v.clause for v in self.violations})

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "violations": [v.to_json() for v in self.violations],
        }

    def __repr__(self):
        state = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"Report({self.subject}: {state})"
