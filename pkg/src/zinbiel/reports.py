"""Verification reports: per-clause verdicts with replayable failure witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Witness:
    """First counterexample found for a clause.

    `indices` are 1-based basis indices in the order the clause quantifies
    them, so a reader can replay the violated identity by hand.
    """

    indices: tuple
    lhs: str
    rhs: str
    note: str = ""

    def describe(self) -> str:
        where = ",".join(str(i) for i in self.indices)
        text = f"at ({where}): lhs = {self.lhs}, rhs = {self.rhs}"
        if self.note:
            text += f" ({self.note})"
        return text


@dataclass(frozen=True)
class Clause:
    name: str
    ok: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class Report:
    subject: str
    clauses: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.clauses)

    def failures(self) -> list:
        return [c for c in self.clauses if not c.ok]

    def clause(self, name: str) -> Clause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    def summary(self) -> str:
        head = f"{self.subject}: {'PASS' if self.ok else 'FAIL'}"
        lines = [head]
        for c in self.clauses:
            mark = "ok  " if c.ok else "FAIL"
            line = f"  [{mark}] {c.name}"
            if c.witness is not None:
                line += " " + c.witness.describe()
            lines.append(line)
        return "\n".join(lines)

    def require(self, context: str = "") -> "Report":
        """Raise when any clause failed; used as a converter precondition."""
        if not self.ok:
            prefix = f"{context}: " if context else ""
            raise ValueError(prefix + self.summary())
        return self

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "clauses": [
                {
                    "name": c.name,
                    "ok": c.ok,
                    "witness": None
                    if c.witness is None
                    else {
                        "indices": list(c.witness.indices),
                        "lhs": c.witness.lhs,
                        "rhs": c.witness.rhs,
                        "note": c.witness.note,
                    },
                }
                for c in self.clauses
            ],
        }


def merge(subject: str, *reports: Report) -> Report:
    clauses = []
    for r in reports:
        clauses.extend(r.clauses)
    return Report(subject, tuple(clauses))
