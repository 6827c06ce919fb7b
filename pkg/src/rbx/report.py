"""Check reports: verdict plus the complete list of failing residuals."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Failure:
    identity: str
    index: tuple
    residual: object  # Scalar

    def __str__(self):
        idx = ",".join(str(i) for i in self.index)
        return f"{self.identity} at=({idx}) value={self.residual}"


@dataclass
class CheckReport:
    checker: str
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    children: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures and all(c.ok for c in self.children)

    def __bool__(self):
        return self.ok

    def add_residual(self, identity, tensor):
        """Record every nonzero entry of a residual tensor."""
        for idx, value in tensor.nonzero_items():
            self.failures.append(Failure(identity, idx, value))

    def require_equal(self, identity, lhs, rhs):
        self.add_residual(identity, lhs - rhs)

    def require_zero(self, identity, tensor):
        self.add_residual(identity, tensor)

    def add_child(self, report):
        self.children.append(report)
        return report

    def note(self, text):
        self.notes.append(text)

    def all_failures(self):
        out = list(self.failures)
        for child in self.children:
            out.extend(child.all_failures())
        return out

    def first_failure(self):
        failures = self.all_failures()
        return failures[0] if failures else None

    def lines(self, indent=0):
        pad = "  " * indent
        verdict = "PASS" if self.ok else "FAIL"
        out = [f"{pad}{self.checker}: {verdict}"]
        for note in self.notes:
            out.append(f"{pad}  note: {note}")
        for failure in self.failures:
            out.append(f"{pad}  RESIDUAL {failure}")
        for child in self.children:
            out.extend(child.lines(indent + 1))
        return out

    def __str__(self):
        return "\n".join(self.lines())
