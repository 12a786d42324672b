"""Small pass/fail report structures shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    title: str
    checks: tuple

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def lines(self):
        out = []
        for c in self.checks:
            mark = "ok  " if c.ok else "FAIL"
            line = "%s %s" % (mark, c.name)
            if c.detail and not c.ok:
                line += "  [%s]" % c.detail
            out.append(line)
        return out

    def summary(self):
        passed = sum(1 for c in self.checks if c.ok)
        return "%s: %d/%d checks passed" % (self.title, passed, len(self.checks))


def matrix_check(name, lhs, rhs):
    """Check exact equality of two matrices, reporting the first mismatch."""
    diff = lhs.first_difference(rhs)
    if diff is None:
        return Check(name=name, ok=True)
    i, j, a, b = diff
    return Check(name=name, ok=False,
                 detail="entry (%d,%d): %s != %s" % (i + 1, j + 1, a, b))


def elem_check(name, lhs, rhs):
    if lhs == rhs:
        return Check(name=name, ok=True)
    return Check(name=name, ok=False, detail="%s != %s" % (lhs, rhs))
