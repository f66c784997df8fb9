"""Pass/fail records shared by the verification routines and the CLI."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    claim: str
    lhs: object
    rhs: object
    passed: bool

    def as_dict(self):
        return {"claim": self.claim, "lhs": _plain(self.lhs), "rhs": _plain(self.rhs), "pass": self.passed}

    def line(self):
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.claim}: {self.lhs} vs {self.rhs}"


def check(claim, lhs, rhs):
    return Check(claim, lhs, rhs, lhs == rhs)


def _plain(x):
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)


def all_passed(checks):
    return all(c.passed for c in checks)
