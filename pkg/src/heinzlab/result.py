"""Evaluated inequality instances."""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .config import TOL_REL

PASS = "pass"
VIOLATE = "violate"


@dataclass(frozen=True)
class CheckResult:
    """Both sides of an inequality ``lhs <= rhs`` and the signed slack.

    ``slack`` is ``rhs - lhs`` (for Loewner-order statements it is the least
    eigenvalue of ``rhs - lhs`` and ``lhs``/``rhs`` hold spectral norms).
    A result passes iff ``slack >= -tol * max(1, |lhs|, |rhs|)``.
    Composite checks keep their sub-results in ``parts`` and report the
    part with the smallest relative slack at the top level.
    """

    lhs: float
    rhs: float
    slack: float
    rel_slack: float
    verdict: str
    tol: float
    label: str = ""
    parts: tuple["CheckResult", ...] = field(default=(), repr=False)

    @classmethod
    def from_slack(cls, lhs: float, rhs: float, slack: float, tol: float = TOL_REL, label: str = "") -> "CheckResult":
        lhs, rhs, slack = float(lhs), float(rhs), float(slack)
        scale = max(1.0, abs(lhs), abs(rhs))
        rel = slack / scale
        if math.isnan(rel):
            verdict = VIOLATE
        else:
            verdict = PASS if slack >= -tol * scale else VIOLATE
        return cls(lhs, rhs, slack, rel, verdict, tol, label)

    @classmethod
    def compare(cls, lhs: float, rhs: float, tol: float = TOL_REL, label: str = "") -> "CheckResult":
        """Result for the statement ``lhs <= rhs``."""
        return cls.from_slack(lhs, rhs, float(rhs) - float(lhs), tol, label)

    @classmethod
    def combine(cls, parts, label: str = "") -> "CheckResult":
        parts = tuple(parts)
        if not parts:
            raise ValueError("nothing to combine")
        worst = min(parts, key=lambda r: (r.rel_slack if not math.isnan(r.rel_slack) else -math.inf))
        verdict = PASS if all(p.passed for p in parts) else VIOLATE
        return cls(worst.lhs, worst.rhs, worst.slack, worst.rel_slack, verdict, worst.tol,
                   label or worst.label, parts)

    def relabel(self, label: str) -> "CheckResult":
        return replace(self, label=label)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def part(self, label: str) -> "CheckResult":
        for p in self.parts:
            if p.label == label:
                return p
            if p.parts:
                try:
                    return p.part(label)
                except KeyError:
                    pass
        raise KeyError(label)

    def to_dict(self) -> dict:
        d = {
            "label": self.label,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "rel_slack": self.rel_slack,
            "verdict": self.verdict,
            "tol": self.tol,
        }
        if self.parts:
            d["parts"] = [p.to_dict() for p in self.parts]
        return d
