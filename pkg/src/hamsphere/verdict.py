from __future__ import annotations

from dataclasses import dataclass

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Check:
    """Outcome of one machine-checked claim."""

    name: str
    status: str
    witness: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def line(self) -> str:
        return f"{self.name} {self.status} {self.witness}".rstrip()


def combine(name: str, checks) -> Check:
    """Fold several checks into one; the first non-PASS wins."""
    checks = list(checks)
    for c in checks:
        if c.status != PASS:
            return Check(name, c.status, f"{c.name}: {c.witness}")
    return Check(name, PASS, f"{len(checks)} sub-checks")
