"""Shared verdict record for verification reports.

`mode` says what a passing verdict proves: "exact" checks decide the quantified
statement (multilinear identities reduced to finite basis enumerations, or
closed subspace computations); "sampled" checks only attest the tested points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    mode: str  # "exact" | "sampled"
    witness: Optional[str] = None
    detail: Optional[str] = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "ok": self.ok, "mode": self.mode}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail is not None:
            d["detail"] = self.detail
        return d


def all_ok(checks) -> bool:
    return all(c.ok for c in checks)


def first_failure(checks) -> Optional[Check]:
    for c in checks:
        if not c.ok:
            return c
    return None
