"""Verification reports with a byte-stable JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .charalg import FormalCharacter


@dataclass
class Report:
    identity: str
    passed: bool
    lhs_hash: str | None = None
    rhs_hash: str | None = None
    first_diff: dict | None = None
    factors: list[dict] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        obj: dict[str, Any] = {"identity": self.identity, "lhs_hash": self.lhs_hash,
                               "rhs_hash": self.rhs_hash, "pass": self.passed}
        if self.first_diff is not None:
            obj["first_diff"] = self.first_diff
        obj["factors"] = self.factors
        if self.details:
            obj["details"] = self.details
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=False, separators=(",", ":"))

    def __bool__(self):
        return self.passed


def first_difference(lhs: FormalCharacter, rhs: FormalCharacter) -> dict | None:
    if lhs == rhs:
        return None
    rs = lhs.rs
    keys = set(lhs.terms) | set(rhs.terms)
    diff = sorted((k for k in keys if lhs.coefficient(k) != rhs.coefficient(k)),
                  key=lambda w: (rs.height(w), w))
    w = diff[-1]
    return {"weight": [int(x) for x in w], "lhs": lhs.coefficient(w), "rhs": rhs.coefficient(w)}


def compare(identity: str, lhs: FormalCharacter, rhs: FormalCharacter, **details) -> Report:
    diff = first_difference(lhs, rhs) if lhs.rs == rhs.rs else {"reason": "root systems differ"}
    return Report(identity, diff is None, lhs.digest(), rhs.digest(), diff, details=details)
