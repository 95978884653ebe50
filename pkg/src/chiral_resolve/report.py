"""Structured outcomes of verification checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any


def _plain(v: Any) -> Any:
    """Normalise values so that JSON round-trips are lossless."""
    if isinstance(v, tuple):
        return [_plain(x) for x in v]
    if isinstance(v, list):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


@dataclass
class VerificationReport:
    check_name: str
    parameters: dict = field(default_factory=dict)
    cells: list[dict] = field(default_factory=list)
    timestamp: str | None = None

    def add(self, key, expected, computed) -> None:
        self.cells.append({"key": _plain(key), "expected": _plain(expected), "computed": _plain(computed)})

    def extend(self, other: "VerificationReport", prefix=None) -> None:
        for c in other.cells:
            key = c["key"] if prefix is None else [_plain(prefix), c["key"]]
            self.cells.append({"key": key, "expected": c["expected"], "computed": c["computed"]})

    @property
    def first_mismatch(self) -> dict | None:
        for c in self.cells:
            if c["expected"] != c["computed"]:
                return c
        return None

    @property
    def status(self) -> str:
        return "pass" if self.first_mismatch is None else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def stamp(self) -> "VerificationReport":
        self.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        return self

    def to_dict(self) -> dict:
        d = {
            "check_name": self.check_name,
            "parameters": _plain(self.parameters),
            "status": self.status,
            "cells": self.cells,
            "first_mismatch": self.first_mismatch,
        }
        if self.timestamp is not None:
            d["timestamp"] = self.timestamp
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        rep = cls(d["check_name"], dict(d.get("parameters", {})),
                  [dict(c) for c in d.get("cells", [])], d.get("timestamp"))
        if rep.status != d.get("status", rep.status):
            raise ValueError("status field disagrees with cells")
        return rep

    @classmethod
    def from_json(cls, s: str) -> "VerificationReport":
        return cls.from_dict(json.loads(s))

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        line = f"{self.status.upper():4} {self.check_name} {params} ({len(self.cells)} cells)"
        fm = self.first_mismatch
        if fm is not None:
            line += f" first mismatch at {fm['key']}: expected {fm['expected']}, got {fm['computed']}"
        return line
