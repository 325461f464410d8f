"""Verification reports: named checks with a status and witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
INFO = "informational"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    witnesses: list = field(default_factory=list)
    detail: str = ""

    def to_json(self) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "status": self.status, "witnesses": _plain(self.witnesses)}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    command: list[str]
    checks: list[Check] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    def add(self, id: str, anchor: str, ok: bool | None, witnesses=(), detail: str = "") -> Check:
        """Record a check; ``ok=None`` marks it informational."""
        status = INFO if ok is None else (PASS if ok else FAIL)
        c = Check(id, anchor, status, list(witnesses), detail)
        self.checks.append(c)
        return c

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.ok else EXIT_FAIL

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "checks": [c.to_json() for c in self.checks],
            "data": _plain(self.data),
            "summary": {
                "pass": sum(c.status == PASS for c in self.checks),
                "fail": sum(c.status == FAIL for c in self.checks),
                "informational": sum(c.status == INFO for c in self.checks),
                "exit": self.exit_code,
            },
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def text(self) -> str:
        lines = [f"$ {' '.join(self.command)}"]
        for c in self.checks:
            line = f"[{c.status.upper():>13}] {c.id}: {c.anchor}"
            if c.detail:
                line += f" ({c.detail})"
            lines.append(line)
            if c.status != PASS and c.witnesses:
                lines.append(f"{'':16}witnesses: {json.dumps(_plain(c.witnesses))[:300]}")
        s = self.to_json()["summary"]
        lines.append(f"{s['pass']} pass, {s['fail']} fail, {s['informational']} informational")
        return "\n".join(lines)


def _plain(x):
    """Make witnesses JSON-safe (tuples, Fractions, numpy ints, objects with to_json)."""
    from fractions import Fraction

    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "item"):
        return x.item()
    return x
