"""Deterministic check reports for the command line and tests.

A report is an ordered list of PASS/FAIL/INFO lines plus a JSON-friendly
payload.  Rendering is byte-deterministic: insertion order for text,
sorted keys for JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["CheckLine", "Report"]


@dataclass(frozen=True)
class CheckLine:
    name: str
    status: str  # PASS, FAIL or INFO
    detail: str = ""

    def render(self) -> str:
        body = f"[{self.status}] {self.name}"
        if self.detail:
            body += f": {self.detail}"
        return body


@dataclass
class Report:
    title: str
    lines: list[CheckLine] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.lines.append(CheckLine(name, "PASS" if passed else "FAIL", detail))

    def info(self, name: str, detail: str = "") -> None:
        self.lines.append(CheckLine(name, "INFO", detail))

    def extend(self, pairs) -> None:
        """Absorb (name, passed, detail) triples from module-level reports."""
        for name, passed, detail in pairs:
            self.add(name, passed, detail)

    @property
    def ok(self) -> bool:
        return all(line.status != "FAIL" for line in self.lines)

    def failures(self) -> list[CheckLine]:
        return [line for line in self.lines if line.status == "FAIL"]

    def to_text(self) -> str:
        out = [self.title]
        out += ["  " + line.render() for line in self.lines]
        out.append(f"result: {'ok' if self.ok else 'FAILED'}")
        return "\n".join(out) + "\n"

    def to_json(self) -> str:
        payload = {
            "title": self.title,
            "ok": self.ok,
            "checks": [
                {"name": l.name, "status": l.status, "detail": l.detail}
                for l in self.lines
            ],
            "data": self.data,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
