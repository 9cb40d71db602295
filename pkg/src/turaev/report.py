"""Command reports: one structure, rendered as JSON or as a plain table.

Every number is stored as an exact string (``"3"``, ``"-5/2"``) so the two
renderings cannot drift apart and the JSON form round-trips byte for byte.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def exact(x: Any) -> Any:
    """Convert results to JSON-safe exact values; Fractions become ``p/q`` strings."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, dict):
        return {str(k): exact(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [exact(v) for v in x]
    return str(x)


def digest(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode()
    return "sha256:" + hashlib.sha256(data).hexdigest()


@dataclass
class Report:
    command: list[str]
    inputs: dict[str, str] = field(default_factory=dict)
    results: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    gates: list[Check] = field(default_factory=list)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def gate(self, name: str, passed: bool, detail: str = "") -> None:
        self.gates.append(Check(name, bool(passed), detail))

    def put(self, key: str, value: Any) -> None:
        self.results[key] = exact(value)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(
            command=list(d["command"]),
            inputs=dict(d["inputs"]),
            results=dict(d["results"]),
            checks=[Check(**c) for c in d["checks"]],
            gates=[Check(**c) for c in d["gates"]],
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = ["$ turaev " + " ".join(self.command)]
        for name, h in self.inputs.items():
            lines.append(f"input  {name}  {h[:23]}")
        width = max((len(k) for k in self.results), default=0)
        for k, v in self.results.items():
            lines.extend(_render_value(k, v, width))
        for label, rows in (("check", self.checks), ("gate", self.gates)):
            for c in rows:
                mark = "ok  " if c.passed else ("FAIL" if label == "check" else "off ")
                lines.append(f"{label:<5} [{mark}] {c.name}" + (f"  ({c.detail})" if c.detail else ""))
        lines.append("status: " + ("ok" if self.ok else "FAILED"))
        return "\n".join(lines) + "\n"


def _render_value(key: str, v: Any, width: int) -> list[str]:
    if isinstance(v, list) and v and all(isinstance(x, str) for x in v):
        return [f"{key:<{width}}  {x}" if i == 0 else f"{'':<{width}}  {x}" for i, x in enumerate(v)]
    if isinstance(v, (list, dict)):
        return [f"{key:<{width}}  {json.dumps(v, sort_keys=True, ensure_ascii=False)}"]
    if v is None:
        v = "-"
    return [f"{key:<{width}}  {v}"]
