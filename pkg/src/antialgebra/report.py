"""Check reports with machine-readable witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

FORMAT_VERSION = "1"


def _fmt(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (tuple, list)):
        return [_fmt(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _fmt(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class Witness:
    """A failing instance: which identity, at which basis arguments, with both sides."""

    identity: str
    args: tuple[str, ...]
    lhs: Any = None
    rhs: Any = None

    def to_dict(self) -> dict:
        return {"identity": self.identity, "args": list(self.args),
                "lhs": _fmt(self.lhs), "rhs": _fmt(self.rhs)}


@dataclass
class Check:
    name: str
    witnesses: list[Witness] = field(default_factory=list)
    instances: int = 0
    skipped: int = 0
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and not self.witnesses

    @property
    def status(self) -> str:
        if self.error is not None:
            return "error"
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "instances": self.instances,
               "skipped": self.skipped, "witnesses": [w.to_dict() for w in self.witnesses]}
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    dimensions: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def status(self) -> str:
        if any(c.error is not None for c in self.checks):
            return "error"
        return "pass" if self.passed else "fail"

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, list(c.witnesses), c.instances, c.skipped, c.error))
        for k, v in other.dimensions.items():
            self.dimensions[prefix + k] = v

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def witnesses(self) -> list[Witness]:
        return [w for c in self.checks for w in c.witnesses]

    def to_dict(self) -> dict:
        return {"format_version": FORMAT_VERSION, "title": self.title, "status": self.status,
                "checks": [c.to_dict() for c in self.checks],
                "dimensions": _fmt(self.dimensions), "notes": list(self.notes)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.title}: {self.status.upper()}"]
        for c in self.checks:
            extra = f" ({c.instances} instances" + (f", {c.skipped} skipped)" if c.skipped else ")")
            lines.append(f"  [{c.status}] {c.name}{extra}")
            if c.error:
                lines.append(f"      error: {c.error}")
            for w in c.witnesses[:5]:
                lines.append(f"      {w.identity} at ({', '.join(w.args)}): "
                             f"lhs={_fmt(w.lhs)} rhs={_fmt(w.rhs)}")
            if len(c.witnesses) > 5:
                lines.append(f"      ... {len(c.witnesses) - 5} more")
        for k, v in self.dimensions.items():
            lines.append(f"  {k} = {_fmt(v)}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines) + "\n"
