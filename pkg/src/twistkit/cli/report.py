"""Check results and their JSON form.

Schema::

    {"command": str, "source": str, "bounds": {"N": int, "D": int, ...},
     "checks": [{"check": str, "status": "pass" | "fail",
                 "witness"?: any, "dims"?: any, "millis"?: number}]}
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field


def _plain(x):
    """Tuples to lists and dict keys to strings, so values survive a JSON round trip."""
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


@dataclass
class CheckResult:
    check: str
    ok: bool
    witness: object = None
    dims: object = None
    millis: float | None = None
    lines: list = field(default_factory=list, compare=False)  # extra human-readable output

    def __post_init__(self):
        self.ok = bool(self.ok)
        self.witness = _plain(self.witness)
        self.dims = _plain(self.dims)

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def to_dict(self) -> dict:
        out = {"check": self.check, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.dims is not None:
            out["dims"] = self.dims
        if self.millis is not None:
            out["millis"] = self.millis
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "CheckResult":
        if d.get("status") not in ("pass", "fail"):
            raise ValueError(f"bad status {d.get('status')!r}")
        return cls(d["check"], d["status"] == "pass", d.get("witness"), d.get("dims"), d.get("millis"))


@dataclass
class Report:
    command: str
    source: str
    bounds: dict
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {"command": self.command, "source": self.source, "bounds": dict(self.bounds),
                "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["command"], d["source"], dict(d["bounds"]), [CheckResult.from_dict(c) for c in d["checks"]])

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def render(self) -> str:
        out = [f"{self.command} on {self.source} (" + ", ".join(f"{k}={v}" for k, v in self.bounds.items()) + ")"]
        for c in self.checks:
            line = f"  {c.status.upper():4}  {c.check}"
            if c.millis is not None:
                line += f"  [{c.millis:.0f} ms]"
            out.append(line)
            for extra in c.lines:
                out.append(f"        {extra}")
            if c.witness is not None and not c.ok:
                out.append(f"        witness: {c.witness}")
        out.append("all checks passed" if self.ok else
                   f"{sum(not c.ok for c in self.checks)} of {len(self.checks)} checks failed")
        return "\n".join(out)
