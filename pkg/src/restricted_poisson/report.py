"""Verification reports shared by all identity suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

MAX_WITNESSES = 3


@dataclass
class Check:
    name: str
    tested: int = 0
    failures: int = 0
    witnesses: List[Dict[str, str]] = field(default_factory=list)
    informational: bool = False

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, **witness: Any) -> bool:
        self.tested += 1
        if not ok:
            self.failures += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append({k: str(v) for k, v in witness.items()})
        return ok

    def to_dict(self) -> Dict[str, Any]:
        d = {"name": self.name, "passed": self.passed, "tested": self.tested,
             "failures": self.failures, "witnesses": self.witnesses}
        if self.informational:
            d["informational"] = True
        return d


@dataclass
class Report:
    suite: str
    seed: Optional[int] = None
    checks: List[Check] = field(default_factory=list)
    info: Dict[str, Any] = field(default_factory=dict)

    def check(self, name: str, informational: bool = False) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        c = Check(name, informational=informational)
        self.checks.append(c)
        return c

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def failed_checks(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed and not c.informational]

    def merge(self, other: "Report") -> "Report":
        for c in other.checks:
            c = Check(f"{other.suite}.{c.name}", c.tested, c.failures,
                      list(c.witnesses), c.informational)
            self.checks.append(c)
        for k, v in other.info.items():
            self.info[f"{other.suite}.{k}"] = v
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {"suite": self.suite, "seed": self.seed, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks], "info": self.info}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"suite {self.suite} (seed={self.seed}): "
                 + ("PASS" if self.passed else "FAIL")]
        for c in self.checks:
            status = "ok" if c.passed else "FAILED"
            tag = " [info]" if c.informational else ""
            lines.append(f"  {c.name}: {status} ({c.tested} tested, "
                         f"{c.failures} failures){tag}")
            for w in c.witnesses:
                lines.append("    witness: " + "; ".join(f"{k} = {v}" for k, v in w.items()))
        for k, v in self.info.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()
