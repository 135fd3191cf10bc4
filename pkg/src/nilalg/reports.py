"""Check records and verification reports with a stable JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Check:
    id: str
    anchor: str
    passed: bool
    witness: Optional[str] = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"id": self.id, "anchor": self.anchor, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    variety: str
    checks: List[Check] = field(default_factory=list)
    dims: List[int] = field(default_factory=list)
    denominator_primes: List[int] = field(default_factory=list)
    observations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, id: str, anchor: str, passed: bool, witness: Optional[str] = None) -> Check:
        # a failing check always carries something concrete to look at
        if not passed and witness is None:
            witness = "no witness recorded"
        chk = Check(id, anchor, bool(passed), None if passed else witness)
        self.checks.append(chk)
        return chk

    def to_json(self) -> Dict[str, Any]:
        return {
            "variety": self.variety,
            "checks": [c.to_json() for c in self.checks],
            "dims": list(self.dims),
            "denominator_primes": sorted(self.denominator_primes),
            "observations": list(self.observations),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def render_text(self) -> str:
        lines = [f"variety {self.variety}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{c.status}] {c.id}: {c.anchor}"
            if c.witness:
                line += f"\n         witness: {c.witness}"
            lines.append(line)
        lines.append("  dims: " + " ".join(str(d) for d in self.dims))
        lines.append("  denominator primes: " + (" ".join(map(str, sorted(self.denominator_primes))) or "none"))
        for obs in self.observations:
            lines.append(f"  note: {obs}")
        return "\n".join(lines)
