from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class Claim:
    claim_id: str
    citation: str
    passed: bool
    witness: Any = None


@dataclass
class VerificationReport:
    suite: str
    claims: list[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def add(self, claim_id: str, citation: str, passed: bool, witness: Any = None) -> Claim:
        if not citation:
            raise ValueError("every claim needs a citation")
        c = Claim(claim_id, citation, bool(passed), witness)
        self.claims.append(c)
        return c

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "claims": [asdict(c) for c in self.claims]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        return cls(data["suite"], [Claim(**c) for c in data["claims"]])

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.claims:
            lines.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.claim_id}: {c.citation}")
            if c.witness is not None:
                lines.append(f"         {json.dumps(c.witness, sort_keys=True)}")
        return "\n".join(lines) + "\n"
