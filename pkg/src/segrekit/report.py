"""Deterministic machine-readable reports.

The JSON document on stdout is a pure function of the inputs and the seed:
keys are sorted and timings are kept out of it (they go to the human summary
on stderr instead)."""

from __future__ import annotations

import hashlib
import json
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional

SCHEMA = 1


def digest_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class Report:
    command: str
    seed: int
    inputs: Dict[str, str] = field(default_factory=dict)
    limits: Dict[str, int] = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    excluded: List[str] = field(default_factory=list)
    status: str = "ok"
    notes: List[str] = field(default_factory=list)

    def add_input(self, label: str, text: str) -> None:
        self.inputs[label] = digest_text(text)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "seed": self.seed,
            "inputs": self.inputs,
            "limits": self.limits,
            "results": self.results,
            "excluded": self.excluded,
            "notes": self.notes,
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def emit(self, elapsed: Optional[float] = None,
             out=None, err=None) -> None:
        out = out or sys.stdout
        err = err or sys.stderr
        out.write(self.to_json())
        lines = ["%s: %s" % (self.command, self.status)]
        for k, v in self.results.items():
            lines.append("  %s = %s" % (k, v))
        if self.excluded:
            lines.append("  excluded locus: " + "; ".join(self.excluded))
        for n in self.notes:
            lines.append("  note: " + n)
        if elapsed is not None:
            lines.append("  elapsed: %.3fs" % elapsed)
        err.write("\n".join(lines) + "\n")
