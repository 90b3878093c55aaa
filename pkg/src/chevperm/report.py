"""Structured results for the verification suites.

A SuiteReport accumulates exact pass/fail counts plus JSON-safe payloads.
`checked` counts the non-vacuous cases actually tested; `vacuous` counts
cases the preconditions ruled out.  A suite that was not applicable to the
configuration at all marks itself skipped with a reason instead of
running empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List

MAX_STORED_FAILURES = 20


@dataclass
class SuiteReport:
    name: str
    claim: str
    checked: int = 0
    vacuous: int = 0
    failed: int = 0
    witnesses: List[dict] = field(default_factory=list)
    failures: List[dict] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    skipped: bool = False
    skip_reason: str = ""
    seconds: float = 0.0

    def check(self, condition: bool, **info) -> bool:
        """Record one non-vacuous case; store detail when it fails."""
        self.checked += 1
        if not condition:
            self.failed += 1
            if len(self.failures) < MAX_STORED_FAILURES:
                self.failures.append(dict(sorted(info.items())))
        return bool(condition)

    def skip(self, reason: str) -> "SuiteReport":
        self.skipped = True
        self.skip_reason = reason
        return self

    def note(self, text: str) -> None:
        self.notes.append(text)

    def witness(self, **info) -> None:
        self.witnesses.append(dict(sorted(info.items())))

    @property
    def ok(self) -> bool:
        """Pass = ran, found no failures, and tested something real."""
        if self.skipped:
            return True
        return self.failed == 0 and self.checked > 0

    def to_json_dict(self, include_timing: bool = False) -> Dict[str, object]:
        out: Dict[str, object] = {
            "name": self.name,
            "claim": self.claim,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "failed": self.failed,
            "ok": self.ok,
            "witnesses": self.witnesses,
            "failures": self.failures,
            "notes": self.notes,
        }
        if self.skipped:
            out["skipped"] = True
            out["skip_reason"] = self.skip_reason
        if include_timing:
            out["seconds"] = round(self.seconds, 3)
        return out
