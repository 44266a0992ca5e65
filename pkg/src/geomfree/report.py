"""Structured pass/fail records and the JSON verification report.

Schema version "1":

    {
      "schema_version": "1",
      "timestamp": "<ISO-8601 UTC>",
      "checks": [
        {"name": str, "kind": "exact"|"numeric", "pass": bool,
         "detail": {<residual|max_discrepancy|bound|...>}, "samples": int},
        ...
      ],
      "summary": {"total": int, "passed": int, "failed": int}
    }

The timestamp is the only non-deterministic field; everything else is
byte-stable for a fixed seed and arguments.
"""

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

SCHEMA_VERSION = "1"


@dataclass
class CheckResult:
    """One identity/theorem check: named, kinded, pass/fail, with detail."""

    name: str
    kind: str  # "exact" or "numeric"
    passed: bool
    detail: dict = field(default_factory=dict)
    samples: int = 1

    def to_dict(self):
        return {
            "name": self.name,
            "kind": self.kind,
            "pass": bool(self.passed),
            "detail": dict(self.detail),
            "samples": int(self.samples),
        }


def build_report(checks):
    """Assemble the full report dict from a list of CheckResult."""
    entries = [c.to_dict() for c in checks]
    passed = sum(1 for c in entries if c["pass"])
    return {
        "schema_version": SCHEMA_VERSION,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "checks": entries,
        "summary": {
            "total": len(entries),
            "passed": passed,
            "failed": len(entries) - passed,
        },
    }


def report_to_json(report):
    return json.dumps(report, indent=2, sort_keys=True)


def validate_report(report):
    """Raise ValueError if the dict does not conform to schema "1"."""
    if not isinstance(report, dict):
        raise ValueError("report must be an object")
    for key in ("schema_version", "timestamp", "checks", "summary"):
        if key not in report:
            raise ValueError(f"missing key: {key}")
    if report["schema_version"] != SCHEMA_VERSION:
        raise ValueError("unsupported schema_version")
    checks = report["checks"]
    if not isinstance(checks, list):
        raise ValueError("checks must be a list")
    for c in checks:
        for key in ("name", "kind", "pass", "detail", "samples"):
            if key not in c:
                raise ValueError(f"check missing key: {key}")
        if c["kind"] not in ("exact", "numeric"):
            raise ValueError(f"bad kind: {c['kind']!r}")
        if not isinstance(c["pass"], bool):
            raise ValueError("pass must be boolean")
        if not isinstance(c["detail"], dict):
            raise ValueError("detail must be an object")
        if not isinstance(c["samples"], int) or c["samples"] < 0:
            raise ValueError("samples must be a non-negative integer")
    summary = report["summary"]
    n_pass = sum(1 for c in checks if c["pass"])
    if summary.get("total") != len(checks) or summary.get("passed") != n_pass \
            or summary.get("failed") != len(checks) - n_pass:
        raise ValueError("summary counts do not match checks")
    return True
