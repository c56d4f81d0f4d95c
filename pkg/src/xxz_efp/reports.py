"""Machine-readable verification reports.

Rows carry exact expected/got strings (canonical scalar encodings), so a
saved report doubles as regression data.  Output is deterministic for a
fixed configuration.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


@dataclass
class ReportRow:
    suite: str
    instance: str
    expected: str
    got: str
    passed: bool
    provenance: str  # PAPER | TRIVIAL | DERIVED

    def to_json(self):
        return {"suite": self.suite, "instance": self.instance,
                "expected": self.expected, "got": self.got,
                "pass": self.passed, "provenance": self.provenance}


@dataclass
class SuiteResult:
    suite: str
    rows: list = field(default_factory=list)

    def add(self, instance, expected, got, provenance, passed=None):
        expected = str(expected)
        got = str(got)
        if passed is None:
            passed = expected == got
        self.rows.append(ReportRow(self.suite, instance, expected, got,
                                   bool(passed), provenance))

    def check(self, instance, passed, provenance, detail=""):
        self.add(instance, "true", "true" if passed else f"false {detail}".strip(),
                 provenance, passed=bool(passed))

    def extend(self, other):
        self.rows.extend(other.rows)

    @property
    def passed(self):
        return all(r.passed for r in self.rows)

    @property
    def summary(self):
        failed = sum(1 for r in self.rows if not r.passed)
        return {"suite": self.suite, "total": len(self.rows),
                "failed": failed, "pass": failed == 0}

    def to_json(self):
        return {"suite": self.suite,
                "rows": [r.to_json() for r in self.rows],
                "summary": self.summary}

    def render(self, fmt="text"):
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["suite", "instance", "expected", "got", "pass",
                        "provenance"])
            for r in self.rows:
                w.writerow([r.suite, r.instance, r.expected, r.got,
                            "pass" if r.passed else "FAIL", r.provenance])
            return buf.getvalue()
        lines = []
        for r in self.rows:
            mark = "ok  " if r.passed else "FAIL"
            lines.append(f"[{mark}] {r.suite} :: {r.instance} "
                         f"(expected {r.expected}, got {r.got}) [{r.provenance}]")
        s = self.summary
        lines.append(f"== {self.suite}: {s['total'] - s['failed']}/{s['total']}"
                     f" passed ==")
        return "\n".join(lines) + "\n"
