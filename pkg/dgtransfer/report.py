# -*- coding:utf-8 -*-

"""
Verification reports.

A report is a set of named checks. Each check counts the items it examined and keeps the first few
failures, each located by a small dict (degree, row, column, value, ...). A failing identity is report
content, never an exception.

Author: dgtransfer developers
Date:   2024/03/04
"""

from dgtransfer import const


class Report:
    """ Pass/fail report.

    Attributes:
        name: Report name, e.g. "sdr".
        max_failures: Located failures kept per check.
    """

    def __init__(self, name, max_failures=const.DEFAULT_MAX_FAILURES):
        self.name = name
        self.max_failures = max_failures
        self.checks = {}
        self.notes = {}

    def _check(self, check):
        if check not in self.checks:
            self.checks[check] = {"items": 0, "failed": 0, "failures": []}
        return self.checks[check]

    def record(self, check, ok, **where):
        """ Record one examined item. """
        entry = self._check(check)
        entry["items"] += 1
        if not ok:
            entry["failed"] += 1
            if len(entry["failures"]) < self.max_failures:
                entry["failures"].append(where)
        return ok

    def record_many(self, check, items, failures):
        """ Record `items` examined items, `failures` being the located failing ones. """
        entry = self._check(check)
        entry["items"] += items
        for where in failures:
            entry["failed"] += 1
            if len(entry["failures"]) < self.max_failures:
                entry["failures"].append(where)
        return not failures

    def note(self, key, value):
        """ Attach data that is not a check (dimensions, sampling mode, ...). """
        self.notes[key] = value

    def merge(self, other, prefix=None):
        prefix = prefix if prefix is not None else other.name
        for check, entry in other.checks.items():
            name = "{}.{}".format(prefix, check) if prefix else check
            mine = self._check(name)
            mine["items"] += entry["items"]
            mine["failed"] += entry["failed"]
            room = self.max_failures - len(mine["failures"])
            mine["failures"].extend(entry["failures"][:max(room, 0)])
        for key, value in other.notes.items():
            self.notes["{}.{}".format(prefix, key) if prefix else key] = value
        return self

    @property
    def passed(self):
        return all(entry["failed"] == 0 for entry in self.checks.values())

    def failing_checks(self):
        return sorted(check for check, entry in self.checks.items() if entry["failed"])

    @property
    def data(self):
        checks = {}
        for check in sorted(self.checks):
            entry = self.checks[check]
            checks[check] = {
                "items": entry["items"],
                "passed": entry["failed"] == 0,
                "failed": entry["failed"],
                "failures": entry["failures"]
            }
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": checks,
            "notes": {k: self.notes[k] for k in sorted(self.notes)}
        }

    def summary(self):
        """ Human readable lines for stderr. """
        lines = ["{}: {}".format(self.name, "PASS" if self.passed else "FAIL")]
        for check in sorted(self.checks):
            entry = self.checks[check]
            status = "ok" if entry["failed"] == 0 else "FAILED {}".format(entry["failed"])
            lines.append("  {:<48} {:>8} items  {}".format(check, entry["items"], status))
        return "\n".join(lines)

    def __repr__(self):
        return "<Report {} passed={}>".format(self.name, self.passed)
