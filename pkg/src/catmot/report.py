"""Verification report assembly and serialization (CSV, JSON, markdown).

Reports are deterministic: rows are kept sorted by (rep_id, n), exact
values are serialized as decimal strings so they never lose integer
precision, and floats are emitted with enough digits to round-trip.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .catalog import VerificationRow

CSV_HEADER = "rep_id,n,exact,estimate,rel_err,evaluations,rule,pass"


def _fmt(x: float) -> str:
    return format(x, ".17g")


@dataclass(frozen=True)
class Report:
    tool_version: str
    config_echo: dict[str, str]
    rows: tuple[VerificationRow, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(
            self, "rows", tuple(sorted(self.rows, key=lambda r: (r.rep_id, r.n)))
        )

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(1 for r in self.rows if r.passed)
        non_converged = sum(1 for r in self.rows if not r.converged)
        return {
            "total": len(self.rows),
            "passed": passed,
            "failed": len(self.rows) - passed,
            "non_converged": non_converged,
        }

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.rows)

    # -- CSV ---------------------------------------------------------------

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        for r in self.rows:
            lines.append(
                f"{r.rep_id},{r.n},{r.exact},{_fmt(r.estimate)},{_fmt(r.rel_err)},"
                f"{r.evaluations},{r.rule},{'true' if r.passed else 'false'}"
            )
        return "\n".join(lines) + "\n"

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> str:
        obj = {
            "tool_version": self.tool_version,
            "config_echo": self.config_echo,
            "summary": self.summary,
            "rows": [
                {
                    "rep_id": r.rep_id,
                    "n": r.n,
                    "exact": str(r.exact),
                    "estimate": r.estimate,
                    "rel_err": r.rel_err,
                    "evaluations": r.evaluations,
                    "rule": r.rule,
                    "pass": r.passed,
                    "converged": r.converged,
                }
                for r in self.rows
            ],
        }
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        obj = json.loads(text)
        rows = tuple(
            VerificationRow(
                rep_id=r["rep_id"],
                n=r["n"],
                exact=int(r["exact"]),
                estimate=r["estimate"],
                rel_err=r["rel_err"],
                evaluations=r["evaluations"],
                rule=r["rule"],
                passed=r["pass"],
                converged=r["converged"],
            )
            for r in obj["rows"]
        )
        return cls(
            tool_version=obj["tool_version"],
            config_echo=dict(obj["config_echo"]),
            rows=rows,
        )

    # -- markdown ----------------------------------------------------------

    def to_markdown(self) -> str:
        lines = [
            "| rep_id | n | exact | estimate | rel_err | evaluations | rule | pass |",
            "| --- | --- | --- | --- | --- | --- | --- | --- |",
        ]
        for r in self.rows:
            lines.append(
                f"| {r.rep_id} | {r.n} | {r.exact} | {_fmt(r.estimate)} | "
                f"{_fmt(r.rel_err)} | {r.evaluations} | {r.rule} | "
                f"{'true' if r.passed else 'false'} |"
            )
        s = self.summary
        lines.append("")
        lines.append(
            f"{s['total']} rows: {s['passed']} passed, {s['failed']} failed, "
            f"{s['non_converged']} non-converged."
        )
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        if fmt == "md":
            return self.to_markdown()
        raise ValueError(f"unknown report format {fmt!r}")
