"""Report objects shared by the human and machine renderings of every command."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from cohere.models.bounds import Interval
from cohere.models.quantity import CrqTable
from cohere.services.coherence import CoherenceVerdict
from cohere.services.entailment import EntailmentVerdict, InferenceRule
from cohere.utils.rationals import format_rational


@dataclass
class Report:
    """An ordered list of key/value facts plus an exit status.

    Keys are stable identifiers for ``--format machine``; values hold exact
    fractions. ``details`` carries extra human-only lines.
    """

    command: str
    verdict: str
    status: int = 0
    fields: list[tuple[str, str]] = field(default_factory=list)
    details: list[str] = field(default_factory=list)

    def add(self, key: str, value: object) -> None:
        self.fields.append((key, str(value)))

    def to_machine(self) -> str:
        lines = [f"command={self.command}", f"verdict={self.verdict}"]
        lines.extend(f"{key}={value}" for key, value in self.fields)
        return "\n".join(lines)


def coherence_report(verdict: CoherenceVerdict) -> Report:
    """Verdict, per-level I0, the last solution or the Dutch-book stakes."""
    report = Report(
        command="coherence check",
        verdict="coherent" if verdict.coherent else "incoherent",
        status=0 if verdict.coherent else 1,
    )
    report.add("levels", verdict.levels)
    for level in verdict.trace:
        prefix = f"level.{level.level}"
        report.add(f"{prefix}.family", ",".join(level.system.names))
        report.add(f"{prefix}.feasible", "yes" if level.solution is not None else "no")
        if level.solution is not None:
            report.add(f"{prefix}.I0", ",".join(sorted(level.I0)) or "-")
    if verdict.coherent and verdict.trace:
        first = verdict.trace[0]
        for cell, weight in zip(first.system.constituents, first.solution):
            if weight:
                report.add(f"lambda.C{cell.index}.{cell.code}", weight)
    stakes = verdict.dutch_book
    if stakes is not None:
        for name, stake in stakes.items():
            report.add(f"stake.{name}", stake)
        report.details.append("every constituent yields a negative gain under these stakes")
    return report


def extension_report(
    target: str,
    interval: Interval,
    closed_form: tuple[str, Interval] | None = None,
    free: Sequence[str] = (),
) -> Report:
    """Interval report; with ``free`` previsions the interval is the closed form alone."""
    report = Report(command="coherence extend", verdict=str(interval))
    report.add("target", target)
    report.add("lo", interval.lo)
    report.add("hi", interval.hi)
    report.add("source", "closed_form" if free else "lp")
    if interval.lo_open or interval.hi_open:
        report.add("open", f"{interval.lo_open},{interval.hi_open}")
    if free:
        report.add("free", " ".join(free))
        report.details.append("  lower-order previsions left free; the LP needs them assessed")
    if closed_form is not None:
        name, expected = closed_form
        report.add(f"closed_form.{name}", expected)
        if not free:
            report.add("closed_form.agrees", "yes" if expected == interval else "no")
    report.details.append(
        f"  lo ~ {format_rational(interval.lo)}, hi ~ {format_rational(interval.hi)}"
    )
    return report


def entailment_report(rule: InferenceRule, verdict: EntailmentVerdict) -> Report:
    report = Report(
        command="entail",
        verdict="p-valid" if verdict.p_valid else "not p-valid",
        status=0 if verdict.p_valid else 1,
    )
    report.add("rule", rule.name)
    report.add("premises", ", ".join(p.label for p in rule.premises))
    report.add("conclusion", rule.conclusion.label)
    report.add("p_consistent", "yes" if verdict.p_consistent else "no")
    report.add("witness", verdict.witness_text)
    if verdict.lp_lower_bound is not None:
        report.add("lp_lower_bound", verdict.lp_lower_bound)
        report.add("lp_agrees", "yes" if verdict.lp_agrees else "no")
    if rule.expected_valid is not None:
        report.add("expected", "p-valid" if rule.expected_valid else "not p-valid")
    report.details.extend(f"  note: {note}" for note in verdict.notes)
    return report


def table_report(table: CrqTable, caption: str | None = None) -> Report:
    report = Report(command="table", verdict=table.name)
    report.add("family", ",".join(table.names))
    report.add("rows", len(table.entries))
    for label, code, value in table.rows():
        report.add(f"{label}.{code}", value)
    if caption:
        report.details.append(caption)
    return report


def value_report(kind: str, value: Interval | bool | Fraction | tuple) -> Report:
    """Result of a closed-form ``bounds`` computation."""
    if isinstance(value, bool):
        report = Report("bounds", "inside" if value else "outside", status=0 if value else 1)
        report.add("kind", kind)
        return report
    if isinstance(value, Interval):
        report = Report("bounds", str(value))
        report.add("kind", kind)
        report.add("lo", value.lo)
        report.add("hi", value.hi)
        return report
    if isinstance(value, tuple):
        report = Report("bounds", " ".join(str(v) for v in value))
        report.add("kind", kind)
        for i, v in enumerate(value, 1):
            report.add(f"w{i}", v)
        return report
    report = Report("bounds", str(value))
    report.add("kind", kind)
    return report
