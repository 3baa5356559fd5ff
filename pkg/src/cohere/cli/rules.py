"""Inference-rule catalog commands."""

from __future__ import annotations

import typer
from rich.table import Table

from cohere.cli.output import console, emit, guarded, split_names
from cohere.services.entailment import (
    InferenceRule,
    check_condition_ii,
    check_condition_iii,
    p_entails,
)
from cohere.services.export import Report
from cohere.services.rule_catalog import builtin_rules, get_rule

app = typer.Typer(help="Built-in inference rules")


def _verdict_text(valid: bool | None) -> str:
    if valid is None:
        return "-"
    return "p-valid" if valid else "not p-valid"


def run_catalog(rules: list[InferenceRule], conditions: bool = False) -> tuple[Report, Table]:
    """Evaluate rules against their expected verdicts."""
    body = Table(title="Rule catalog")
    body.add_column("Rule", style="cyan")
    body.add_column("Expected")
    body.add_column("Verdict")
    body.add_column("Witness")
    body.add_column("LP bound", justify="right")
    if conditions:
        body.add_column("(ii)", justify="center")
        body.add_column("(iii)", justify="center")
    body.add_column("", justify="center")

    report = Report(command="rules run", verdict="")
    matched = 0
    for rule in rules:
        verdict = p_entails(rule)
        ok = rule.expected_valid is None or rule.expected_valid == verdict.p_valid
        ok = ok and verdict.lp_agrees
        matched += ok
        report.add(f"{rule.name}.verdict", _verdict_text(verdict.p_valid))
        report.add(f"{rule.name}.witness", verdict.witness_text)
        report.add(f"{rule.name}.lp_lower_bound", verdict.lp_lower_bound)
        row = [
            rule.name,
            _verdict_text(rule.expected_valid),
            _verdict_text(verdict.p_valid),
            verdict.witness_text,
            str(verdict.lp_lower_bound),
        ]
        if conditions:
            marks = ["-", "-"]
            if verdict.p_consistent:
                lower = verdict.lp_lower_bound
                ii = check_condition_ii(rule, lower)
                iii = check_condition_iii(rule, lower)
                report.add(f"{rule.name}.condition_ii", ii)
                report.add(f"{rule.name}.condition_iii", iii)
                marks = ["yes" if ii else "no", "yes" if iii else "no"]
            row.extend(marks)
        row.append("[green]ok[/]" if ok else "[red]MISMATCH[/]")
        body.add_row(*row)

    report.verdict = f"{matched}/{len(rules)} expected verdicts"
    report.status = 0 if matched == len(rules) else 1
    return report, body


@app.command("list")
def list_rules() -> None:
    """List the catalog with the expected verdict of every rule."""
    table = Table(title="Inference rules")
    table.add_column("Name", style="cyan")
    table.add_column("Rule")
    table.add_column("Expected")
    table.add_column("Description", style="dim")
    for rule in builtin_rules():
        table.add_row(rule.name, str(rule), _verdict_text(rule.expected_valid), rule.description)
    console.print(table)
    console.print(f"\n[dim]{len(builtin_rules())} rule(s)[/]")


@app.command("run")
@guarded
def run_rules(
    names: str = typer.Option(None, "--only", help="Comma-separated rule names (default: all)"),
    conditions: bool = typer.Option(
        False, "--conditions", "-c", help="Also check the conjunction conditions"
    ),
) -> None:
    """Evaluate catalog rules and compare with their expected verdicts."""
    selected = [get_rule(n) for n in split_names(names)] or list(builtin_rules())
    report, body = run_catalog(selected, conditions)
    emit(report, body)
