"""p-entailment for a catalog rule or a problem file."""

from __future__ import annotations

from pathlib import Path

import typer

from cohere.cli.output import console, emit, guarded
from cohere.cli.rules import run_catalog
from cohere.errors import ProblemFileError
from cohere.services.entailment import InferenceRule, p_entails
from cohere.services.export import entailment_report
from cohere.services.rule_catalog import builtin_rules, get_rule
from cohere.utils.importers import load_problem


def rule_from_file(path: Path) -> InferenceRule:
    problem = load_problem(path)
    query = problem.query
    if query is None or query.kind != "entail":
        raise ProblemFileError(f"{path}: no entail query")
    return InferenceRule(
        name=path.stem,
        premises=tuple(problem.select(query.premises)),
        conclusion=problem.events[query.conclusion],
        constraints=problem.constraints,
    )


@guarded
def entail(
    source: str = typer.Argument(None, help="Rule name from the catalog, or a problem file"),
    run_all: bool = typer.Option(False, "--all", "-a", help="Run the whole catalog"),
) -> None:
    """Decide whether the premises p-entail the conclusion."""
    if run_all:
        report, body = run_catalog(list(builtin_rules()))
        emit(report, body)
        return
    if not source:
        console.print("[red]Give a rule name or a problem file, or use --all.[/]")
        raise typer.Exit(2)
    path = Path(source)
    rule = rule_from_file(path) if path.suffix == ".json" or path.exists() else get_rule(source)
    emit(entailment_report(rule, p_entails(rule)))
