"""Constituent tables of conjunctions, disjunctions and quasi conjunctions."""

from __future__ import annotations

from pathlib import Path

import typer
from rich.table import Table

from cohere.cli.output import emit, guarded, split_names
from cohere.errors import ProblemFileError
from cohere.models.quantity import CrqTable
from cohere.services.crq import (
    conjunction_table,
    disjunction_table,
    instantiate,
    iterated_table,
    quasi_conjunction,
)
from cohere.services.export import table_report
from cohere.utils.importers import Problem, load_problem

OPS = ("and", "or", "qc", "iterated")


def _body(table: CrqTable, title: str) -> Table:
    body = Table(title=title)
    body.add_column("C_h", style="dim")
    body.add_column(" ".join(table.names), style="cyan")
    body.add_column("Value", justify="right")
    for label, code, value in table.rows():
        body.add_row(label, " ".join(code), value)
    return body


def build_table(problem: Problem, op: str, names: list[str]) -> tuple[CrqTable, str | None]:
    """The requested table and an optional caption."""
    unknown = [name for name in names if name not in problem.events]
    if unknown:
        raise ProblemFileError(f"unknown subset member(s): {', '.join(unknown)}")
    family = problem.select(names)
    constraints = problem.constraints
    if op == "and":
        return conjunction_table(family, constraints=constraints), None
    if op == "or":
        return disjunction_table(family, constraints=constraints), None
    if op == "qc":
        event, table = quasi_conjunction(family, constraints=constraints)
        return table, f"{event.name} = {event.label}"
    if len(family) < 2:
        raise ProblemFileError("the iterated table needs at least two conditionals")
    c_n = instantiate(conjunction_table(family[:-1], constraints=constraints), problem.assessment)
    c_next = instantiate(conjunction_table(family, constraints=constraints), problem.assessment)
    caption = f"C_{len(family)} + mu (1 - C_{len(family) - 1}), display only"
    return iterated_table(c_n, c_next), caption


@guarded
def show_table(
    file: Path = typer.Argument(..., help="Problem file (JSON)"),
    op: str = typer.Option(None, "--op", "-o", help="and, or, qc or iterated"),
    subset: str = typer.Option(
        None, "--subset", "-s", help="Comma-separated conditionals (default: all)"
    ),
) -> None:
    """Print the value of a compound quantity on every constituent."""
    problem = load_problem(file)
    query = problem.query if problem.query and problem.query.kind == "table" else None
    op = op or (query.op if query else "and")
    if op not in OPS:
        raise ProblemFileError(f"unknown operation '{op}', expected one of {', '.join(OPS)}")
    names = split_names(subset) or (query.on if query and query.on else list(problem.events))

    table, caption = build_table(problem, op, names)
    report = table_report(table, caption)
    emit(report, _body(table, f"{table.name}  ({len(table.entries)} rows)"))
