"""Coherence checking and extension commands."""

from __future__ import annotations

from pathlib import Path

import typer

from cohere.cli.output import console, emit, guarded, split_names
from cohere.errors import ProblemFileError
from cohere.models.bounds import Interval, ThreeEventAssessment
from cohere.models.quantity import Connective, PrevisionSymbol, conjunction_symbol
from cohere.services import bounds
from cohere.services.coherence import check_coherence, check_coherence_subsets, extension_interval
from cohere.services.crq import (
    Quantity,
    as_table,
    conjunction_table,
    disjunction_table,
    quantity_symbol,
)
from cohere.services.export import coherence_report, extension_report
from cohere.services.logic import is_logically_independent
from cohere.utils.importers import Problem, load_problem

app = typer.Typer(help="Check and extend probability assessments")


@app.command("check")
@guarded
def check(
    file: Path = typer.Argument(..., help="Problem file (JSON)"),
    subsets: bool = typer.Option(
        False, "--subsets", help="Use the sub-family oracle instead of the recursive algorithm"
    ),
) -> None:
    """Decide whether the file's assessment is coherent."""
    problem = load_problem(file)
    if not problem.quantities:
        console.print("[red]The file assesses nothing.[/]")
        raise typer.Exit(2)
    checker = check_coherence_subsets if subsets else check_coherence
    verdict = checker(problem.quantities, problem.assessment, problem.constraints)
    emit(coherence_report(verdict))


def _target(problem: Problem, target: str | None, on: list[str], op: str) -> Quantity:
    if target:
        if target not in problem.events:
            raise ProblemFileError(f"unknown conditional '{target}'")
        return problem.events[target]
    unknown = [name for name in on if name not in problem.events]
    if unknown or not on:
        raise ProblemFileError(f"cannot extend to {on}: unknown {unknown}")
    members = problem.select(on)
    if len(members) == 1:
        return members[0]
    maker = disjunction_table if op == "or" else conjunction_table
    return maker(members, constraints=problem.constraints)


def free_symbols(problem: Problem, base: list[Quantity], target: Quantity) -> list[str]:
    """Lower-order previsions the tables need but the file leaves unassessed."""
    own = quantity_symbol(target)
    needed: set[PrevisionSymbol] = set()
    for quantity in [*base, target]:
        needed |= as_table(quantity, problem.constraints).symbols()
    return sorted(str(s) for s in needed if s != own and s not in problem.assessment)


def closed_form(
    problem: Problem, base: list[Quantity], target: PrevisionSymbol
) -> tuple[str, Interval] | None:
    """The closed-form interval matching this query, when one applies."""
    members = sorted(target.members)
    if not is_logically_independent(problem.select(members), problem.constraints):
        return None
    symbols = {quantity_symbol(q) for q in base}
    singles = {conjunction_symbol([m]) for m in members}
    a = problem.assessment
    values = [a[conjunction_symbol([m])] for m in members] if singles <= symbols else None

    if symbols == singles and len(members) >= 2:
        if target.kind == Connective.OR:
            return "frechet_or", bounds.frechet_disjunction_n(values)
        if len(members) == 2:
            return "frechet_two", bounds.frechet_two(*values)
        return "frechet_and", bounds.frechet_conjunction_n(values)
    if target.kind != Connective.AND:
        return None
    if len(symbols) == 2 and len(members) >= 3:
        for last in members:
            rest = [m for m in members if m != last]
            if symbols == {conjunction_symbol(rest), conjunction_symbol([last])}:
                mu_n = a[conjunction_symbol(rest)]
                return "step", bounds.conj_step_bounds(mu_n, a[conjunction_symbol([last])])
    if len(members) == 3:
        e1, e2, e3 = members
        pairs = {conjunction_symbol(p) for p in ((e1, e2), (e1, e3), (e2, e3))}
        if symbols == singles | pairs:
            prefix = ThreeEventAssessment(
                *values,
                a[conjunction_symbol([e1, e2])],
                a[conjunction_symbol([e1, e3])],
                a[conjunction_symbol([e2, e3])],
            )
            return "three_event", bounds.three_event_extension_bounds(prefix)
    return None


@app.command("extend")
@guarded
def extend(
    file: Path = typer.Argument(..., help="Problem file (JSON)"),
    target: str = typer.Option(None, "--target", "-t", help="Conditional to extend to"),
    on: str = typer.Option(
        None, "--on", help="Comma-separated conditionals whose conjunction is the target"
    ),
    op: str = typer.Option("and", "--op", help="Connective for --on: and or or"),
) -> None:
    """Print the interval of coherent values for a new quantity."""
    problem = load_problem(file)
    names = split_names(on)
    if target is None and not names:
        query = problem.query
        if query is None or query.kind != "extend":
            console.print("[red]Give --target or --on, or add an extend query to the file.[/]")
            raise typer.Exit(2)
        target, names, op = query.target, query.on, query.op
    if op not in ("and", "or"):
        raise ProblemFileError(f"unsupported connective '{op}'")

    quantity = _target(problem, target, names, op)
    symbol = quantity_symbol(quantity)
    base = [q for q in problem.quantities if quantity_symbol(q) != symbol]
    known = closed_form(problem, base, symbol)
    label = symbol.label() if target is None else target
    free = free_symbols(problem, base, quantity)
    if free:
        # the closed forms hold for every coherent choice of the free previsions
        if known is None:
            raise ProblemFileError(
                f"unassessed previsions {', '.join(free)} and no closed form covers them"
            )
        emit(extension_report(label, known[1], known, free=free))
        return
    interval = extension_interval(base, problem.assessment, quantity, problem.constraints)
    emit(extension_report(label, interval, known))
