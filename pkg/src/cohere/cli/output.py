"""Console rendering and error mapping shared by the command modules."""

from __future__ import annotations

import functools
from collections.abc import Callable

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from cohere.config import get_settings
from cohere.errors import CohereError
from cohere.services.export import Report

console = Console()

EXIT_INPUT_ERROR = 2

_VERDICT_STYLE = {0: "green", 1: "yellow"}


def render(report: Report) -> Table:
    style = _VERDICT_STYLE.get(report.status, "red")
    title = f"{report.command}: [{style}]{escape(report.verdict)}[/]"
    table = Table(title=title, show_header=False)
    table.add_column("Key", style="cyan")
    table.add_column("Value")
    for key, value in report.fields:
        table.add_row(key, escape(value))
    return table


def emit(report: Report, body: Table | None = None) -> None:
    """Print a report in the configured format and exit with its status.

    ``body`` replaces the key/value table in human output.
    """
    if get_settings().output_format == "machine":
        typer.echo(report.to_machine())
    else:
        console.print(body if body is not None else render(report))
        for line in report.details:
            console.print(f"[dim]{escape(line)}[/]")
    if report.status:
        raise typer.Exit(report.status)


def guarded(command: Callable) -> Callable:
    """Turn engine and validation errors into a red message and exit status 2."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (CohereError, ValidationError) as exc:
            console.print(f"[red]Error:[/] {escape(str(exc))}")
            raise typer.Exit(EXIT_INPUT_ERROR) from None

    return wrapper


def split_names(value: str | None) -> list[str]:
    return [part.strip() for part in (value or "").split(",") if part.strip()]
