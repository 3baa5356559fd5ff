"""cohere CLI - coherence-based reasoning with conditional events."""

import logging

import typer
from rich.console import Console
from rich.logging import RichHandler

from cohere import __version__
from cohere.cli import bounds, coherence, entail, rules, table
from cohere.config import configure

app = typer.Typer(
    name="cohere",
    help="Coherence checking, bounds and p-entailment for conditional events.",
    no_args_is_help=True,
)
console = Console()

# Register sub-commands
app.add_typer(coherence.app, name="coherence")
app.add_typer(rules.app, name="rules")
app.command("table")(table.show_table)
app.command("entail")(entail.entail)
app.command("bounds")(bounds.compute_bounds)


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        False,
        "--version",
        help="Show version and exit",
        is_eager=True,
    ),
    output_format: str = typer.Option(
        "human",
        "--format",
        "-f",
        help="Output format (human/machine)",
    ),
    max_atoms: int = typer.Option(None, "--max-atoms", help="World-enumeration limit"),
    verbose: bool = typer.Option(False, "--verbose", "-V", help="Debug logging"),
) -> None:
    """cohere - exact coherence checking for conditional probability assessments."""
    if version:
        console.print(f"[bold blue]cohere[/] version {__version__}")
        raise typer.Exit()
    if ctx.invoked_subcommand is None:
        console.print(ctx.get_help())
        raise typer.Exit()
    if output_format not in ("human", "machine"):
        console.print(f"[red]Unknown format: {output_format}[/]")
        raise typer.Exit(2)

    configure(output_format=output_format, max_atoms=max_atoms)
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


if __name__ == "__main__":
    app()
