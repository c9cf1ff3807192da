"""Tema visual de coarse-kit en el terminal.

Todo se imprime en stderr: stdout queda reservado para el reporte JSON.
"""

from rich.console import Console
from rich.table import Table

from cli.config_loader import VERSION

stderr_console = Console(stderr=True)


def render_banner(console: Console, command: str):
    """Linea de cabecera compacta con el subcomando y la version."""
    console.print(f"  [bold cyan]coarse-kit[/bold cyan] [dim]v{VERSION}[/dim]  [bold]{command}[/bold]")


def render_error(console: Console, message: str):
    """Renderiza un mensaje de error con formato consistente."""
    console.print(f"\n  [bold red]Error:[/bold red] {message}\n")


def render_status(console: Console, message: str):
    """Renderiza un mensaje de estado/info."""
    console.print(f"  [cyan]{message}[/cyan]")


def render_warning(console: Console, message: str):
    console.print(f"  [yellow]{message}[/yellow]")


def render_success(console: Console, message: str):
    console.print(f"  [bold green]{message}[/bold green]")


def render_verdict(console: Console, passed: bool, label: str):
    if passed:
        render_success(console, f"{label}: OK")
    else:
        console.print(f"  [bold red]{label}: FALLA[/bold red]")


def render_law_table(console: Console, report: dict):
    """Tabla ley / intentos / fallas para el reporte de verify."""
    table = Table(show_header=True, box=None, padding=(0, 2), expand=False)
    table.add_column("ley", style="cyan", no_wrap=True)
    table.add_column("casos", justify="right")
    table.add_column("fallas", justify="right")
    table.add_column("obs", style="dim")

    for law in report.get("laws", []):
        failures = law["failures"]
        style = "bold red" if failures else "green"
        observations = ", ".join(f"{k}={v}" for k, v in law.get("observations", {}).items())
        name = law["law_id"] + (f" ({law['mutation']})" if law.get("mutation") else "")
        table.add_row(name, str(law["trials"]), f"[{style}]{failures}[/{style}]", observations)

    console.print(table)


def render_scale_table(console: Console, scales: list):
    """Tabla por escala del reporte de Hurewicz."""
    table = Table(show_header=True, box=None, padding=(0, 2), expand=False)
    for column in ("r", "n_f", "n_Y", "n_X", "armado", "D", "ok"):
        table.add_column(column, justify="right")

    for entry in scales:
        holds = entry.get("inequality_holds")
        mark = "-" if holds is None else ("[green]si[/green]" if holds else "[red]no[/red]")
        table.add_row(
            str(entry["scale"]), str(entry["n_f"]), str(entry["n_Y"]),
            str(entry["n_X"]), str(entry.get("n_X_assembled")), str(entry["D_bound"]), mark,
        )

    console.print(table)
