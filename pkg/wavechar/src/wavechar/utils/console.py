# SPDX-FileCopyrightText: 2025 Wavechar Authors and Contributors
# SPDX-License-Identifier: BSD-3-Clause

import typer


def print_status(status_label: str, color: str, message: str) -> None:
    typer.echo(f"{typer.style(status_label, fg=color)} {message}", err=True)


def info(message: str) -> None:
    print_status("[INFO]", "cyan", message)


def success(message: str) -> None:
    print_status("[OK]", "green", message)


def warning(message: str) -> None:
    print_status("[WARNING]", "yellow", message)


def error(message: str) -> None:
    print_status("[ERROR]", "red", message)


def print_banner(title: str, rows: list[tuple[str, str]]) -> None:
    typer.echo("", err=True)
    typer.echo(typer.style("=" * 60, fg="cyan"), err=True)
    typer.echo(typer.style(title, fg="cyan", bold=True), err=True)
    typer.echo(typer.style("=" * 60, fg="cyan"), err=True)
    width = max((len(label) for label, _ in rows), default=0)
    for label, value in rows:
        typer.echo(f"  {label.ljust(width)}  {value}", err=True)
    typer.echo(typer.style("=" * 60, fg="cyan"), err=True)


class ProgressReporter:
    """Reports completion every ``step_percent`` of a batch of known size."""

    total: int
    label: str
    step: int
    _next: int

    def __init__(self, total: int, label: str, step_percent: int = 10):
        self.total = total
        self.label = label
        self.step = max(1, (total * step_percent) // 100)
        self._next = self.step

    def update(self, done: int) -> None:
        if done >= self._next or done == self.total:
            info(f"{self.label}: {done}/{self.total}")
            while self._next <= done:
                self._next += self.step
