"""Command-line front end.

Three subcommands: ``analyze`` runs the full report on a spec file,
``suite`` replays the embedded worked examples, ``audit`` runs the
randomized property audit. Exit codes: 0 success, 2 parse/usage/budget
problems, 3 failed assertions or violated properties.
"""

from __future__ import annotations

import sys

import click

from . import mt
from .audit import render_audit, run_audit
from .code_core import DEFAULT_CAP
from .errors import CapExceeded, InternalCheckError, PropertyViolation, SpecFileError
from .fixtures import FIXTURES, run_fixture
from .report import build_report, render_machine, render_text
from .specfile import load_spec


@click.group()
def main():
    """Multi-twisted codes: dimensions, duals, hulls and LCD verdicts."""


@main.command()
@click.argument("path")
@click.option("--mindist", is_flag=True,
              help="Also compute the exact minimum distance by enumeration.")
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True,
              help="Enumeration budget for --mindist.")
@click.option("--dual", "use_dual", is_flag=True,
              help="Analyze the dual code instead.")
@click.option("--machine", is_flag=True,
              help="Line-oriented key=value output instead of prose.")
def analyze(path, mindist, cap, use_dual, machine):
    """Report everything about the code described by the spec file PATH."""
    try:
        spec = load_spec(path)
    except SpecFileError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    if use_dual:
        spec = mt.dual_spec(spec)
    try:
        rep = build_report(spec, mindist=mindist, cap=cap)
    except CapExceeded as exc:
        click.echo(f"error: {exc}; raise --cap or drop --mindist", err=True)
        sys.exit(2)
    except InternalCheckError as exc:
        click.echo(f"internal check failed: {exc}", err=True)
        sys.exit(3)
    click.echo(render_machine(rep) if machine else render_text(rep), nl=False)


@main.command()
@click.option("--list", "list_only", is_flag=True,
              help="List fixture keys and titles without computing anything.")
@click.option("--mindist", is_flag=True,
              help="Use full enumeration where a fixture defaults to a witness argument.")
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True,
              help="Enumeration budget for distance checks.")
def suite(list_only, mindist, cap):
    """Replay the embedded worked examples and verify every claim."""
    if list_only:
        for fx in FIXTURES:
            click.echo(f"{fx.key}: {fx.title}")
        return
    failures = 0
    for fx in FIXTURES:
        try:
            checks = run_fixture(fx, full_mindist=mindist, cap=cap)
        except CapExceeded as exc:
            click.echo(f"error: {fx.key}: {exc}; raise --cap", err=True)
            sys.exit(2)
        except InternalCheckError as exc:
            click.echo(f"internal check failed in {fx.key}: {exc}", err=True)
            sys.exit(3)
        bad = [c for c in checks if not c.ok]
        click.echo(f"{fx.key}: {'FAIL' if bad else 'ok'} ({len(checks)} checks)")
        for c in bad:
            failures += 1
            detail = f" [{c.detail}]" if c.detail else ""
            click.echo(f"  {fx.key}: {c.claim}{detail}")
    if failures:
        click.echo(f"{failures} failing check(s)", err=True)
        sys.exit(3)


@main.command()
@click.option("--trials", type=click.IntRange(min=1), default=1000,
              show_default=True, help="Number of random specs to draw.")
@click.option("--seed", type=int, default=42, show_default=True,
              help="Base seed; per-trial sub-seeds derive from it.")
def audit(trials, seed):
    """Check the package invariants on random specs."""
    try:
        result = run_audit(trials, seed)
    except PropertyViolation as exc:
        click.echo(str(exc), err=True)
        sys.exit(3)
    click.echo(render_audit(result), nl=False)
