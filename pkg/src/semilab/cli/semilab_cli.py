"""CLI for semilab"""

import json
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import typer
from pydantic import ValidationError

from semilab.ambient.pair import AmbientPair
from semilab.catalog import Analyze, build_pair, list_catalog, load_config, verify_dossier
from semilab.conditions import ore_probe, quasi_lattice_probe, reversibility_probe, toeplitz_probe
from semilab.config import (
    DEFAULT_BOUND,
    DEFAULT_DEPTH,
    DEFAULT_HULL_DEPTH,
    DEFAULT_MARGIN,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOEPLITZ_BUDGET,
    DOSSIER_SCHEMA_PATH,
    EXIT_BUDGET,
    EXIT_USAGE,
    EXIT_VERDICT_FAILURE,
    Condition,
)
from semilab.errors import BudgetExceededError, UsageError
from semilab.schemas import AnalysisConfig, Dossier, SemigroupConfig
from semilab.utils import save_json

app = typer.Typer(help="Combinatorial probes for semigroup C*-algebras", pretty_exceptions_enable=False)

CATALOG_COLUMNS = ["family_id", "ambient", "amenable", "left_ore", "topologically_free", "description"]


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug messages")) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


@app.command("analyze")
def analyze_command(
    family: Optional[str] = typer.Option(None, "--family", "-f", help="Catalog id, e.g. numerical:2,3"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="YAML semigroup definition"),
    depth: int = typer.Option(DEFAULT_DEPTH, help="Depth of the ideal closure"),
    bound: int = typer.Option(DEFAULT_BOUND, help="Length bound of the probes"),
    seed: int = typer.Option(DEFAULT_SEED, help="Seed of the G_0 sampling"),
    margin: int = typer.Option(DEFAULT_MARGIN, help="Depth margin of the action"),
    hull_depth: int = typer.Option(DEFAULT_HULL_DEPTH, help="Word length of the hull"),
    toeplitz_budget: int = typer.Option(DEFAULT_TOEPLITZ_BUDGET, help="Letter pairs per decomposition"),
    samples: int = typer.Option(DEFAULT_SAMPLES, help="Number of sampled group elements"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Dossier file, stdout when omitted"),
    timing: bool = typer.Option(False, help="Record wall-clock seconds in the Dossier"),
    progress: bool = typer.Option(False, help="Show a progress bar"),
    strict: bool = typer.Option(False, help="Exit with 1 unless the checklist passes"),
) -> None:
    """Run every probe on a semigroup and emit the Dossier"""
    with _exit_codes():
        amb, source = _semigroup(family, config)
        settings = AnalysisConfig(
            depth=depth,
            bound=bound,
            seed=seed,
            margin=margin,
            hull_depth=hull_depth,
            toeplitz_budget=toeplitz_budget,
            samples=samples,
            timing=timing,
            progress=progress,
        )
        analyze = Analyze(amb, source, settings)
        dossier = analyze.run()
    if out is None:
        typer.echo(json.dumps(dossier.model_dump(mode="json"), indent=4, ensure_ascii=False))
    else:
        analyze.save(dossier, out)
        typer.echo(_summary(dossier))
        typer.echo(f"Dossier written to {out}")
    if strict and dossier.checklist.verdict != "ChecklistPasses":
        raise typer.Exit(code=EXIT_VERDICT_FAILURE)


@app.command("verify")
def verify_command(
    dossier: Path = typer.Argument(..., help="Dossier file to replay"),
    depth: Optional[int] = typer.Option(None, help="Rebuild the family at another depth"),
) -> None:
    """Replay every witness of a Dossier"""
    with _exit_codes():
        report = verify_dossier(dossier, depth)
    for failure in report.failures:
        typer.echo(f"FAIL {failure.path}: {failure.detail}", err=True)
    if not report.passed:
        raise typer.Exit(code=EXIT_VERDICT_FAILURE)
    typer.echo(f"{len(report.checks)} checks passed for {report.family_id} at depth {report.depth}")


@app.command("list")
def list_command(as_json: bool = typer.Option(False, "--json", help="Print the full table as JSON records")) -> None:
    """List the catalog families"""
    catalog = list_catalog()
    if as_json:
        typer.echo(json.dumps(catalog.to_dict(orient="records"), indent=4, ensure_ascii=False))
    else:
        typer.echo(catalog[CATALOG_COLUMNS].to_string(index=False))


@app.command("probe")
def probe_command(
    condition: Condition = typer.Option(..., "--condition", help="Condition to probe"),
    family: Optional[str] = typer.Option(None, "--family", "-f", help="Catalog id"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="YAML semigroup definition"),
    bound: int = typer.Option(DEFAULT_BOUND, help="Length bound of the search"),
    budget: int = typer.Option(DEFAULT_TOEPLITZ_BUDGET, help="Letter pairs per Toeplitz decomposition"),
) -> None:
    """Probe one condition and print its report"""
    with _exit_codes():
        amb, _ = _semigroup(family, config)
        if condition is Condition.TOEPLITZ:
            report = toeplitz_probe(amb, bound, budget)
        elif condition is Condition.QUASI_LATTICE:
            report = quasi_lattice_probe(amb, bound)
        elif condition is Condition.ORE:
            report = ore_probe(amb, bound)
        else:
            report = reversibility_probe(amb, bound)
    typer.echo(json.dumps(report.model_dump(mode="json"), indent=4, ensure_ascii=False))


@app.command("schema")
def schema_command(
    out: Path = typer.Option(DOSSIER_SCHEMA_PATH, "--out", "-o", help="Where to write the JSON schema"),
) -> None:
    """Write the Dossier JSON schema"""
    save_json(Dossier.model_json_schema(), out)
    typer.echo(f"Dossier schema written to {out}")


# Helper functions
@contextmanager
def _exit_codes() -> Iterator[None]:
    try:
        yield
    except UsageError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(code=EXIT_USAGE)
    except ValidationError as e:
        error = e.errors()[0]
        typer.echo(f"Error: {'.'.join(str(part) for part in error['loc'])}: {error['msg']}", err=True)
        raise typer.Exit(code=EXIT_USAGE)
    except BudgetExceededError as e:
        typer.echo(f"Budget exceeded: {e}", err=True)
        raise typer.Exit(code=EXIT_BUDGET)


def _semigroup(family: Optional[str], config: Optional[Path]) -> tuple[AmbientPair, SemigroupConfig]:
    if (family is None) == (config is None):
        raise UsageError("pass exactly one of --family and --config")
    source = SemigroupConfig(family=family) if config is None else load_config(config)
    return build_pair(source), source


def _summary(dossier: Dossier) -> str:
    statuses = ", ".join(f"{report.condition} {report.status}" for report in dossier.conditions)
    lines = [
        f"{dossier.family_id}: {dossier.description}",
        f"  ideals: {dossier.family.nonempty_count} nonempty at depth {dossier.depth}"
        + (" (truncated)" if dossier.family.truncated else ""),
        f"  independence: {dossier.independence.verdict}",
        f"  conditions: {statuses}",
        f"  hull: {dossier.hull.size} nonzero elements",
        f"  spectrum: {dossier.spectrum.filter_count} filters, {dossier.spectrum.ultrafilter_count} ultrafilters, "
        f"{dossier.spectrum.boundary_size} boundary",
        f"  checklist: {dossier.checklist.verdict}",
    ]
    return "\n".join(lines)


if __name__ == "__main__":
    app()
