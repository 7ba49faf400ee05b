"""Command-line interface.

Every evaluation reachable over HTTP is reachable here with identical
numeric output: both layers share the same serializers, so a JSON value
printed by the CLI matches the corresponding API response field for field.
"""

from __future__ import annotations

import json
import logging
import sys
from datetime import date
from pathlib import Path

import click

from .errors import MarketEntryError, ValidationError
from .indicator import band_to_dict, recommend as recommend_band
from .scenarios import ScenarioService, evaluation_to_dict
from .statements import dynamics, dynamics_to_dict, ingest, serialize_json
from .valuation import (
    DcfParams,
    adjustment_from_dict,
    valuation_to_dict,
    value_anc,
    value_dcf,
)

output_option = click.option(
    "--output",
    type=click.Choice(["json", "table"]),
    default="json",
    show_default=True,
    help="Output format.",
)
data_dir_option = click.option(
    "--data-dir",
    envvar="MARKETENTRY_DATA_DIR",
    type=click.Path(path_type=Path),
    help="Persistence directory (env: MARKETENTRY_DATA_DIR).",
)


def _emit(doc: dict, output: str) -> None:
    if output == "json":
        click.echo(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        _emit_table(doc)


def _emit_table(doc: dict, prefix: str = "") -> None:
    for key, value in doc.items():
        if isinstance(value, dict):
            click.echo(f"{prefix}{key}:")
            _emit_table(value, prefix + "  ")
        elif isinstance(value, list):
            click.echo(f"{prefix}{key}:")
            for entry in value:
                if isinstance(entry, dict):
                    _emit_table(entry, prefix + "  ")
                    click.echo(f"{prefix}  -")
                else:
                    click.echo(f"{prefix}  {entry}")
        else:
            click.echo(f"{prefix}{key}: {value}")


def _fail(exc: MarketEntryError) -> None:
    click.echo(json.dumps({"error": exc.to_dict()}, ensure_ascii=False), err=True)
    sys.exit(1)


def _require_data_dir(data_dir: Path | None) -> Path:
    if data_dir is None:
        raise click.UsageError(
            "--data-dir (or MARKETENTRY_DATA_DIR) is required for this command"
        )
    return data_dir


@click.group()
@click.option(
    "--log-level",
    envvar="MARKETENTRY_LOG_LEVEL",
    default="WARNING",
    show_default=True,
    help="Logging level (env: MARKETENTRY_LOG_LEVEL).",
)
def main(log_level: str) -> None:
    """Market-entry decision engine."""
    logging.basicConfig(level=getattr(logging, log_level.upper(), logging.WARNING))


@main.command("ingest")
@click.argument("file", type=click.Path(exists=True, path_type=Path))
@click.option("--company-id", help="Company id (CSV input only).")
@click.option("--currency", help="ISO-4217 currency (required for CSV input).")
@click.option("--statements-id", help="Id to store under; defaults to the company id.")
@data_dir_option
@output_option
def ingest_cmd(
    file: Path,
    company_id: str | None,
    currency: str | None,
    statements_id: str | None,
    data_dir: Path | None,
    output: str,
) -> None:
    """Parse a statements file (CSV or JSON); store it when --data-dir is set."""
    try:
        statements = ingest(file, company_id=company_id, currency=currency)
        doc = serialize_json(statements)
        if data_dir is not None:
            stored_id = ScenarioService(data_dir).store_statements(
                statements, statements_id
            )
            doc["statements_id"] = stored_id
        _emit(doc, output)
    except MarketEntryError as exc:
        _fail(exc)


@main.group("value")
def value_group() -> None:
    """Run a valuation method directly."""


@value_group.command("anc")
@click.option("--statements", "statements_file", required=True,
              type=click.Path(exists=True, path_type=Path))
@click.option("--company-id", help="Company id (CSV input only).")
@click.option("--currency", help="ISO-4217 currency (required for CSV input).")
@click.option("--period", required=True, help="Valuation period (YYYY-MM-DD).")
@click.option("--adjustments", "adjustments_file",
              type=click.Path(exists=True, path_type=Path),
              help="JSON list of fair-value adjustments.")
@output_option
def value_anc_cmd(
    statements_file: Path,
    company_id: str | None,
    currency: str | None,
    period: str,
    adjustments_file: Path | None,
    output: str,
) -> None:
    """Adjusted net assets from a statements file."""
    try:
        statements = ingest(statements_file, company_id=company_id, currency=currency)
        adjustments = []
        if adjustments_file is not None:
            adjustments = [
                adjustment_from_dict(doc)
                for doc in json.loads(adjustments_file.read_text(encoding="utf-8"))
            ]
        result = value_anc(statements, date.fromisoformat(period), adjustments)
        _emit(valuation_to_dict(result), output)
    except MarketEntryError as exc:
        _fail(exc)


@value_group.command("dcf")
@click.option("--cashflow", required=True, help="Reference-year net cash flow.")
@click.option("--discount-rate", required=True, type=float)
@click.option("--growth", required=True, type=float, help="Perpetual growth rate.")
@click.option("--horizon", required=True, type=int, help="Projection years.")
@output_option
def value_dcf_cmd(
    cashflow: str, discount_rate: float, growth: float, horizon: int, output: str
) -> None:
    """Discounted cash flow with perpetual-growth residual."""
    from decimal import Decimal, InvalidOperation

    try:
        try:
            base = Decimal(cashflow)
        except InvalidOperation:
            raise ValidationError(
                "--cashflow must be a decimal amount", field="cashflow"
            ) from None
        result = value_dcf(
            DcfParams(
                base_cashflow=base,
                discount_rate=discount_rate,
                perpetual_growth=growth,
                horizon_years=horizon,
            )
        )
        _emit(valuation_to_dict(result), output)
    except MarketEntryError as exc:
        _fail(exc)


@main.command("evaluate")
@click.option("--scenario", "scenario_ref", required=True,
              help="Scenario id in the data dir, or a path to a scenario JSON file.")
@click.option("--method", type=click.Choice(["ANC", "DCF", "MARKET"]),
              help="Override the scenario's chosen method.")
@click.option("--statements", "statements_file",
              type=click.Path(exists=True, path_type=Path),
              help="Statements file for ANC when evaluating from a scenario file.")
@click.option("--company-id", help="Company id for CSV statements input.")
@click.option("--currency", help="Currency for CSV statements input.")
@data_dir_option
@output_option
def evaluate_cmd(
    scenario_ref: str,
    method: str | None,
    statements_file: Path | None,
    company_id: str | None,
    currency: str | None,
    data_dir: Path | None,
    output: str,
) -> None:
    """Run valuation + indicator for a scenario and print the record."""
    import tempfile

    try:
        path = Path(scenario_ref)
        if path.exists() and path.is_file():
            # standalone evaluation: work inside a throwaway data dir
            with tempfile.TemporaryDirectory() as tmp:
                service = ScenarioService(tmp)
                payload = json.loads(path.read_text(encoding="utf-8"))
                if statements_file is not None:
                    statements = ingest(
                        statements_file, company_id=company_id, currency=currency
                    )
                    payload["statements_id"] = service.store_statements(statements)
                scenario = service.create_scenario(payload)
                record = service.evaluate(scenario.scenario_id, method=method)
                _emit(evaluation_to_dict(record), output)
        else:
            service = ScenarioService(_require_data_dir(data_dir))
            record = service.evaluate(scenario_ref, method=method)
            _emit(evaluation_to_dict(record), output)
    except MarketEntryError as exc:
        _fail(exc)


@main.command("recommend")
@click.option("--istar", required=True, type=float, help="Log-scale indicator value.")
@output_option
def recommend_cmd(istar: float, output: str) -> None:
    """Strategy band for a log-indicator value."""
    try:
        _emit(band_to_dict(recommend_band(istar)), output)
    except MarketEntryError as exc:
        _fail(exc)


@main.command("compare")
@click.option("--scenario", "scenario_id", required=True, help="Scenario id.")
@data_dir_option
@output_option
def compare_cmd(scenario_id: str, data_dir: Path | None, output: str) -> None:
    """Indicator log values per method plus pairwise differences."""
    try:
        service = ScenarioService(_require_data_dir(data_dir))
        _emit(service.compare_methods(scenario_id), output)
    except MarketEntryError as exc:
        _fail(exc)


@main.command("dynamics")
@click.option("--statements", "statements_file", required=True,
              type=click.Path(exists=True, path_type=Path))
@click.option("--company-id", help="Company id (CSV input only).")
@click.option("--currency", help="Currency (required for CSV input).")
@click.option("--items", required=True, help="Comma-separated item ids.")
@output_option
def dynamics_cmd(
    statements_file: Path,
    company_id: str | None,
    currency: str | None,
    items: str,
    output: str,
) -> None:
    """Per-item deltas, growth rates and base-period index."""
    try:
        statements = ingest(statements_file, company_id=company_id, currency=currency)
        series = dynamics(statements, [i.strip() for i in items.split(",") if i.strip()])
        _emit({"series": [dynamics_to_dict(s) for s in series]}, output)
    except MarketEntryError as exc:
        _fail(exc)


@main.command("serve")
@click.option("--port", envvar="MARKETENTRY_PORT", default=8000, show_default=True,
              type=int, help="Listen port (env: MARKETENTRY_PORT).")
@click.option("--host", default="127.0.0.1", show_default=True)
@data_dir_option
@click.option("--ui-dir", type=click.Path(exists=True, file_okay=False, path_type=Path),
              help="Directory with the built web workbench to serve at /.")
@click.option("--seed-demo", is_flag=True,
              help="Seed the data dir with the bundled sample company first.")
def serve_cmd(
    port: int, host: str, data_dir: Path | None, ui_dir: Path | None, seed_demo: bool
) -> None:
    """Run the HTTP scenario service."""
    import uvicorn

    from .api import create_app
    from .sampledata import seed_demo as seed

    resolved = _require_data_dir(data_dir)
    if seed_demo:
        scenario_id = seed(resolved)
        click.echo(f"seeded demo scenario {scenario_id!r} into {resolved}")
    uvicorn.run(create_app(resolved, ui_dir=ui_dir), host=host, port=port)


if __name__ == "__main__":
    main()
