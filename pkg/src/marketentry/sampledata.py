"""Bundled sample dataset: an automotive-parts producer case study.

The balance sheet is synthetic: only the published aggregates of the case
are known, so line items were constructed to reproduce them exactly
(adjusted net assets 361,656,741; social capital 21,882,104; reference-year
net result 7,570,903, all in lei).
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .scenarios import ScenarioService
from .statements import FinancialStatements, ingest_csv
from .valuation import Adjustment, adjustment_from_dict

SAMPLE_COMPANY_ID = "compa"
SAMPLE_CURRENCY = "RON"

_PACKAGE = "marketentry.data"


def _read_text(name: str) -> str:
    return resources.files(_PACKAGE).joinpath(name).read_text(encoding="utf-8")


def sample_statements_csv() -> str:
    return _read_text("compa_statements.csv")


def load_sample_statements() -> FinancialStatements:
    return ingest_csv(
        sample_statements_csv(),
        company_id=SAMPLE_COMPANY_ID,
        currency=SAMPLE_CURRENCY,
    )


def load_sample_adjustments() -> list[Adjustment]:
    return [adjustment_from_dict(doc) for doc in json.loads(_read_text("compa_adjustments.json"))]


def load_sample_scenario() -> dict:
    return json.loads(_read_text("compa_scenario.json"))


def seed_demo(data_dir: str | Path) -> str:
    """Seed a data directory with the sample statements and scenario.

    Returns the scenario id. Idempotent: an already seeded directory is
    left as is.
    """
    service = ScenarioService(data_dir)
    service.store_statements(load_sample_statements(), SAMPLE_COMPANY_ID)
    scenario = load_sample_scenario()
    if not service.store.exists("scenarios", scenario["scenario_id"]):
        service.create_scenario(scenario)
    return scenario["scenario_id"]
