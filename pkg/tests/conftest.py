"""Shared fixtures: published case-study constants and a seeded service."""

from __future__ import annotations

from decimal import Decimal

import pytest

from marketentry.indicator import MarketParams
from marketentry.sampledata import (
    load_sample_adjustments,
    load_sample_scenario,
    load_sample_statements,
    sample_statements_csv,
    seed_demo,
)
from marketentry.scenarios import ScenarioService

# Published figures of the case study (automotive-parts producer, values in lei).
ANC_TOTAL = Decimal("361656741")
SOCIAL_CAPITAL = Decimal("21882104")
NET_RESULT_2007 = Decimal("7570903")
DCF_PUBLISHED_TOTAL = Decimal("207360284")   # printed total; not reproducible from
                                             # the stated inputs, kept as a fixture
MARKET_VALUE = Decimal("262585000")          # back-solved from the published I=92.36481
GOLDEN_I = 127.2133818
GOLDEN_ISTAR = 2.104532798
MARKET_I = 92.36481
MARKET_ISTAR = 1.965507
METHOD_DIFF = 0.139026                       # published gap between two method I* values

CASE_PARAMS = MarketParams(
    country_rating=7,
    compatibility=1,
    inflation_target=0.10,
    inflation_origin=0.04,
    growth_target=0.05,
    growth_origin=0.01,
)


@pytest.fixture(scope="session")
def sample_statements():
    return load_sample_statements()


@pytest.fixture(scope="session")
def sample_adjustments():
    return load_sample_adjustments()


@pytest.fixture(scope="session")
def sample_csv_text():
    return sample_statements_csv()


@pytest.fixture(scope="session")
def sample_scenario_doc():
    return load_sample_scenario()


@pytest.fixture
def service(tmp_path):
    return ScenarioService(tmp_path / "data")


@pytest.fixture
def seeded_service(tmp_path):
    data_dir = tmp_path / "data"
    seed_demo(data_dir)
    return ScenarioService(data_dir)
