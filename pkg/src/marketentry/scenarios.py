"""Scenario workflow: persistence, evaluation, and method comparison.

A scenario bundles one company's comparative market parameters with the
inputs of up to three valuation routes (adjusted net assets from stored
statements, discounted cash flow, explicit market value). Evaluating a
scenario runs the chosen valuation, feeds the resulting company value and
the registered capital into the risk indicator, and persists an immutable
evaluation record.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from datetime import date, datetime, timezone
from decimal import Decimal, InvalidOperation
from pathlib import Path

from .errors import (
    InsufficientMethodsError,
    NotFoundError,
    ValidationError,
)
from .indicator import (
    CompanyValueInput,
    IndicatorResult,
    MarketParams,
    ValuationMethod,
    compute_indicator,
    result_to_dict,
    validate_params,
)
from .statements import FinancialStatements, ingest_json, serialize_json
from .store import FileStore, new_entity_id
from .valuation import (
    Adjustment,
    DcfParams,
    ValuationResult,
    adjustment_from_dict,
    adjustment_to_dict,
    market_valuation,
    valuation_to_dict,
    value_anc,
    value_dcf,
)

logger = logging.getLogger(__name__)

SCENARIOS = "scenarios"
STATEMENTS = "statements"
EVALUATIONS = "evaluations"


def _decimal_field(raw, name: str, *, positive: bool = True) -> Decimal:
    try:
        value = Decimal(str(raw))
    except InvalidOperation:
        raise ValidationError(f"{name} must be a decimal amount", field=name) from None
    if positive and value <= 0:
        raise ValidationError(f"{name} must be positive", field=name)
    return value


@dataclass
class Scenario:
    scenario_id: str
    company_id: str
    market_params: MarketParams
    social_capital: Decimal
    chosen_method: ValuationMethod
    statements_id: str | None = None
    dcf_params: DcfParams | None = None
    adjustments: tuple[Adjustment, ...] = ()
    valuation_period: date | None = None
    market_value: Decimal | None = None
    version: int = 0
    created_at: str = ""
    updated_at: str = ""

    def available_methods(self) -> list[ValuationMethod]:
        methods = []
        if self.statements_id:
            methods.append(ValuationMethod.ANC)
        if self.dcf_params is not None:
            methods.append(ValuationMethod.DCF)
        if self.market_value is not None:
            methods.append(ValuationMethod.MARKET)
        return methods


@dataclass
class EvaluationRecord:
    record_id: str
    scenario_id: str
    method: ValuationMethod
    valuation: ValuationResult
    indicator: IndicatorResult
    evaluated_at: str
    scenario_snapshot: dict = field(default_factory=dict)


def market_params_from_dict(doc: dict) -> MarketParams:
    fields = (
        "country_rating",
        "compatibility",
        "inflation_target",
        "inflation_origin",
        "growth_target",
        "growth_origin",
    )
    missing = [f for f in fields if f not in doc]
    if missing:
        raise ValidationError(
            f"market_params missing fields: {', '.join(missing)}",
            field=f"market_params.{missing[0]}",
        )
    try:
        return MarketParams(**{f: float(doc[f]) for f in fields})
    except (TypeError, ValueError):
        raise ValidationError(
            "market_params fields must be numbers", field="market_params"
        ) from None


def market_params_to_dict(params: MarketParams) -> dict:
    return {
        "country_rating": params.country_rating,
        "compatibility": params.compatibility,
        "inflation_target": params.inflation_target,
        "inflation_origin": params.inflation_origin,
        "growth_target": params.growth_target,
        "growth_origin": params.growth_origin,
    }


def dcf_params_from_dict(doc: dict) -> DcfParams:
    try:
        return DcfParams(
            base_cashflow=_decimal_field(
                doc["base_cashflow"], "dcf_params.base_cashflow", positive=False
            ),
            discount_rate=float(doc["discount_rate"]),
            perpetual_growth=float(doc["perpetual_growth"]),
            horizon_years=int(doc["horizon_years"]),
        )
    except KeyError as exc:
        raise ValidationError(
            f"dcf_params missing field {exc}", field=f"dcf_params.{exc.args[0]}"
        ) from None
    except (TypeError, ValueError):
        raise ValidationError("dcf_params fields must be numbers", field="dcf_params") from None


def dcf_params_to_dict(params: DcfParams) -> dict:
    return {
        "base_cashflow": str(params.base_cashflow),
        "discount_rate": params.discount_rate,
        "perpetual_growth": params.perpetual_growth,
        "horizon_years": params.horizon_years,
    }


def scenario_from_dict(doc: dict) -> Scenario:
    for required in ("company_id", "market_params", "social_capital", "chosen_method"):
        if required not in doc or doc[required] in (None, ""):
            raise ValidationError(f"{required} is required", field=required)
    try:
        chosen = ValuationMethod(doc["chosen_method"])
    except ValueError:
        raise ValidationError(
            f"unknown chosen_method {doc['chosen_method']!r}", field="chosen_method"
        ) from None

    period = doc.get("valuation_period")
    scenario = Scenario(
        scenario_id=str(doc.get("scenario_id") or new_entity_id()),
        company_id=str(doc["company_id"]),
        market_params=market_params_from_dict(doc["market_params"]),
        social_capital=_decimal_field(doc["social_capital"], "social_capital"),
        chosen_method=chosen,
        statements_id=doc.get("statements_id") or None,
        dcf_params=None
        if doc.get("dcf_params") is None
        else dcf_params_from_dict(doc["dcf_params"]),
        adjustments=tuple(
            adjustment_from_dict(a) for a in (doc.get("adjustments") or [])
        ),
        valuation_period=None if period is None else date.fromisoformat(period),
        market_value=None
        if doc.get("market_value") is None
        else _decimal_field(doc["market_value"], "market_value"),
        version=int(doc.get("version", 0)),
        created_at=str(doc.get("created_at", "")),
        updated_at=str(doc.get("updated_at", "")),
    )
    _check_method_inputs(scenario)
    return scenario


def _check_method_inputs(scenario: Scenario) -> None:
    method = scenario.chosen_method
    if method is ValuationMethod.ANC and not scenario.statements_id:
        raise ValidationError(
            "chosen_method ANC requires statements_id", field="statements_id"
        )
    if method is ValuationMethod.DCF and scenario.dcf_params is None:
        raise ValidationError("chosen_method DCF requires dcf_params", field="dcf_params")
    if method is ValuationMethod.MARKET and scenario.market_value is None:
        raise ValidationError(
            "chosen_method MARKET requires market_value", field="market_value"
        )


def scenario_to_dict(scenario: Scenario) -> dict:
    return {
        "scenario_id": scenario.scenario_id,
        "company_id": scenario.company_id,
        "market_params": market_params_to_dict(scenario.market_params),
        "social_capital": str(scenario.social_capital),
        "chosen_method": scenario.chosen_method.value,
        "statements_id": scenario.statements_id,
        "dcf_params": None
        if scenario.dcf_params is None
        else dcf_params_to_dict(scenario.dcf_params),
        "adjustments": [adjustment_to_dict(a) for a in scenario.adjustments],
        "valuation_period": None
        if scenario.valuation_period is None
        else scenario.valuation_period.isoformat(),
        "market_value": None
        if scenario.market_value is None
        else str(scenario.market_value),
        "version": scenario.version,
        "created_at": scenario.created_at,
        "updated_at": scenario.updated_at,
    }


def evaluation_to_dict(record: EvaluationRecord) -> dict:
    return {
        "record_id": record.record_id,
        "scenario_id": record.scenario_id,
        "method": record.method.value,
        "evaluated_at": record.evaluated_at,
        "valuation": valuation_to_dict(record.valuation),
        "indicator": result_to_dict(record.indicator),
        "inputs": {
            "company_value": str(record.valuation.value),
            "social_capital": record.scenario_snapshot.get("social_capital"),
        },
        "scenario": record.scenario_snapshot,
    }


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class ScenarioService:
    """Orchestrates statements, scenarios, valuations and evaluations."""

    def __init__(self, data_dir: str | Path):
        self.store = FileStore(data_dir)

    # -- statements ---------------------------------------------------------

    def store_statements(
        self, statements: FinancialStatements, statements_id: str | None = None
    ) -> str:
        statements_id = statements_id or statements.company_id or new_entity_id()
        doc = serialize_json(statements)
        doc["statements_id"] = statements_id
        if self.store.exists(STATEMENTS, statements_id):
            current = self.store.load(STATEMENTS, statements_id)
            self.store.update(STATEMENTS, statements_id, doc, current["version"])
        else:
            self.store.create(STATEMENTS, statements_id, doc)
        return statements_id

    def get_statements(self, statements_id: str) -> FinancialStatements:
        return ingest_json(self.store.load(STATEMENTS, statements_id))

    def list_statement_ids(self) -> list[str]:
        return self.store.list_ids(STATEMENTS)

    # -- scenario CRUD ------------------------------------------------------

    def create_scenario(self, payload: dict) -> Scenario:
        scenario = scenario_from_dict(payload)
        # fail early on bad market parameters, independent of any valuation
        validate_params(
            scenario.market_params,
            CompanyValueInput(
                value=scenario.social_capital,
                social_capital=scenario.social_capital,
                method=scenario.chosen_method,
            ),
        )
        if scenario.statements_id and not self.store.exists(
            STATEMENTS, scenario.statements_id
        ):
            raise NotFoundError(f"statements {scenario.statements_id!r} not found")
        now = _now()
        scenario.created_at = now
        scenario.updated_at = now
        doc = self.store.create(
            SCENARIOS, scenario.scenario_id, scenario_to_dict(scenario)
        )
        logger.info("created scenario %s", scenario.scenario_id)
        return scenario_from_dict(doc)

    def get_scenario(self, scenario_id: str) -> Scenario:
        return scenario_from_dict(self.store.load(SCENARIOS, scenario_id))

    def update_scenario(
        self, scenario_id: str, payload: dict, expected_version: int
    ) -> Scenario:
        current = self.get_scenario(scenario_id)
        payload = dict(payload)
        payload["scenario_id"] = scenario_id
        payload.setdefault("created_at", current.created_at)
        scenario = scenario_from_dict(payload)
        scenario.updated_at = _now()
        doc = self.store.update(
            SCENARIOS, scenario_id, scenario_to_dict(scenario), expected_version
        )
        return scenario_from_dict(doc)

    def list_scenarios(self, offset: int = 0, limit: int = 50) -> tuple[list[Scenario], int]:
        ids = self.store.list_ids(SCENARIOS)
        page = ids[offset : offset + limit]
        return [self.get_scenario(i) for i in page], len(ids)

    # -- evaluation ---------------------------------------------------------

    def _run_valuation(
        self, scenario: Scenario, method: ValuationMethod
    ) -> ValuationResult:
        if method is ValuationMethod.ANC:
            if not scenario.statements_id:
                raise ValidationError(
                    "scenario has no statements reference for ANC", field="statements_id"
                )
            statements = self.get_statements(scenario.statements_id)
            period = scenario.valuation_period or statements.periods[-1]
            return value_anc(statements, period, scenario.adjustments)
        if method is ValuationMethod.DCF:
            if scenario.dcf_params is None:
                raise ValidationError("scenario has no dcf_params", field="dcf_params")
            return value_dcf(scenario.dcf_params, as_of=scenario.valuation_period)
        if scenario.market_value is None:
            raise ValidationError("scenario has no market_value", field="market_value")
        return market_valuation(scenario.market_value, as_of=scenario.valuation_period)

    def evaluate(
        self,
        scenario_id: str,
        method: ValuationMethod | str | None = None,
        persist: bool = True,
    ) -> EvaluationRecord:
        """Run the chosen (or overridden) valuation and the indicator.

        The override evaluates an alternative method without mutating the
        stored scenario.
        """
        scenario = self.get_scenario(scenario_id)
        method = ValuationMethod(method) if method else scenario.chosen_method
        valuation = self._run_valuation(scenario, method)
        indicator = compute_indicator(
            scenario.market_params,
            CompanyValueInput(
                value=valuation.value,
                social_capital=scenario.social_capital,
                method=method,
            ),
        )
        record = EvaluationRecord(
            record_id="",
            scenario_id=scenario_id,
            method=method,
            valuation=valuation,
            indicator=indicator,
            evaluated_at=_now(),
            scenario_snapshot=scenario_to_dict(scenario),
        )
        if persist:
            record.record_id = self.store.append(
                EVALUATIONS, scenario_id, evaluation_to_dict(record)
            )
        return record

    def list_evaluations(self, scenario_id: str) -> list[dict]:
        return self.store.list_group(EVALUATIONS, scenario_id)

    def compare_methods(self, scenario_id: str) -> dict:
        """Indicator log values per evaluable method, plus pairwise gaps."""
        scenario = self.get_scenario(scenario_id)
        methods = scenario.available_methods()
        if len(methods) < 2:
            raise InsufficientMethodsError(
                "scenario must support at least two valuation methods "
                f"(available: {[m.value for m in methods]})"
            )
        per_method: dict[str, dict] = {}
        for method in methods:
            record = self.evaluate(scenario_id, method, persist=False)
            per_method[method.value] = {
                "value": str(record.valuation.value),
                "indicator": record.indicator.indicator,
                "indicator_log": record.indicator.indicator_log,
                "band_id": record.indicator.recommendation.band_id.value,
            }
        differences = []
        names = [m.value for m in methods]
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                differences.append(
                    {
                        "method_a": a,
                        "method_b": b,
                        "indicator_log_difference": abs(
                            per_method[a]["indicator_log"] - per_method[b]["indicator_log"]
                        ),
                    }
                )
        return {
            "scenario_id": scenario_id,
            "methods": per_method,
            "differences": differences,
        }
