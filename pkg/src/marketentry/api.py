"""HTTP service exposing scenarios, statements, ratings and the strategy grid.

All payloads are JSON. Monetary amounts travel as decimal strings; computed
indicator values travel as binary64 doubles (serialized with the shortest
representation that round-trips exactly). Errors come back as
``{"error": {"code", "message", "field"}}``.
"""

from __future__ import annotations

import logging
from pathlib import Path

from fastapi import FastAPI, File, Form, Request, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import __version__
from .errors import (
    ConflictError,
    MarketEntryError,
    NotFoundError,
    ParseError,
    ValidationError,
)
from .indicator import STRATEGY_GRID, SPECIAL_NOTE_TEXT, band_to_dict, recommend
from .ratings import event_to_dict, rating_history
from .scenarios import ScenarioService, evaluation_to_dict, scenario_to_dict
from .statements import dynamics, dynamics_to_dict, ingest_csv, ingest_json, serialize_json

logger = logging.getLogger(__name__)

_STATUS_BY_CODE = {
    "NOT_FOUND": 404,
    "PERIOD_NOT_FOUND": 404,
    "UNKNOWN_COUNTRY": 404,
    "UNKNOWN_CATEGORY": 404,
    "CONFLICT": 409,
}


class EvaluateRequest(BaseModel):
    method: str | None = None


class DynamicsRequest(BaseModel):
    item_ids: list[str]


class ScenarioUpdateRequest(BaseModel):
    version: int
    scenario: dict


def create_app(data_dir: str | Path, ui_dir: str | Path | None = None) -> FastAPI:
    """Build the service app; with ``ui_dir`` it also serves the workbench."""
    service = ScenarioService(data_dir)
    app = FastAPI(title="marketentry", version=__version__)
    # single-user desk tool: let a separately served workbench call the API
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(MarketEntryError)
    async def handle_domain_error(_request: Request, exc: MarketEntryError):
        status = _STATUS_BY_CODE.get(exc.code, 400)
        return JSONResponse(status_code=status, content={"error": exc.to_dict()})

    # -- scenarios ----------------------------------------------------------

    @app.post("/api/scenarios", status_code=201)
    def create_scenario(payload: dict):
        scenario = service.create_scenario(payload)
        return scenario_to_dict(scenario)

    @app.get("/api/scenarios")
    def list_scenarios(offset: int = 0, limit: int = 50):
        scenarios, total = service.list_scenarios(offset=offset, limit=limit)
        return {
            "total": total,
            "offset": offset,
            "limit": limit,
            "items": [scenario_to_dict(s) for s in scenarios],
        }

    @app.get("/api/scenarios/{scenario_id}")
    def get_scenario(scenario_id: str):
        return scenario_to_dict(service.get_scenario(scenario_id))

    @app.put("/api/scenarios/{scenario_id}")
    def update_scenario(scenario_id: str, payload: ScenarioUpdateRequest):
        scenario = service.update_scenario(
            scenario_id, payload.scenario, expected_version=payload.version
        )
        return scenario_to_dict(scenario)

    @app.post("/api/scenarios/{scenario_id}/evaluate")
    def evaluate(scenario_id: str, payload: EvaluateRequest | None = None):
        method = payload.method if payload else None
        record = service.evaluate(scenario_id, method=method)
        return evaluation_to_dict(record)

    @app.get("/api/scenarios/{scenario_id}/compare")
    def compare(scenario_id: str):
        return service.compare_methods(scenario_id)

    @app.get("/api/scenarios/{scenario_id}/evaluations")
    def list_evaluations(scenario_id: str):
        return {"items": service.list_evaluations(scenario_id)}

    # -- statements ---------------------------------------------------------

    @app.post("/api/statements", status_code=201)
    async def upload_statements(
        file: UploadFile = File(...),
        company_id: str | None = Form(None),
        currency: str | None = Form(None),
        statements_id: str | None = Form(None),
    ):
        text = (await file.read()).decode("utf-8")
        name = (file.filename or "").lower()
        if name.endswith(".csv"):
            statements = ingest_csv(text, company_id=company_id, currency=currency)
        elif name.endswith(".json"):
            statements = ingest_json(text)
        else:
            raise ParseError("upload must be a .csv or .json file", field="file")
        stored_id = service.store_statements(statements, statements_id)
        return {
            "statements_id": stored_id,
            "company_id": statements.company_id,
            "currency": statements.currency,
            "periods": [p.isoformat() for p in statements.periods],
            "item_count": len(statements.items),
        }

    @app.get("/api/statements/{statements_id}/items")
    def statement_items(statements_id: str):
        statements = service.get_statements(statements_id)
        doc = serialize_json(statements)
        doc["statements_id"] = statements_id
        return doc

    @app.post("/api/statements/{statements_id}/dynamics")
    def statement_dynamics(statements_id: str, payload: DynamicsRequest):
        statements = service.get_statements(statements_id)
        series = dynamics(statements, payload.item_ids)
        return {"series": [dynamics_to_dict(s) for s in series]}

    # -- reference data -----------------------------------------------------

    @app.get("/api/ratings/{country}/{category}")
    def ratings(country: str, category: str):
        events = rating_history(country, category)
        return {
            "country": country,
            "category": category,
            "events": [event_to_dict(e) for e in events],
        }

    @app.get("/api/meta/strategy-grid")
    def strategy_grid():
        return {
            "bands": [band_to_dict(b) for b in STRATEGY_GRID],
            "special_notes": [
                {"code": code.value, "text": text}
                for code, text in SPECIAL_NOTE_TEXT.items()
            ],
        }

    @app.get("/api/meta/recommendation")
    def recommendation(istar: float):
        return band_to_dict(recommend(istar))

    @app.get("/api/meta/about")
    def about():
        return {
            "name": "marketentry",
            "version": __version__,
            "description": (
                "Market-entry decision workbench: company valuation (adjusted "
                "net assets, discounted cash flow), composite risk indicator "
                "and strategy recommendation, with balance-sheet dynamics "
                "analysis."
            ),
            "areas": [
                "Comparative parameter input (country rating, compatibility, rates)",
                "Valuation selection with automatic indicator and recommendation",
                "Balance-sheet and profit-and-loss dynamics charts",
                "About",
            ],
        }

    if ui_dir is not None:
        # mounted last so /api/* routes keep precedence
        app.mount("/", StaticFiles(directory=Path(ui_dir), html=True), name="ui")

    return app
