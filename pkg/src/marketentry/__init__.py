"""Market-entry decision engine.

Values a target company (adjusted net assets or discounted cash flow),
computes the composite market-entry risk indicator and its log-scale
decomposition, and maps the result to an entry-strategy recommendation.
Ships as a library, CLI, and HTTP scenario service with file-backed
persistence.
"""

__version__ = "0.1.0"

from .errors import MarketEntryError, ValidationError
from .indicator import (
    BandId,
    CompanyValueInput,
    IndicatorResult,
    IndicatorWarning,
    MarketParams,
    SpecialNote,
    STRATEGY_GRID,
    StrategyBand,
    ValuationMethod,
    compute_indicator,
    interpret,
    recommend,
    validate_params,
)
from .ratings import (
    Agency,
    RatingCategory,
    RatingEvent,
    RatingGrade,
    Trend,
    grade_to_score,
    parse_grade,
    rating_history,
    score_from_symbol,
)
from .scenarios import EvaluationRecord, Scenario, ScenarioService
from .statements import (
    DynamicsSeries,
    FinancialStatements,
    LineItem,
    Side,
    StatementKind,
    dynamics,
    ingest,
    ingest_csv,
    ingest_json,
    select_items,
    serialize_csv,
    serialize_json,
)
from .valuation import (
    Adjustment,
    AdjustmentKind,
    DcfParams,
    ValuationResult,
    deduction_rate,
    market_valuation,
    present_value,
    value_anc,
    value_dcf,
)

__all__ = [
    "Adjustment",
    "AdjustmentKind",
    "Agency",
    "BandId",
    "CompanyValueInput",
    "DcfParams",
    "DynamicsSeries",
    "EvaluationRecord",
    "FinancialStatements",
    "IndicatorResult",
    "IndicatorWarning",
    "LineItem",
    "MarketEntryError",
    "MarketParams",
    "RatingCategory",
    "RatingEvent",
    "RatingGrade",
    "Scenario",
    "ScenarioService",
    "Side",
    "SpecialNote",
    "STRATEGY_GRID",
    "StatementKind",
    "StrategyBand",
    "Trend",
    "ValidationError",
    "ValuationMethod",
    "ValuationResult",
    "compute_indicator",
    "deduction_rate",
    "dynamics",
    "grade_to_score",
    "ingest",
    "ingest_csv",
    "ingest_json",
    "interpret",
    "market_valuation",
    "parse_grade",
    "present_value",
    "rating_history",
    "recommend",
    "score_from_symbol",
    "select_items",
    "serialize_csv",
    "serialize_json",
    "validate_params",
    "value_anc",
    "value_dcf",
]
