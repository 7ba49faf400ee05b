"""Composite market-entry risk indicator and strategy recommendation.

The indicator multiplies six comparative country factors with the ratio of
company value to registered (social) capital:

    indicator = rating * compatibility
              * (1 + inflation_target) / (1 + inflation_origin)
              * (1 + growth_target) / (1 + growth_origin)
              * value / social_capital

Its base-10 logarithm splits into a macroeconomic component (country rating
and rate ratios) and a microeconomic component (compatibility and value
ratio); the log value selects one of five entry-strategy bands.

All arithmetic is done in double precision with no intermediate rounding;
rounding is display-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from decimal import Decimal
from enum import Enum

from .errors import NonFiniteInputError, ValidationError


class ValuationMethod(str, Enum):
    """How the company value driving the indicator was obtained."""

    ANC = "ANC"         # adjusted net assets
    DCF = "DCF"         # discounted cash flow
    MARKET = "MARKET"   # stock-exchange value supplied by the analyst


class IndicatorWarning(str, Enum):
    """Soft range warnings; evaluation still proceeds."""

    INFLATION_RATIO_OUT_OF_RANGE = "INFLATION_RATIO_OUT_OF_RANGE"
    GROWTH_RATIO_OUT_OF_RANGE = "GROWTH_RATIO_OUT_OF_RANGE"
    VALUE_RATIO_OUT_OF_RANGE = "VALUE_RATIO_OUT_OF_RANGE"
    NEAR_BANKRUPT = "NEAR_BANKRUPT"


class BandId(str, Enum):
    GREENFIELD = "GREENFIELD"
    ACQUISITION = "ACQUISITION"
    MERGER_ACQUISITION = "MERGER_ACQUISITION"
    COOPERATION = "COOPERATION"
    EXPORT = "EXPORT"


class SpecialNote(str, Enum):
    """High-country-rating interpretations of extreme log values."""

    TARGET_UNDERVALUED_OR_DISTRESSED = "TARGET_UNDERVALUED_OR_DISTRESSED"
    TARGET_FINANCIALLY_STRONG = "TARGET_FINANCIALLY_STRONG"


SPECIAL_NOTE_TEXT = {
    SpecialNote.TARGET_UNDERVALUED_OR_DISTRESSED: (
        "The external environment is within normal limits, so the target is "
        "either undervalued or close to bankruptcy and can be taken over easily."
    ),
    SpecialNote.TARGET_FINANCIALLY_STRONG: (
        "The external environment is within normal limits and the target is in "
        "a very good financial situation."
    ),
}


@dataclass(frozen=True)
class MarketParams:
    """Comparative parameters between target market and country of origin.

    Rates are expressed as fractions per year (0.10 = 10%).
    """

    country_rating: float      # 1 (crisis) .. 10 (stable, creditworthy)
    compatibility: float       # 0.1 (incompatible) .. 100 (fully compatible)
    inflation_target: float
    inflation_origin: float
    growth_target: float
    growth_origin: float


@dataclass(frozen=True)
class CompanyValueInput:
    """Company value and registered capital, in the same currency."""

    value: Decimal
    social_capital: Decimal
    method: ValuationMethod


@dataclass(frozen=True)
class StrategyBand:
    band_id: BandId
    label: str
    environment_note: str
    lower: float | None        # inclusive; None = unbounded below
    upper: float | None        # exclusive; None = unbounded above
    special_note: SpecialNote | None = None


@dataclass(frozen=True)
class IndicatorResult:
    indicator: float           # the composite risk indicator, > 0
    indicator_log: float       # log10(indicator)
    macro_component: float     # log10(rating * inflation ratio * growth ratio)
    micro_component: float     # log10(compatibility * value ratio)
    warnings: tuple[IndicatorWarning, ...]
    recommendation: StrategyBand


STRATEGY_GRID: tuple[StrategyBand, ...] = (
    StrategyBand(
        BandId.GREENFIELD,
        "Direct greenfield investment",
        "Microeconomic environment likely to be entirely taken over.",
        None,
        0.0,
    ),
    StrategyBand(
        BandId.ACQUISITION,
        "Acquisition",
        "Microeconomic environment likely to be entirely taken over by buying "
        "the majority of stocks and joining the management team.",
        0.0,
        1.6,
    ),
    StrategyBand(
        BandId.MERGER_ACQUISITION,
        "Mergers, acquisitions",
        "Microeconomic environment likely to be taken over at a rate equal to "
        "that of the partner.",
        1.6,
        2.0,
    ),
    StrategyBand(
        BandId.COOPERATION,
        "Licensing, franchising, strategic alliances, management contract",
        "Microeconomic environment favorable for economic cooperation.",
        2.0,
        5.0,
    ),
    StrategyBand(
        BandId.EXPORT,
        "Export",
        "Microeconomic environment hard to approach through a partnership but "
        "favorable for trading operations.",
        5.0,
        None,
    ),
)


def _require_finite(name: str, x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValidationError(f"{name} must be a finite number", field=name)
    return x


def validate_params(
    params: MarketParams, value: CompanyValueInput
) -> list[IndicatorWarning]:
    """Check inputs; raise :class:`ValidationError` on hard violations.

    Returns the list of soft warnings. Hard violations: rating outside
    [1, 10], compatibility outside [0.1, 100], non-positive value or capital,
    and any rate at or below -100% (each (1 + rate) factor must stay strictly
    positive so the indicator is always positive).
    """
    n = _require_finite("country_rating", params.country_rating)
    f = _require_finite("compatibility", params.compatibility)
    if not (1.0 <= n <= 10.0):
        raise ValidationError(
            "country_rating must lie in [1, 10]", field="country_rating"
        )
    if not (0.1 <= f <= 100.0):
        raise ValidationError(
            "compatibility must lie in [0.1, 100]", field="compatibility"
        )
    for name in ("inflation_target", "inflation_origin", "growth_target", "growth_origin"):
        rate = _require_finite(name, getattr(params, name))
        if 1.0 + rate <= 0.0:
            raise ValidationError(f"{name} must exceed -100%", field=name)

    if value.value <= 0:
        raise ValidationError("company value must be positive", field="value")
    if value.social_capital <= 0:
        raise ValidationError(
            "social capital must be positive", field="social_capital"
        )
    ratio = float(value.value) / float(value.social_capital)
    if not math.isfinite(ratio):
        raise ValidationError(
            "value / social_capital must be finite", field="value"
        )

    warnings: list[IndicatorWarning] = []
    inflation_ratio = (1.0 + params.inflation_target) / (1.0 + params.inflation_origin)
    growth_ratio = (1.0 + params.growth_target) / (1.0 + params.growth_origin)
    if not (0.0 < inflation_ratio <= 2.0):
        warnings.append(IndicatorWarning.INFLATION_RATIO_OUT_OF_RANGE)
    if not (0.0 < growth_ratio <= 2.0):
        warnings.append(IndicatorWarning.GROWTH_RATIO_OUT_OF_RANGE)
    if value.value > value.social_capital * 100:
        warnings.append(IndicatorWarning.VALUE_RATIO_OUT_OF_RANGE)
    if value.value < value.social_capital:
        warnings.append(IndicatorWarning.NEAR_BANKRUPT)
    return warnings


def recommend(indicator_log: float) -> StrategyBand:
    """Map a log-indicator value to its strategy band.

    Boundaries are lower-inclusive: [0, 1.6) is ACQUISITION, so exactly 0
    recommends acquisition, exactly 5 recommends export.
    """
    x = float(indicator_log)
    if not math.isfinite(x):
        raise NonFiniteInputError("indicator_log must be finite")
    for band in STRATEGY_GRID:
        above = band.lower is None or x >= band.lower
        below = band.upper is None or x < band.upper
        if above and below:
            return band
    raise AssertionError("strategy grid does not cover the real line")


def interpret(indicator_log: float, country_rating: float) -> SpecialNote | None:
    """Special reading of extreme log values when the country rating exceeds 6."""
    if country_rating > 6.0:
        if indicator_log < 0.0:
            return SpecialNote.TARGET_UNDERVALUED_OR_DISTRESSED
        if indicator_log > 5.0:
            return SpecialNote.TARGET_FINANCIALLY_STRONG
    return None


def compute_indicator(
    params: MarketParams, value: CompanyValueInput
) -> IndicatorResult:
    """Evaluate the risk indicator and attach the strategy recommendation.

    Raises :class:`ValidationError` for hard input violations; soft range
    warnings are carried through on the result.
    """
    warnings = validate_params(params, value)

    n = float(params.country_rating)
    f = float(params.compatibility)
    inflation_ratio = (1.0 + params.inflation_target) / (1.0 + params.inflation_origin)
    growth_ratio = (1.0 + params.growth_target) / (1.0 + params.growth_origin)
    value_ratio = float(value.value) / float(value.social_capital)

    indicator = n * f * inflation_ratio * growth_ratio * value_ratio
    indicator_log = math.log10(indicator)
    macro = math.log10(n * inflation_ratio * growth_ratio)
    micro = math.log10(f * value_ratio)

    band = recommend(indicator_log)
    note = interpret(indicator_log, n)
    if note is not None:
        band = replace(band, special_note=note)

    return IndicatorResult(
        indicator=indicator,
        indicator_log=indicator_log,
        macro_component=macro,
        micro_component=micro,
        warnings=tuple(warnings),
        recommendation=band,
    )


def band_to_dict(band: StrategyBand) -> dict:
    return {
        "band_id": band.band_id.value,
        "label": band.label,
        "environment_note": band.environment_note,
        "lower": band.lower,
        "upper": band.upper,
        "special_note": None
        if band.special_note is None
        else {
            "code": band.special_note.value,
            "text": SPECIAL_NOTE_TEXT[band.special_note],
        },
    }


def result_to_dict(result: IndicatorResult) -> dict:
    """JSON-ready view; indicator values stay binary64 doubles."""
    return {
        "indicator": result.indicator,
        "indicator_log": result.indicator_log,
        "macro_component": result.macro_component,
        "micro_component": result.micro_component,
        "warnings": [w.value for w in result.warnings],
        "recommendation": band_to_dict(result.recommendation),
    }
