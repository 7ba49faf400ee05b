"""Company valuation: discounted cash flow and adjusted net assets.

Monetary inputs arrive as exact decimals; discounting arithmetic runs in
double precision (results are meaningful to about 1e-6 relative), while the
net-assets method is pure addition and stays exact in ``Decimal``.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from decimal import Decimal
from enum import Enum

from .errors import (
    GordonSingularityError,
    InvalidRateError,
    NegativeHorizonError,
    SideMismatchError,
    UnknownItemRefError,
    ValidationError,
)
from .indicator import ValuationMethod
from .statements import FinancialStatements, LineItem, Side, StatementKind

OFF_BALANCE = "OFF_BALANCE"

NEGATIVE_BASE_CASHFLOW = "NEGATIVE_BASE_CASHFLOW"


class AdjustmentKind(str, Enum):
    REVALUE_ASSET = "REVALUE_ASSET"
    REVALUE_LIABILITY = "REVALUE_LIABILITY"
    ADD_OFF_BALANCE_ASSET = "ADD_OFF_BALANCE_ASSET"
    ADD_OFF_BALANCE_LIABILITY = "ADD_OFF_BALANCE_LIABILITY"


@dataclass(frozen=True)
class Adjustment:
    """One fair-value correction applied on top of the book balance sheet."""

    item_ref: str              # line-item id, or OFF_BALANCE for additions
    kind: AdjustmentKind
    book_value: Decimal        # 0 for off-balance additions
    fair_value: Decimal
    note: str = ""


@dataclass(frozen=True)
class DcfParams:
    """Inputs of the discounted-cash-flow valuation.

    The base cash flow is the reference-year net result (revenues minus
    expenses); it grows at the perpetual rate through the horizon and feeds
    the residual value beyond it.
    """

    base_cashflow: Decimal
    discount_rate: float       # > 0
    perpetual_growth: float    # < discount_rate
    horizon_years: int         # >= 1


@dataclass(frozen=True)
class DcfYearFlow:
    year: int
    cashflow: Decimal          # nominal flow of that year
    discounted: Decimal


@dataclass(frozen=True)
class DcfBreakdown:
    years: tuple[DcfYearFlow, ...]
    residual_value: Decimal    # nominal residual at the horizon
    residual_discounted: Decimal


@dataclass(frozen=True)
class AdjustmentDelta:
    item_ref: str
    kind: AdjustmentKind
    effect_on_value: Decimal   # signed equity impact of this adjustment
    note: str = ""


@dataclass(frozen=True)
class AncBreakdown:
    book_assets: Decimal
    book_liabilities: Decimal
    book_equity: Decimal
    deltas: tuple[AdjustmentDelta, ...]


@dataclass(frozen=True)
class MarketBreakdown:
    note: str = "analyst-supplied market value"


@dataclass(frozen=True)
class ValuationResult:
    value: Decimal
    method: ValuationMethod
    breakdown: DcfBreakdown | AncBreakdown | MarketBreakdown
    as_of: date | None = None
    flags: tuple[str, ...] = ()


def deduction_rate(interest_rate: float) -> float:
    """Interest rate restated as a start-of-year deduction: i / (1 + i)."""
    if 1.0 + interest_rate <= 0.0:
        raise InvalidRateError("1 + interest rate must be positive", field="interest_rate")
    return interest_rate / (1.0 + interest_rate)


def present_value(future_value: float, interest_rate: float, periods: int) -> float:
    """Discount a single future amount: future_value / (1 + rate)^periods."""
    if 1.0 + interest_rate <= 0.0:
        raise InvalidRateError("1 + interest rate must be positive", field="interest_rate")
    if periods < 0:
        raise ValidationError("periods must be >= 0", field="periods")
    return float(future_value) / (1.0 + interest_rate) ** periods


def _to_decimal(x: float) -> Decimal:
    # repr round-trips binary64 exactly, so no precision is lost here
    return Decimal(repr(x))


def value_dcf(params: DcfParams, as_of: date | None = None) -> ValuationResult:
    """Discounted cash flow with a perpetual-growth residual value.

    value = sum_{i=1..n} base*(1+g)^i / (1+r)^i
          + [base*(1+g)^(n+1) / (r-g)] / (1+r)^n

    A negative base cash flow is allowed (the value goes negative) but is
    flagged NEGATIVE_BASE_CASHFLOW.
    """
    r = float(params.discount_rate)
    g = float(params.perpetual_growth)
    n = int(params.horizon_years)
    base = float(params.base_cashflow)

    if n < 1:
        raise NegativeHorizonError("horizon must be at least one year", field="horizon_years")
    if r <= 0.0:
        raise ValidationError("discount rate must be positive", field="discount_rate")
    if r <= g:
        raise GordonSingularityError(
            "discount rate must exceed perpetual growth", field="perpetual_growth"
        )

    years = []
    total = 0.0
    for i in range(1, n + 1):
        flow = base * (1.0 + g) ** i
        discounted = flow / (1.0 + r) ** i
        total += discounted
        years.append(
            DcfYearFlow(year=i, cashflow=_to_decimal(flow), discounted=_to_decimal(discounted))
        )
    residual = base * (1.0 + g) ** (n + 1) / (r - g)
    residual_discounted = residual / (1.0 + r) ** n
    total += residual_discounted

    flags = (NEGATIVE_BASE_CASHFLOW,) if base < 0.0 else ()
    return ValuationResult(
        value=_to_decimal(total),
        method=ValuationMethod.DCF,
        breakdown=DcfBreakdown(
            years=tuple(years),
            residual_value=_to_decimal(residual),
            residual_discounted=_to_decimal(residual_discounted),
        ),
        as_of=as_of,
        flags=flags,
    )


def market_valuation(amount: Decimal, as_of: date | None = None) -> ValuationResult:
    """Wrap an analyst-supplied market value in a valuation result."""
    if amount <= 0:
        raise ValidationError("market value must be positive", field="market_value")
    return ValuationResult(
        value=amount,
        method=ValuationMethod.MARKET,
        breakdown=MarketBreakdown(),
        as_of=as_of,
    )


def _period_sum(statements: FinancialStatements, side: Side, period_idx: int) -> Decimal:
    total = Decimal(0)
    for item in statements.items:
        if item.statement is StatementKind.BALANCE_SHEET and item.side is side:
            v = item.values[period_idx]
            if v is not None:
                total += v
    return total


def _check_revalue_target(item: LineItem, expected_side: Side, adj: Adjustment) -> None:
    if item.statement is not StatementKind.BALANCE_SHEET or item.side is not expected_side:
        raise SideMismatchError(
            f"adjustment {adj.kind.value} targets {adj.item_ref!r} "
            f"({item.statement.value}/{item.side.value}), expected a balance-sheet "
            f"{expected_side.value} item",
            field="item_ref",
        )


def value_anc(
    statements: FinancialStatements,
    period: date,
    adjustments: list[Adjustment] | tuple[Adjustment, ...] = (),
) -> ValuationResult:
    """Adjusted net assets: restated assets minus restated liabilities.

    Starting from the book balance sheet at ``period``, revaluations replace
    book by fair value and off-balance items are brought in; with no
    adjustments the result is book equity. Missing period values contribute
    nothing to the book totals.
    """
    period_idx = statements.period_index(period)

    book_assets = _period_sum(statements, Side.ASSET, period_idx)
    book_liabilities = _period_sum(statements, Side.LIABILITY, period_idx)
    book_equity = book_assets - book_liabilities

    deltas: list[AdjustmentDelta] = []
    value = book_equity
    for adj in adjustments:
        if adj.kind in (AdjustmentKind.REVALUE_ASSET, AdjustmentKind.REVALUE_LIABILITY):
            try:
                item = statements.item(adj.item_ref)
            except Exception:
                raise UnknownItemRefError(
                    f"unknown line item {adj.item_ref!r}", field="item_ref"
                ) from None
            expected = Side.ASSET if adj.kind is AdjustmentKind.REVALUE_ASSET else Side.LIABILITY
            _check_revalue_target(item, expected, adj)
            change = adj.fair_value - adj.book_value
            effect = change if adj.kind is AdjustmentKind.REVALUE_ASSET else -change
        elif adj.kind is AdjustmentKind.ADD_OFF_BALANCE_ASSET:
            effect = adj.fair_value
        else:  # ADD_OFF_BALANCE_LIABILITY
            effect = -adj.fair_value
        value += effect
        deltas.append(
            AdjustmentDelta(
                item_ref=adj.item_ref, kind=adj.kind, effect_on_value=effect, note=adj.note
            )
        )

    return ValuationResult(
        value=value,
        method=ValuationMethod.ANC,
        breakdown=AncBreakdown(
            book_assets=book_assets,
            book_liabilities=book_liabilities,
            book_equity=book_equity,
            deltas=tuple(deltas),
        ),
        as_of=period,
    )


def adjustment_from_dict(doc: dict) -> Adjustment:
    try:
        kind = AdjustmentKind(doc["kind"])
    except (KeyError, ValueError):
        raise ValidationError(
            f"unknown adjustment kind {doc.get('kind')!r}", field="kind"
        ) from None
    try:
        return Adjustment(
            item_ref=str(doc["item_ref"]),
            kind=kind,
            book_value=Decimal(str(doc.get("book_value", "0"))),
            fair_value=Decimal(str(doc["fair_value"])),
            note=str(doc.get("note", "")),
        )
    except KeyError as exc:
        raise ValidationError(f"adjustment missing field {exc}", field=str(exc)) from None


def adjustment_to_dict(adj: Adjustment) -> dict:
    return {
        "item_ref": adj.item_ref,
        "kind": adj.kind.value,
        "book_value": str(adj.book_value),
        "fair_value": str(adj.fair_value),
        "note": adj.note,
    }


def _breakdown_to_dict(breakdown: DcfBreakdown | AncBreakdown | MarketBreakdown) -> dict:
    if isinstance(breakdown, DcfBreakdown):
        return {
            "kind": "DCF",
            "years": [
                {
                    "year": y.year,
                    "cashflow": str(y.cashflow),
                    "discounted": str(y.discounted),
                }
                for y in breakdown.years
            ],
            "residual_value": str(breakdown.residual_value),
            "residual_discounted": str(breakdown.residual_discounted),
        }
    if isinstance(breakdown, AncBreakdown):
        return {
            "kind": "ANC",
            "book_assets": str(breakdown.book_assets),
            "book_liabilities": str(breakdown.book_liabilities),
            "book_equity": str(breakdown.book_equity),
            "deltas": [
                {
                    "item_ref": d.item_ref,
                    "kind": d.kind.value,
                    "effect_on_value": str(d.effect_on_value),
                    "note": d.note,
                }
                for d in breakdown.deltas
            ],
        }
    return {"kind": "MARKET", "note": breakdown.note}


def valuation_to_dict(result: ValuationResult) -> dict:
    return {
        "value": str(result.value),
        "method": result.method.value,
        "as_of": None if result.as_of is None else result.as_of.isoformat(),
        "flags": list(result.flags),
        "breakdown": _breakdown_to_dict(result.breakdown),
    }
