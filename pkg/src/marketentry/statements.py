"""Financial statements: ingestion, item selection, and dynamics series.

Two interchangeable input schemas are supported:

* long-form CSV with header ``item_id,label,statement,side,period,amount``
  (UTF-8; ISO dates; amounts as plain decimal strings with '.' separator and
  no thousands grouping; an empty amount marks a missing value). Company id
  and currency are not part of the table and must be supplied by the caller.
* nested JSON carrying ``schema_version``, ``company_id``, ``currency``,
  ``periods`` and per-item value arrays aligned to the period list.

Amounts are kept as exact decimals end to end; serializing and re-ingesting
reproduces the same model bit-exactly.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import date
from decimal import Decimal, InvalidOperation
from enum import Enum
from pathlib import Path

from .errors import (
    CurrencyMissingError,
    DuplicateItemError,
    ParseError,
    PeriodNotFoundError,
    UnknownItemError,
    UnorderedPeriodsError,
)

JSON_SCHEMA_VERSION = 1

CSV_COLUMNS = ("item_id", "label", "statement", "side", "period", "amount")


class StatementKind(str, Enum):
    BALANCE_SHEET = "BALANCE_SHEET"
    PROFIT_LOSS = "PROFIT_LOSS"


class Side(str, Enum):
    ASSET = "ASSET"
    LIABILITY = "LIABILITY"
    EQUITY = "EQUITY"
    REVENUE = "REVENUE"
    EXPENSE = "EXPENSE"
    RESULT = "RESULT"


_SIDES_BY_STATEMENT = {
    StatementKind.BALANCE_SHEET: {Side.ASSET, Side.LIABILITY, Side.EQUITY},
    StatementKind.PROFIT_LOSS: {Side.REVENUE, Side.EXPENSE, Side.RESULT},
}


@dataclass(frozen=True)
class LineItem:
    item_id: str
    label: str
    statement: StatementKind
    side: Side
    values: tuple[Decimal | None, ...]   # one slot per period; None = missing


@dataclass(frozen=True)
class FinancialStatements:
    company_id: str
    currency: str
    periods: tuple[date, ...]
    items: tuple[LineItem, ...]

    def item(self, item_id: str) -> LineItem:
        for it in self.items:
            if it.item_id == item_id:
                return it
        raise UnknownItemError(f"unknown item {item_id!r}", field="item_id")

    def period_index(self, period: date) -> int:
        try:
            return self.periods.index(period)
        except ValueError:
            raise PeriodNotFoundError(
                f"no statements for period {period.isoformat()}", field="period"
            ) from None

    def value(self, item_id: str, period: date) -> Decimal | None:
        return self.item(item_id).values[self.period_index(period)]


@dataclass(frozen=True)
class DynamicsSeries:
    """Per-item evolution: absolute deltas, growth rates, base-period index.

    ``deltas`` and ``growth`` have one entry per period transition; ``index``
    one per period. Entries are None (explicitly undefined) wherever the
    arithmetic would need a missing value or a zero base.
    """

    item_id: str
    label: str
    periods: tuple[date, ...]
    values: tuple[Decimal | None, ...]
    deltas: tuple[Decimal | None, ...]
    growth: tuple[Decimal | None, ...]
    index: tuple[Decimal | None, ...]


def _parse_enum(enum_cls, raw: str, *, line: int, field: str):
    try:
        return enum_cls(raw)
    except ValueError:
        allowed = ", ".join(e.value for e in enum_cls)
        raise ParseError(
            f"invalid {field} {raw!r} (expected one of: {allowed})",
            line=line,
            field=field,
        ) from None


def _parse_date(raw: str, *, line: int | None, field: str) -> date:
    try:
        return date.fromisoformat(raw)
    except ValueError:
        raise ParseError(f"invalid date {raw!r}", line=line, field=field) from None


def _parse_amount(raw: str, *, line: int | None, field: str = "amount") -> Decimal:
    try:
        return Decimal(raw)
    except InvalidOperation:
        raise ParseError(f"invalid amount {raw!r}", line=line, field=field) from None


def _check_side(statement: StatementKind, side: Side, *, line: int | None) -> None:
    if side not in _SIDES_BY_STATEMENT[statement]:
        raise ParseError(
            f"side {side.value} is not valid for {statement.value}",
            line=line,
            field="side",
        )


def ingest_csv(
    text: str, *, company_id: str | None = None, currency: str | None = None
) -> FinancialStatements:
    """Parse the long-form CSV schema into a statements model."""
    if not currency:
        raise CurrencyMissingError(
            "currency must be supplied alongside CSV input", field="currency"
        )
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty file: header row required", line=1) from None
    if tuple(h.strip() for h in header) != CSV_COLUMNS:
        raise ParseError(
            f"header must be exactly {','.join(CSV_COLUMNS)}", line=1, field="header"
        )

    # item_id -> (label, statement, side, {period: amount|None})
    items: dict[str, tuple[str, StatementKind, Side, dict[date, Decimal | None]]] = {}
    periods: set[date] = set()
    for line_no, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(CSV_COLUMNS):
            raise ParseError(
                f"expected {len(CSV_COLUMNS)} columns, got {len(row)}", line=line_no
            )
        item_id, label, statement_raw, side_raw, period_raw, amount_raw = row
        if not item_id:
            raise ParseError("item_id must not be empty", line=line_no, field="item_id")
        statement = _parse_enum(StatementKind, statement_raw, line=line_no, field="statement")
        side = _parse_enum(Side, side_raw, line=line_no, field="side")
        _check_side(statement, side, line=line_no)
        period = _parse_date(period_raw, line=line_no, field="period")
        amount = None if amount_raw == "" else _parse_amount(amount_raw, line=line_no)

        if item_id not in items:
            items[item_id] = (label, statement, side, {})
        else:
            known_label, known_statement, known_side, _ = items[item_id]
            if (label, statement, side) != (known_label, known_statement, known_side):
                raise DuplicateItemError(
                    f"item {item_id!r} redefined with conflicting label/statement/side",
                    field="item_id",
                )
        slots = items[item_id][3]
        if period in slots:
            raise ParseError(
                f"duplicate value for item {item_id!r} at {period.isoformat()}",
                line=line_no,
            )
        slots[period] = amount
        periods.add(period)

    ordered_periods = tuple(sorted(periods))
    line_items = tuple(
        LineItem(
            item_id=item_id,
            label=label,
            statement=statement,
            side=side,
            values=tuple(slots.get(p) for p in ordered_periods),
        )
        for item_id, (label, statement, side, slots) in items.items()
    )
    return FinancialStatements(
        company_id=company_id or "",
        currency=currency,
        periods=ordered_periods,
        items=line_items,
    )


def ingest_json(doc: dict | str) -> FinancialStatements:
    """Parse the nested JSON schema into a statements model."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    version = doc.get("schema_version")
    if version != JSON_SCHEMA_VERSION:
        raise ParseError(
            f"unsupported schema_version {version!r} (expected {JSON_SCHEMA_VERSION})",
            field="schema_version",
        )
    currency = doc.get("currency")
    if not currency:
        raise CurrencyMissingError("currency field is required", field="currency")

    raw_periods = doc.get("periods")
    if not isinstance(raw_periods, list) or not raw_periods:
        raise ParseError("periods must be a non-empty list", field="periods")
    periods = tuple(_parse_date(p, line=None, field="periods") for p in raw_periods)
    if any(b <= a for a, b in zip(periods, periods[1:])):
        raise UnorderedPeriodsError(
            "periods must be strictly ascending", field="periods"
        )

    items: list[LineItem] = []
    seen: set[str] = set()
    for raw in doc.get("items", []):
        item_id = raw.get("item_id")
        if not item_id:
            raise ParseError("item_id must not be empty", field="item_id")
        if item_id in seen:
            raise DuplicateItemError(f"duplicate item {item_id!r}", field="item_id")
        seen.add(item_id)
        statement = _parse_enum(
            StatementKind, raw.get("statement", ""), line=0, field="statement"
        )
        side = _parse_enum(Side, raw.get("side", ""), line=0, field="side")
        _check_side(statement, side, line=None)
        raw_values = raw.get("values")
        if not isinstance(raw_values, list) or len(raw_values) != len(periods):
            raise ParseError(
                f"item {item_id!r} must carry exactly {len(periods)} values",
                field="values",
            )
        values = tuple(
            None if v is None else _parse_amount(str(v), line=None) for v in raw_values
        )
        items.append(
            LineItem(
                item_id=item_id,
                label=str(raw.get("label", item_id)),
                statement=statement,
                side=side,
                values=values,
            )
        )
    return FinancialStatements(
        company_id=str(doc.get("company_id", "")),
        currency=str(currency),
        periods=periods,
        items=tuple(items),
    )


def ingest(
    path: str | Path, *, company_id: str | None = None, currency: str | None = None
) -> FinancialStatements:
    """Ingest a statements file; the extension selects the parser."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".csv":
        return ingest_csv(text, company_id=company_id, currency=currency)
    if path.suffix.lower() == ".json":
        return ingest_json(text)
    raise ParseError(f"unsupported file type {path.suffix!r} (expected .csv or .json)")


def serialize_csv(statements: FinancialStatements) -> str:
    """Render the long-form CSV; re-ingesting reproduces the model exactly."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for item in statements.items:
        for period, value in zip(statements.periods, item.values):
            writer.writerow(
                [
                    item.item_id,
                    item.label,
                    item.statement.value,
                    item.side.value,
                    period.isoformat(),
                    "" if value is None else str(value),
                ]
            )
    return out.getvalue()


def serialize_json(statements: FinancialStatements) -> dict:
    return {
        "schema_version": JSON_SCHEMA_VERSION,
        "company_id": statements.company_id,
        "currency": statements.currency,
        "periods": [p.isoformat() for p in statements.periods],
        "items": [
            {
                "item_id": item.item_id,
                "label": item.label,
                "statement": item.statement.value,
                "side": item.side.value,
                "values": [None if v is None else str(v) for v in item.values],
            }
            for item in statements.items
        ],
    }


def select_items(
    statements: FinancialStatements, item_ids: list[str] | tuple[str, ...]
) -> list[LineItem]:
    """Resolve ids to items, preserving request order and dropping repeats."""
    selected: list[LineItem] = []
    seen: set[str] = set()
    for item_id in item_ids:
        item = statements.item(item_id)   # raises UNKNOWN_ITEM
        if item_id not in seen:
            seen.add(item_id)
            selected.append(item)
    return selected


def dynamics(
    statements: FinancialStatements, item_ids: list[str] | tuple[str, ...]
) -> list[DynamicsSeries]:
    """Period-over-period deltas, growth rates and base-period index.

    Growth and deltas are undefined (None) across transitions touching a
    missing value, growth additionally where the prior value is zero; the
    index is undefined wherever the base period is zero or missing.
    """
    series: list[DynamicsSeries] = []
    for item in select_items(statements, item_ids):
        values = item.values
        deltas: list[Decimal | None] = []
        growth: list[Decimal | None] = []
        for prev, cur in zip(values, values[1:]):
            if prev is None or cur is None:
                deltas.append(None)
                growth.append(None)
            else:
                deltas.append(cur - prev)
                growth.append(None if prev == 0 else (cur - prev) / prev)
        base = values[0] if values else None
        if base is None or base == 0:
            index: list[Decimal | None] = [None] * len(values)
        else:
            index = [None if v is None else v / base for v in values]
        series.append(
            DynamicsSeries(
                item_id=item.item_id,
                label=item.label,
                periods=statements.periods,
                values=values,
                deltas=tuple(deltas),
                growth=tuple(growth),
                index=tuple(index),
            )
        )
    return series


def dynamics_to_dict(series: DynamicsSeries) -> dict:
    """JSON view: money stays decimal strings, ratios become doubles."""
    return {
        "item_id": series.item_id,
        "label": series.label,
        "periods": [p.isoformat() for p in series.periods],
        "values": [None if v is None else str(v) for v in series.values],
        "deltas": [None if v is None else str(v) for v in series.deltas],
        "growth": [None if v is None else float(v) for v in series.growth],
        "index": [None if v is None else float(v) for v in series.index],
    }
