"""Agency rating scales, grade-to-score mapping, and rating history data.

The country score used by the indicator is a coarse 10-to-1 ladder over the
broad grade classes of either agency; modifiers (Baa3, BBB-) do not move the
score. Trend arrows in the bundled history are kept as published, while the
served trend is recomputed from the fine-grained grade ladder so it always
matches the actual grade change.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import date
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import (
    UnknownCategoryError,
    UnknownCountryError,
    UnknownGradeError,
)


class Agency(str, Enum):
    MOODYS = "MOODYS"
    SP = "SP"


class RatingCategory(str, Enum):
    LONG_TERM_CREDIT = "LONG_TERM_CREDIT"
    FX_BANK_DEPOSITS = "FX_BANK_DEPOSITS"


class Trend(str, Enum):
    UP = "UP"
    DOWN = "DOWN"
    STATIONARY = "STATIONARY"


# Broad grades best-to-worst with their quality labels. The final bucket
# (default) completes the 10-step score ladder.
_MOODYS_LADDER: tuple[tuple[str, str], ...] = (
    ("Aaa", "Best quality"),
    ("Aa", "High quality"),
    ("A", "High average quality"),
    ("Baa", "Average quality"),
    ("Ba", "Speculative quality"),
    ("B", "Without investment characteristics"),
    ("Caa", "Low level quality"),
    ("Ca", "Speculative quality"),
    ("C", "Lowest quality"),
    ("D", "In default"),
)

_SP_LADDER: tuple[tuple[str, str], ...] = (
    ("AAA", "Extremely strong"),
    ("AA", "Very strong"),
    ("A", "Strong, but sensitive to economic conditions"),
    ("BBB", "Adequate, but sensitive to adverse conditions"),
    ("BB", "Less vulnerable, but facing uncertainty"),
    ("B", "Vulnerable, but currently meeting commitments"),
    ("CCC", "Vulnerable"),
    ("CC", "Very vulnerable at present"),
    ("C", "Payment difficulties, payments still continuing"),
    ("D", "Major payments defaults"),
)

_LADDERS = {Agency.MOODYS: _MOODYS_LADDER, Agency.SP: _SP_LADDER}

# Broad grades that never carry a modifier on each agency's scale.
_UNMODIFIED = {
    Agency.MOODYS: {"Aaa", "Ca", "C", "D"},
    Agency.SP: {"AAA", "CC", "C", "D"},
}

_MOODYS_MODIFIERS = {"1": 1, "2": 2, "3": 3}
_SP_MODIFIERS = {"+": 1, "-": 3, "−": 3, "–": 3}  # accept unicode minus/dash


@dataclass(frozen=True)
class RatingGrade:
    agency: Agency
    symbol: str                # as given, e.g. "Baa3" or "BBB-"
    broad: str                 # broad class, e.g. "Baa"
    modifier: str | None
    quality_label: str

    @property
    def rank(self) -> int:
        """Coarse rank: 0 is best (Aaa/AAA), 9 is default."""
        return _broad_index(self.agency, self.broad)

    @property
    def fine_rank(self) -> int:
        """Modifier-sensitive rank for grade-change comparison; lower is better."""
        mod = 2
        if self.modifier is not None:
            table = _MOODYS_MODIFIERS if self.agency is Agency.MOODYS else _SP_MODIFIERS
            mod = table[self.modifier]
        return self.rank * 10 + mod


@dataclass(frozen=True)
class RatingEvent:
    date: date
    grade: RatingGrade
    trend: Trend               # computed from the grade change
    category: RatingCategory
    published_trend: Trend | None = None   # as printed in the source, if any


def _broad_index(agency: Agency, broad: str) -> int:
    for idx, (symbol, _) in enumerate(_LADDERS[agency]):
        if symbol == broad:
            return idx
    raise UnknownGradeError(f"unknown {agency.value} grade {broad!r}", field="symbol")


def _normalize(agency: Agency, symbol: str) -> str:
    s = symbol.strip()
    if agency is Agency.SP:
        return s.upper()
    # Moody's style: capitalised first letter, lower-case rest of the letters
    letters = "".join(ch for ch in s if ch.isalpha())
    tail = s[len(letters):]
    return letters.capitalize() + tail


def parse_grade(agency: Agency | str, symbol: str) -> RatingGrade:
    """Parse a grade symbol against the agency's ladder.

    Accepts optional modifiers (1/2/3 on the first agency's scale, +/- on the
    second) on the broad classes that allow them.
    """
    agency = Agency(agency)
    normalized = _normalize(agency, symbol)
    ladder = _LADDERS[agency]
    modifiers = _MOODYS_MODIFIERS if agency is Agency.MOODYS else _SP_MODIFIERS

    # longest-prefix match so "Baa3" resolves to Baa, not Ba
    for broad, label in sorted(ladder, key=lambda g: -len(g[0])):
        if not normalized.startswith(broad):
            continue
        rest = normalized[len(broad):]
        if rest == "":
            return RatingGrade(agency, symbol.strip(), broad, None, label)
        if rest in modifiers and broad not in _UNMODIFIED[agency]:
            return RatingGrade(agency, symbol.strip(), broad, rest, label)
    raise UnknownGradeError(
        f"unknown {agency.value} grade {symbol!r}", field="symbol"
    )


def grade_to_score(grade: RatingGrade) -> float:
    """Country score in [1, 10]: 10 for the best grade class, 1 for default.

    Modifiers are ignored, so equally ranked broad grades of both agencies
    agree (Baa and BBB both score 7).
    """
    return float(10 - grade.rank)


def score_from_symbol(agency: Agency | str, symbol: str) -> float:
    return grade_to_score(parse_grade(agency, symbol))


_DATA_PACKAGE = "marketentry.data"
_DEFAULT_DATASET = "romania_ratings.json"


def _bundled_text(name: str) -> str:
    return resources.files(_DATA_PACKAGE).joinpath(name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _load_default_dataset() -> dict:
    return json.loads(_bundled_text(_DEFAULT_DATASET))


def load_rating_dataset(path: str | Path | None = None) -> dict:
    """Load a rating-history dataset; defaults to the bundled one."""
    if path is None:
        return _load_default_dataset()
    return json.loads(Path(path).read_text(encoding="utf-8"))


def _computed_trend(prev: RatingGrade | None, cur: RatingGrade) -> Trend:
    if prev is None or prev.fine_rank == cur.fine_rank:
        return Trend.STATIONARY
    return Trend.UP if cur.fine_rank < prev.fine_rank else Trend.DOWN


def rating_history(
    country: str,
    category: RatingCategory | str,
    dataset: dict | None = None,
) -> list[RatingEvent]:
    """Date-ascending rating events for one country and category.

    The served trend is recomputed from consecutive grades (STATIONARY when
    unchanged, including the first event); any published arrow is carried
    alongside for reference.
    """
    try:
        category = RatingCategory(category)
    except ValueError:
        raise UnknownCategoryError(
            f"unknown category {category!r}", field="category"
        ) from None
    data = dataset if dataset is not None else load_rating_dataset()
    if data.get("country") != country:
        raise UnknownCountryError(f"unknown country {country!r}", field="country")

    agency = Agency(data.get("agency", Agency.MOODYS.value))
    rows = [e for e in data.get("events", []) if e.get("category") == category.value]
    rows.sort(key=lambda e: e["date"])

    events: list[RatingEvent] = []
    prev: RatingGrade | None = None
    for row in rows:
        grade = parse_grade(agency, row["symbol"])
        published = row.get("published_trend")
        events.append(
            RatingEvent(
                date=date.fromisoformat(row["date"]),
                grade=grade,
                trend=_computed_trend(prev, grade),
                category=category,
                published_trend=None if published is None else Trend(published),
            )
        )
        prev = grade
    return events


def event_to_dict(event: RatingEvent) -> dict:
    return {
        "date": event.date.isoformat(),
        "agency": event.grade.agency.value,
        "symbol": event.grade.symbol,
        "quality_label": event.grade.quality_label,
        "score": grade_to_score(event.grade),
        "trend": event.trend.value,
        "published_trend": None
        if event.published_trend is None
        else event.published_trend.value,
        "category": event.category.value,
    }
