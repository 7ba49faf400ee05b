"""Rating scales: parsing, country-score mapping, bundled history dataset."""

from __future__ import annotations

from datetime import date

import pytest

from marketentry.errors import (
    UnknownCategoryError,
    UnknownCountryError,
    UnknownGradeError,
)
from marketentry.ratings import (
    Agency,
    RatingCategory,
    Trend,
    grade_to_score,
    load_rating_dataset,
    parse_grade,
    rating_history,
    score_from_symbol,
)

MOODYS_BROAD = ["Aaa", "Aa", "A", "Baa", "Ba", "B", "Caa", "Ca", "C", "D"]
SP_BROAD = ["AAA", "AA", "A", "BBB", "BB", "B", "CCC", "CC", "C", "D"]


class TestGradeToScore:
    @pytest.mark.parametrize(
        "agency,symbol,score",
        [
            (Agency.MOODYS, "Baa3", 7),
            (Agency.MOODYS, "Aaa", 10),
            (Agency.SP, "D", 1),
            (Agency.MOODYS, "Ba2", 6),
            (Agency.SP, "BBB", 7),
            (Agency.SP, "AA+", 9),
        ],
    )
    def test_anchor_points(self, agency, symbol, score):
        assert score_from_symbol(agency, symbol) == score

    def test_full_ladders_run_ten_to_one(self):
        assert [score_from_symbol(Agency.MOODYS, s) for s in MOODYS_BROAD] == list(
            range(10, 0, -1)
        )
        assert [score_from_symbol(Agency.SP, s) for s in SP_BROAD] == list(range(10, 0, -1))

    def test_modifiers_do_not_change_the_score(self):
        assert {score_from_symbol(Agency.MOODYS, s) for s in ("Baa1", "Baa2", "Baa3")} == {7}
        assert {score_from_symbol(Agency.SP, s) for s in ("BBB+", "BBB", "BBB-")} == {7}

    def test_agencies_agree_rank_by_rank(self):
        for moodys, sp in zip(MOODYS_BROAD, SP_BROAD):
            assert score_from_symbol(Agency.MOODYS, moodys) == score_from_symbol(Agency.SP, sp)

    def test_weak_monotonicity_over_fine_ladder(self):
        fine = [
            "Aaa", "Aa1", "Aa2", "Aa3", "A1", "A2", "A3", "Baa1", "Baa2", "Baa3",
            "Ba1", "Ba2", "Ba3", "B1", "B2", "B3", "Caa1", "Caa2", "Caa3", "Ca", "C",
        ]
        scores = [score_from_symbol(Agency.MOODYS, s) for s in fine]
        assert all(a >= b for a, b in zip(scores, scores[1:]))


class TestParseGrade:
    def test_moodys_modifier_parsing(self):
        grade = parse_grade(Agency.MOODYS, "Baa3")
        assert grade.broad == "Baa"
        assert grade.modifier == "3"
        assert grade.quality_label == "Average quality"

    def test_sp_minus_parsing(self):
        grade = parse_grade(Agency.SP, "BBB-")
        assert grade.broad == "BBB"
        assert grade.modifier == "-"

    def test_case_normalization(self):
        assert parse_grade(Agency.MOODYS, "baa3").broad == "Baa"
        assert parse_grade(Agency.SP, "bbb-").broad == "BBB"

    def test_longest_prefix_wins(self):
        assert parse_grade(Agency.MOODYS, "Ba3").broad == "Ba"
        assert parse_grade(Agency.MOODYS, "B3").broad == "B"

    @pytest.mark.parametrize(
        "agency,symbol",
        [
            (Agency.MOODYS, "Xyz"),
            (Agency.MOODYS, "Aaa1"),   # no modifiers on the top grade
            (Agency.MOODYS, "Baa4"),
            (Agency.SP, "BBB*"),
            (Agency.SP, "AAA+"),
            (Agency.SP, ""),
        ],
    )
    def test_unknown_grades_rejected(self, agency, symbol):
        with pytest.raises(UnknownGradeError):
            parse_grade(agency, symbol)


class TestRatingHistory:
    def test_long_term_first_event(self):
        events = rating_history("ROU", RatingCategory.LONG_TERM_CREDIT)
        first = events[0]
        assert first.date == date(1996, 3, 6)
        assert first.grade.symbol == "Ba3"
        assert first.trend is Trend.STATIONARY

    def test_downgrade_event(self):
        events = rating_history("ROU", RatingCategory.LONG_TERM_CREDIT)
        by_date = {e.date: e for e in events}
        event = by_date[date(1998, 11, 6)]
        assert event.grade.symbol == "B3"
        assert event.trend is Trend.DOWN

    def test_fx_deposits_stationary_event(self):
        events = rating_history("ROU", RatingCategory.FX_BANK_DEPOSITS)
        by_date = {e.date: e for e in events}
        event = by_date[date(2006, 10, 6)]
        assert event.grade.symbol == "B1"
        assert event.trend is Trend.STATIONARY

    def test_published_arrow_kept_but_computed_trend_wins(self):
        # the 2009 long-term entry was published as an upgrade although the
        # grade did not move
        events = rating_history("ROU", RatingCategory.LONG_TERM_CREDIT)
        last = events[-1]
        assert last.date == date(2009, 3, 20)
        assert last.grade.symbol == "Baa3"
        assert last.trend is Trend.STATIONARY
        assert last.published_trend is Trend.UP

    def test_strictly_date_ascending(self):
        for category in RatingCategory:
            events = rating_history("ROU", category)
            dates = [e.date for e in events]
            assert dates == sorted(dates)
            assert len(set(dates)) == len(dates)

    def test_every_dataset_grade_parses_and_scores(self):
        dataset = load_rating_dataset()
        for row in dataset["events"]:
            grade = parse_grade(dataset["agency"], row["symbol"])
            assert 1 <= grade_to_score(grade) <= 10

    def test_trend_matches_sign_of_grade_change(self):
        for category in RatingCategory:
            events = rating_history("ROU", category)
            for prev, cur in zip(events, events[1:]):
                if cur.grade.fine_rank == prev.grade.fine_rank:
                    assert cur.trend is Trend.STATIONARY
                elif cur.grade.fine_rank < prev.grade.fine_rank:
                    assert cur.trend is Trend.UP
                else:
                    assert cur.trend is Trend.DOWN

    def test_string_arguments_accepted(self):
        events = rating_history("ROU", "LONG_TERM_CREDIT")
        assert len(events) == 9

    def test_unknown_country(self):
        with pytest.raises(UnknownCountryError):
            rating_history("FRA", RatingCategory.LONG_TERM_CREDIT)

    def test_unknown_category(self):
        with pytest.raises(UnknownCategoryError):
            rating_history("ROU", "LOCAL_DEBT")
