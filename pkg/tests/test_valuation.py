"""Valuation methods: present value, discounted cash flow, adjusted net assets."""

from __future__ import annotations

import random
from datetime import date
from decimal import Decimal

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from marketentry.errors import (
    GordonSingularityError,
    InvalidRateError,
    PeriodNotFoundError,
    SideMismatchError,
    UnknownItemRefError,
    ValidationError,
)
from marketentry.statements import FinancialStatements, LineItem, Side, StatementKind
from marketentry.valuation import (
    NEGATIVE_BASE_CASHFLOW,
    Adjustment,
    AdjustmentKind,
    DcfParams,
    deduction_rate,
    present_value,
    value_anc,
    value_dcf,
)

from conftest import ANC_TOTAL, NET_RESULT_2007


def brute_force_dcf(base: float, r: float, g: float, n: int) -> float:
    """Independent oracle: sum the discounted flows term by term, then add
    the discounted residual."""
    total = 0.0
    for i in range(1, n + 1):
        total += base * (1 + g) ** i / (1 + r) ** i
    residual = base * (1 + g) ** (n + 1) / (r - g)
    total += residual / (1 + r) ** n
    return total


def dcf(base, r, g, n):
    return DcfParams(
        base_cashflow=Decimal(str(base)),
        discount_rate=r,
        perpetual_growth=g,
        horizon_years=n,
    )


class TestPresentValue:
    def test_zero_rate_identity(self):
        assert present_value(100, 0.0, 10) == 100

    def test_single_period_inversion(self):
        assert present_value(105, 0.05, 1) == pytest.approx(100, rel=1e-12)

    def test_three_periods_against_repeated_division(self):
        oracle = 1000 / 1.05 / 1.05 / 1.05
        got = present_value(1000, 0.05, 3)
        assert got == pytest.approx(oracle, rel=1e-12)
        assert got == pytest.approx(863.8376, abs=5e-5)

    @pytest.mark.parametrize("rate", [-1.0, -1.5])
    def test_rate_at_or_below_minus_one_rejected(self, rate):
        with pytest.raises(InvalidRateError):
            present_value(100, rate, 1)

    def test_negative_periods_rejected(self):
        with pytest.raises(ValidationError):
            present_value(100, 0.05, -1)

    def test_deduction_form_rate(self):
        assert deduction_rate(0.05) == pytest.approx(0.05 / 1.05, rel=1e-15)
        with pytest.raises(InvalidRateError):
            deduction_rate(-1.0)

    @given(
        st.floats(min_value=0.01, max_value=1e9),
        st.floats(min_value=-0.5, max_value=1.0),
        st.integers(min_value=0, max_value=20),
        st.integers(min_value=0, max_value=20),
    )
    @settings(max_examples=200)
    def test_composition_over_split_horizons(self, fv, rate, a, b):
        whole = present_value(fv, rate, a + b)
        split = present_value(present_value(fv, rate, a), rate, b)
        assert split == pytest.approx(whole, rel=1e-12)


class TestValueDcf:
    def test_zero_growth_collapses_to_perpetuity(self):
        result = value_dcf(dcf(100, 0.05, 0.0, 5))
        assert float(result.value) == pytest.approx(2000.0, rel=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 7, 30])
    def test_perpetuity_is_horizon_independent(self, n):
        result = value_dcf(dcf(250, 0.08, 0.0, n))
        assert float(result.value) == pytest.approx(250 / 0.08, rel=1e-12)

    def test_case_study_inputs_against_brute_force(self):
        # The published total for these inputs is 207,360,284, which the
        # stated formula chain does not reproduce; the oracle result is
        # authoritative here (about 1.9117e8).
        result = value_dcf(dcf(NET_RESULT_2007, 0.05, 0.01, 5))
        oracle = brute_force_dcf(float(NET_RESULT_2007), 0.05, 0.01, 5)
        assert float(result.value) == pytest.approx(oracle, rel=1e-10)
        assert float(result.value) == pytest.approx(1.9117e8, rel=1e-4)

    def test_discount_rate_equal_to_growth_is_singular(self):
        with pytest.raises(GordonSingularityError):
            value_dcf(dcf(100, 0.01, 0.01, 3))

    def test_discount_rate_below_growth_is_singular(self):
        with pytest.raises(GordonSingularityError):
            value_dcf(dcf(100, 0.02, 0.04, 3))

    @pytest.mark.parametrize("n", [0, -2])
    def test_horizon_below_one_rejected(self, n):
        with pytest.raises(Exception) as exc:
            value_dcf(dcf(100, 0.05, 0.01, n))
        assert exc.value.code == "NEGATIVE_HORIZON"

    def test_nonpositive_discount_rate_rejected(self):
        with pytest.raises(ValidationError):
            value_dcf(dcf(100, 0.0, -0.5, 3))

    def test_negative_base_cashflow_flagged_not_rejected(self):
        result = value_dcf(dcf(-100, 0.05, 0.0, 5))
        assert NEGATIVE_BASE_CASHFLOW in result.flags
        assert float(result.value) == pytest.approx(-2000.0, rel=1e-12)

    def test_breakdown_components_sum_to_value(self):
        result = value_dcf(dcf(NET_RESULT_2007, 0.05, 0.01, 5))
        parts = sum(float(y.discounted) for y in result.breakdown.years)
        parts += float(result.breakdown.residual_discounted)
        assert parts == pytest.approx(float(result.value), rel=1e-9)
        assert len(result.breakdown.years) == 5
        assert [y.year for y in result.breakdown.years] == [1, 2, 3, 4, 5]

    @given(
        st.floats(min_value=1.0, max_value=1e9),
        st.floats(min_value=1e-3, max_value=1e3),
    )
    @settings(max_examples=200)
    def test_linearity_in_base_cashflow(self, base, k):
        v1 = float(value_dcf(dcf(base, 0.06, 0.02, 4)).value)
        vk = float(value_dcf(dcf(base * k, 0.06, 0.02, 4)).value)
        assert vk == pytest.approx(k * v1, rel=1e-12)

    def test_value_decreases_in_discount_rate(self):
        values = [float(value_dcf(dcf(100, r, 0.01, 5)).value) for r in (0.03, 0.05, 0.08, 0.2)]
        assert values == sorted(values, reverse=True)

    def test_value_increases_in_growth(self):
        values = [float(value_dcf(dcf(100, 0.10, g, 5)).value) for g in (-0.02, 0.0, 0.03, 0.08)]
        assert values == sorted(values)

    def test_oracle_equivalence_on_randomized_parameters(self):
        rng = random.Random(5_121_991)
        for _ in range(1000):
            base = rng.uniform(1, 1e8)
            r = rng.uniform(0.005, 0.5)
            g = rng.uniform(-0.2, r - 1e-4)
            n = rng.randint(1, 40)
            got = float(value_dcf(dcf(base, r, g, n)).value)
            assert got == pytest.approx(brute_force_dcf(base, r, g, n), rel=1e-10)


def build_statements(items: list[tuple[str, Side, str]], period=date(2020, 12, 31)):
    """One-period balance sheet helper: (item_id, side, amount)."""
    return FinancialStatements(
        company_id="test",
        currency="EUR",
        periods=(period,),
        items=tuple(
            LineItem(
                item_id=item_id,
                label=item_id,
                statement=StatementKind.BALANCE_SHEET
                if side in (Side.ASSET, Side.LIABILITY, Side.EQUITY)
                else StatementKind.PROFIT_LOSS,
                side=side,
                values=(Decimal(amount),),
            )
            for item_id, side, amount in items
        ),
    )


PERIOD = date(2020, 12, 31)

BASE_SHEET = [
    ("plant", Side.ASSET, "1000"),
    ("loans", Side.LIABILITY, "400"),
]


class TestValueAnc:
    def test_without_adjustments_equals_book_equity(self):
        result = value_anc(build_statements(BASE_SHEET), PERIOD)
        assert result.value == Decimal("600")
        assert result.breakdown.book_assets == Decimal("1000")
        assert result.breakdown.book_liabilities == Decimal("400")
        assert result.breakdown.deltas == ()

    def test_additive_adjustment_arithmetic(self):
        sheet = build_statements(
            [("plant", Side.ASSET, "300"), ("other", Side.ASSET, "700"),
             ("loans", Side.LIABILITY, "400")]
        )
        adjustments = [
            Adjustment("plant", AdjustmentKind.REVALUE_ASSET, Decimal("300"), Decimal("500")),
            Adjustment(
                "OFF_BALANCE",
                AdjustmentKind.ADD_OFF_BALANCE_LIABILITY,
                Decimal("0"),
                Decimal("50"),
            ),
        ]
        result = value_anc(sheet, PERIOD, adjustments)
        assert result.value == Decimal("750")   # 1000 + 200 - 400 - 50

    def test_off_balance_asset_adds(self):
        result = value_anc(
            build_statements(BASE_SHEET),
            PERIOD,
            [Adjustment("OFF_BALANCE", AdjustmentKind.ADD_OFF_BALANCE_ASSET,
                        Decimal("0"), Decimal("25"))],
        )
        assert result.value == Decimal("625")

    def test_liability_revaluation_reduces_value(self):
        result = value_anc(
            build_statements(BASE_SHEET),
            PERIOD,
            [Adjustment("loans", AdjustmentKind.REVALUE_LIABILITY,
                        Decimal("400"), Decimal("450"))],
        )
        assert result.value == Decimal("550")

    def test_neutral_adjustment_changes_nothing(self):
        result = value_anc(
            build_statements(BASE_SHEET),
            PERIOD,
            [Adjustment("plant", AdjustmentKind.REVALUE_ASSET,
                        Decimal("1000"), Decimal("1000"))],
        )
        assert result.value == Decimal("600")

    def test_order_independence(self):
        adjustments = [
            Adjustment("plant", AdjustmentKind.REVALUE_ASSET, Decimal("1000"), Decimal("1100")),
            Adjustment("loans", AdjustmentKind.REVALUE_LIABILITY, Decimal("400"), Decimal("380")),
            Adjustment("OFF_BALANCE", AdjustmentKind.ADD_OFF_BALANCE_ASSET,
                       Decimal("0"), Decimal("7")),
            Adjustment("OFF_BALANCE", AdjustmentKind.ADD_OFF_BALANCE_LIABILITY,
                       Decimal("0"), Decimal("3")),
        ]
        sheet = build_statements(BASE_SHEET)
        reference = value_anc(sheet, PERIOD, adjustments).value
        for permutation in (adjustments[::-1], adjustments[1:] + adjustments[:1]):
            assert value_anc(sheet, PERIOD, permutation).value == reference

    def test_breakdown_deltas_sum_to_value_minus_book_equity(self):
        adjustments = [
            Adjustment("plant", AdjustmentKind.REVALUE_ASSET, Decimal("1000"), Decimal("1234.56")),
            Adjustment("loans", AdjustmentKind.REVALUE_LIABILITY, Decimal("400"), Decimal("390.10")),
            Adjustment("OFF_BALANCE", AdjustmentKind.ADD_OFF_BALANCE_LIABILITY,
                       Decimal("0"), Decimal("11.11")),
        ]
        result = value_anc(build_statements(BASE_SHEET), PERIOD, adjustments)
        delta_sum = sum((d.effect_on_value for d in result.breakdown.deltas), Decimal(0))
        assert delta_sum == result.value - result.breakdown.book_equity

    def test_unknown_item_ref(self):
        with pytest.raises(UnknownItemRefError):
            value_anc(
                build_statements(BASE_SHEET),
                PERIOD,
                [Adjustment("ghost", AdjustmentKind.REVALUE_ASSET, Decimal("1"), Decimal("2"))],
            )

    def test_side_mismatch_asset_vs_liability(self):
        with pytest.raises(SideMismatchError):
            value_anc(
                build_statements(BASE_SHEET),
                PERIOD,
                [Adjustment("plant", AdjustmentKind.REVALUE_LIABILITY,
                            Decimal("1000"), Decimal("900"))],
            )

    def test_side_mismatch_equity_item(self):
        sheet = build_statements(BASE_SHEET + [("capital", Side.EQUITY, "600")])
        with pytest.raises(SideMismatchError):
            value_anc(
                sheet,
                PERIOD,
                [Adjustment("capital", AdjustmentKind.REVALUE_ASSET,
                            Decimal("600"), Decimal("700"))],
            )

    def test_side_mismatch_profit_loss_item(self):
        sheet = build_statements(BASE_SHEET + [("sales", Side.REVENUE, "70")])
        with pytest.raises(SideMismatchError):
            value_anc(
                sheet,
                PERIOD,
                [Adjustment("sales", AdjustmentKind.REVALUE_ASSET,
                            Decimal("70"), Decimal("80"))],
            )

    def test_period_not_found(self):
        with pytest.raises(PeriodNotFoundError):
            value_anc(build_statements(BASE_SHEET), date(1999, 1, 1))

    def test_missing_values_contribute_nothing(self):
        sheet = FinancialStatements(
            company_id="test",
            currency="EUR",
            periods=(date(2019, 12, 31), PERIOD),
            items=(
                LineItem("plant", "plant", StatementKind.BALANCE_SHEET, Side.ASSET,
                         (Decimal("900"), Decimal("1000"))),
                LineItem("patents", "patents", StatementKind.BALANCE_SHEET, Side.ASSET,
                         (Decimal("50"), None)),
                LineItem("loans", "loans", StatementKind.BALANCE_SHEET, Side.LIABILITY,
                         (Decimal("400"), Decimal("400"))),
            ),
        )
        assert value_anc(sheet, PERIOD).value == Decimal("600")

    def test_case_study_fixture_reproduces_published_total(
        self, sample_statements, sample_adjustments
    ):
        result = value_anc(sample_statements, date(2007, 12, 31), sample_adjustments)
        assert result.value == ANC_TOTAL
