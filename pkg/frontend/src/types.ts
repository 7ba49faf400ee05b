/* API payload types, mirroring the scenario-service JSON exactly.
 * Monetary amounts are decimal strings; computed indicator values are
 * binary64 doubles. The client never transforms these values, it only
 * displays them. */

export type Method = "ANC" | "DCF" | "MARKET";

export type BandId =
  | "GREENFIELD"
  | "ACQUISITION"
  | "MERGER_ACQUISITION"
  | "COOPERATION"
  | "EXPORT";

export interface SpecialNote {
  code: string;
  text: string;
}

export interface StrategyBand {
  band_id: BandId;
  label: string;
  environment_note: string;
  lower: number | null;
  upper: number | null;
  special_note: SpecialNote | null;
}

export interface IndicatorPayload {
  indicator: number;
  indicator_log: number;
  macro_component: number;
  micro_component: number;
  warnings: string[];
  recommendation: StrategyBand;
}

export interface DcfYearPayload {
  year: number;
  cashflow: string;
  discounted: string;
}

export interface ValuationPayload {
  value: string;
  method: Method;
  as_of: string | null;
  flags: string[];
  breakdown: Record<string, unknown> & { kind: string };
}

export interface MarketParamsPayload {
  country_rating: number;
  compatibility: number;
  inflation_target: number;
  inflation_origin: number;
  growth_target: number;
  growth_origin: number;
}

export interface DcfParamsPayload {
  base_cashflow: string;
  discount_rate: number;
  perpetual_growth: number;
  horizon_years: number;
}

export interface AdjustmentPayload {
  item_ref: string;
  kind: string;
  book_value: string;
  fair_value: string;
  note: string;
}

export interface ScenarioPayload {
  scenario_id: string;
  company_id: string;
  market_params: MarketParamsPayload;
  social_capital: string;
  chosen_method: Method;
  statements_id: string | null;
  dcf_params: DcfParamsPayload | null;
  adjustments: AdjustmentPayload[];
  valuation_period: string | null;
  market_value: string | null;
  version: number;
  created_at: string;
  updated_at: string;
}

export interface EvaluationPayload {
  record_id: string;
  scenario_id: string;
  method: Method;
  evaluated_at: string;
  valuation: ValuationPayload;
  indicator: IndicatorPayload;
  inputs: { company_value: string; social_capital: string };
  scenario: ScenarioPayload;
}

export interface MethodSummaryPayload {
  value: string;
  indicator: number;
  indicator_log: number;
  band_id: BandId;
}

export interface ComparePayload {
  scenario_id: string;
  methods: Record<string, MethodSummaryPayload>;
  differences: {
    method_a: string;
    method_b: string;
    indicator_log_difference: number;
  }[];
}

export interface StatementItemPayload {
  item_id: string;
  label: string;
  statement: "BALANCE_SHEET" | "PROFIT_LOSS";
  side: string;
  values: (string | null)[];
}

export interface StatementItemsPayload {
  schema_version: number;
  statements_id: string;
  company_id: string;
  currency: string;
  periods: string[];
  items: StatementItemPayload[];
}

export interface DynamicsSeriesPayload {
  item_id: string;
  label: string;
  periods: string[];
  values: (string | null)[];
  deltas: (string | null)[];
  growth: (number | null)[];
  index: (number | null)[];
}

export interface DynamicsPayload {
  series: DynamicsSeriesPayload[];
}

export interface RatingEventPayload {
  date: string;
  agency: string;
  symbol: string;
  quality_label: string;
  score: number;
  trend: "UP" | "DOWN" | "STATIONARY";
  published_trend: "UP" | "DOWN" | "STATIONARY" | null;
  category: string;
}

export interface RatingsPayload {
  country: string;
  category: string;
  events: RatingEventPayload[];
}

export interface StrategyGridPayload {
  bands: StrategyBand[];
  special_notes: { code: string; text: string }[];
}

export interface AboutPayload {
  name: string;
  version: string;
  description: string;
  areas: string[];
}

export interface ScenarioListPayload {
  total: number;
  offset: number;
  limit: number;
  items: ScenarioPayload[];
}

export interface ApiErrorBody {
  error: { code: string; message: string; field?: string };
}
