/* Pure view-model builders. Every data value shown in the UI is carried
 * through verbatim from the API payload: money strings stay the exact
 * strings received, doubles stay the exact numbers received (their display
 * text is the shortest round-trip rendering). Only bar geometry is derived
 * locally, and it never surfaces as a number. */

import type {
  BandId,
  ComparePayload,
  EvaluationPayload,
  Method,
  ScenarioPayload,
} from "./types.js";

export const BAND_COLORS: Record<BandId, string> = {
  GREENFIELD: "#2e7d32",
  ACQUISITION: "#0277bd",
  MERGER_ACQUISITION: "#6a1b9a",
  COOPERATION: "#ef6c00",
  EXPORT: "#ad1457",
};

export interface RecommendationView {
  method: Method;
  companyValue: string;
  socialCapital: string;
  indicator: number;
  indicatorText: string;
  indicatorLog: number;
  indicatorLogText: string;
  macroComponent: number;
  macroComponentText: string;
  microComponent: number;
  microComponentText: string;
  macroBarFraction: number;
  microBarFraction: number;
  warnings: string[];
  bandId: BandId;
  bandLabel: string;
  environmentNote: string;
  specialNote: string | null;
  valuationFlags: string[];
  asOf: string | null;
}

export function buildRecommendationView(payload: EvaluationPayload): RecommendationView {
  const indicator = payload.indicator;
  const macro = indicator.macro_component;
  const micro = indicator.micro_component;
  const magnitude = Math.abs(macro) + Math.abs(micro);
  return {
    method: payload.method,
    companyValue: payload.valuation.value,
    socialCapital: payload.inputs.social_capital,
    indicator: indicator.indicator,
    indicatorText: String(indicator.indicator),
    indicatorLog: indicator.indicator_log,
    indicatorLogText: String(indicator.indicator_log),
    macroComponent: macro,
    macroComponentText: String(macro),
    microComponent: micro,
    microComponentText: String(micro),
    macroBarFraction: magnitude === 0 ? 0 : Math.abs(macro) / magnitude,
    microBarFraction: magnitude === 0 ? 0 : Math.abs(micro) / magnitude,
    warnings: indicator.warnings,
    bandId: indicator.recommendation.band_id,
    bandLabel: indicator.recommendation.label,
    environmentNote: indicator.recommendation.environment_note,
    specialNote: indicator.recommendation.special_note?.text ?? null,
    valuationFlags: payload.valuation.flags,
    asOf: payload.valuation.as_of,
  };
}

export interface MethodOption {
  method: Method;
  available: boolean;
  disabledReason: string | null;
}

const METHOD_REQUIREMENTS: Record<Method, { field: keyof ScenarioPayload; reason: string }> = {
  ANC: { field: "statements_id", reason: "no statements attached to this scenario" },
  DCF: { field: "dcf_params", reason: "no cash-flow parameters on this scenario" },
  MARKET: { field: "market_value", reason: "no market value on this scenario" },
};

export function methodOptions(scenario: ScenarioPayload): MethodOption[] {
  return (Object.keys(METHOD_REQUIREMENTS) as Method[]).map((method) => {
    const requirement = METHOD_REQUIREMENTS[method];
    const available = scenario[requirement.field] != null;
    return {
      method,
      available,
      disabledReason: available ? null : requirement.reason,
    };
  });
}

export interface MethodSwitcherState {
  options: MethodOption[];
  active: Method;
  views: Partial<Record<Method, RecommendationView>>;
}

export function initialSwitcherState(scenario: ScenarioPayload): MethodSwitcherState {
  return {
    options: methodOptions(scenario),
    active: scenario.chosen_method,
    views: {},
  };
}

export function selectMethod(state: MethodSwitcherState, method: Method): MethodSwitcherState {
  const option = state.options.find((o) => o.method === method);
  if (!option || !option.available) return state;
  return { ...state, active: method };
}

export function withEvaluation(
  state: MethodSwitcherState,
  payload: EvaluationPayload,
): MethodSwitcherState {
  return {
    ...state,
    views: { ...state.views, [payload.method]: buildRecommendationView(payload) },
  };
}

export function activeView(state: MethodSwitcherState): RecommendationView | null {
  return state.views[state.active] ?? null;
}

export interface ComparisonRow {
  method: string;
  value: string;
  indicatorLog: number;
  indicatorLogText: string;
  bandId: BandId;
}

export interface DifferenceRow {
  label: string;
  difference: number;
  differenceText: string;
}

export function buildComparisonRows(payload: ComparePayload): {
  rows: ComparisonRow[];
  differences: DifferenceRow[];
} {
  const rows = Object.entries(payload.methods).map(([method, summary]) => ({
    method,
    value: summary.value,
    indicatorLog: summary.indicator_log,
    indicatorLogText: String(summary.indicator_log),
    bandId: summary.band_id,
  }));
  const differences = payload.differences.map((d) => ({
    label: `${d.method_a} vs ${d.method_b}`,
    difference: d.indicator_log_difference,
    differenceText: String(d.indicator_log_difference),
  }));
  return { rows, differences };
}
