/* Parameter form model: per-field hard validation and soft warning badges.
 * These checks mirror the server's input contract so the form can block
 * submission early; all indicator and valuation math stays on the server. */

export const PARAMETER_FIELDS = [
  "country_rating",
  "compatibility",
  "inflation_target",
  "inflation_origin",
  "growth_target",
  "growth_origin",
  "discount_rate",
  "perpetual_growth",
] as const;

export type ParameterFieldName = (typeof PARAMETER_FIELDS)[number];

export const FIELD_LABELS: Record<ParameterFieldName, string> = {
  country_rating: "Country rating (1-10)",
  compatibility: "Compatibility factor (0.1-100)",
  inflation_target: "Inflation rate, target market",
  inflation_origin: "Inflation rate, country of origin",
  growth_target: "Economic growth rate, target market",
  growth_origin: "Economic growth rate, country of origin",
  discount_rate: "Discount rate",
  perpetual_growth: "Perpetual growth rate",
};

/* Demo prefill: the bundled sample company's comparative parameters. */
export const DEMO_DEFAULTS: Record<ParameterFieldName, string> = {
  country_rating: "7",
  compatibility: "1",
  inflation_target: "0.1",
  inflation_origin: "0.04",
  growth_target: "0.05",
  growth_origin: "0.01",
  discount_rate: "0.055",
  perpetual_growth: "0.01",
};

export interface FieldState {
  raw: string;
  value: number | null;
  error: string | null;
}

export interface ParameterForm {
  fields: Record<ParameterFieldName, FieldState>;
  warnings: string[];
  canSubmit: boolean;
}

const RATE_FIELDS: ParameterFieldName[] = [
  "inflation_target",
  "inflation_origin",
  "growth_target",
  "growth_origin",
];

function parseNumber(raw: string): number | null {
  const trimmed = raw.trim();
  if (trimmed === "") return null;
  const value = Number(trimmed);
  return Number.isFinite(value) ? value : null;
}

function fieldError(name: ParameterFieldName, value: number | null): string | null {
  if (value === null) return "must be a number";
  if (name === "country_rating" && (value < 1 || value > 10)) {
    return "must lie in [1, 10]";
  }
  if (name === "compatibility" && (value < 0.1 || value > 100)) {
    return "must lie in [0.1, 100]";
  }
  if (RATE_FIELDS.includes(name) && value <= -1) {
    return "must exceed -100%";
  }
  if (name === "discount_rate" && value <= 0) {
    return "must be positive";
  }
  return null;
}

export function evaluateForm(raw: Record<ParameterFieldName, string>): ParameterForm {
  const fields = {} as Record<ParameterFieldName, FieldState>;
  for (const name of PARAMETER_FIELDS) {
    const value = parseNumber(raw[name]);
    fields[name] = { raw: raw[name], value, error: fieldError(name, value) };
  }

  const discount = fields.discount_rate;
  const growth = fields.perpetual_growth;
  if (
    discount.error === null &&
    growth.error === null &&
    discount.value !== null &&
    growth.value !== null &&
    growth.value >= discount.value
  ) {
    growth.error = "must stay below the discount rate";
  }

  const warnings: string[] = [];
  const ratio = (target: FieldState, origin: FieldState): number | null =>
    target.value !== null && origin.value !== null && target.error === null && origin.error === null
      ? (1 + target.value) / (1 + origin.value)
      : null;
  const inflationRatio = ratio(fields.inflation_target, fields.inflation_origin);
  if (inflationRatio !== null && !(inflationRatio > 0 && inflationRatio <= 2)) {
    warnings.push("Inflation ratio outside (0, 2]: target-market inflation is soaring.");
  }
  const growthRatio = ratio(fields.growth_target, fields.growth_origin);
  if (growthRatio !== null && !(growthRatio > 0 && growthRatio <= 2)) {
    warnings.push("Growth ratio outside (0, 2]: growth rhythms diverge sharply.");
  }

  const canSubmit = PARAMETER_FIELDS.every((name) => fields[name].error === null);
  return { fields, warnings, canSubmit };
}

/* Scenario payload fragments from a valid form; the inverse of formFromScenario. */
export function formToScenarioFragment(form: ParameterForm): {
  market_params: Record<string, number>;
  discount_rate: number;
  perpetual_growth: number;
} {
  const value = (name: ParameterFieldName): number => {
    const field = form.fields[name];
    if (field.error !== null || field.value === null) {
      throw new Error(`field ${name} is not valid`);
    }
    return field.value;
  };
  return {
    market_params: {
      country_rating: value("country_rating"),
      compatibility: value("compatibility"),
      inflation_target: value("inflation_target"),
      inflation_origin: value("inflation_origin"),
      growth_target: value("growth_target"),
      growth_origin: value("growth_origin"),
    },
    discount_rate: value("discount_rate"),
    perpetual_growth: value("perpetual_growth"),
  };
}

export function formFromScenario(
  marketParams: Record<string, number>,
  dcfParams: { discount_rate: number; perpetual_growth: number } | null,
): Record<ParameterFieldName, string> {
  const raw = {} as Record<ParameterFieldName, string>;
  for (const name of PARAMETER_FIELDS) {
    if (name === "discount_rate" || name === "perpetual_growth") {
      raw[name] = dcfParams ? String(dcfParams[name]) : DEMO_DEFAULTS[name];
    } else {
      raw[name] = String(marketParams[name]);
    }
  }
  return raw;
}
