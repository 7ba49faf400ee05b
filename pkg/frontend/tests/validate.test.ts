/* Parameter form: hard errors block submission, soft warnings never do,
 * and a form round-trips through the scenario payload without value drift. */

import { describe, expect, it } from "vitest";

import type { ScenarioPayload } from "../src/types.js";
import {
  DEMO_DEFAULTS,
  evaluateForm,
  formFromScenario,
  formToScenarioFragment,
  PARAMETER_FIELDS,
} from "../src/validate.js";
import { fixture } from "./helpers.js";

const scenario = fixture<ScenarioPayload>("scenario.json");

function withField(name: (typeof PARAMETER_FIELDS)[number], raw: string) {
  return { ...DEMO_DEFAULTS, [name]: raw };
}

describe("evaluateForm", () => {
  it("accepts the demo defaults", () => {
    const form = evaluateForm(DEMO_DEFAULTS);
    expect(form.canSubmit).toBe(true);
    expect(form.warnings).toEqual([]);
    for (const name of PARAMETER_FIELDS) {
      expect(form.fields[name].error).toBeNull();
    }
  });

  it("blocks submission when the country rating leaves [1, 10]", () => {
    const form = evaluateForm(withField("country_rating", "12"));
    expect(form.fields.country_rating.error).toMatch(/\[1, 10\]/);
    expect(form.canSubmit).toBe(false);
  });

  it("blocks non-numeric input", () => {
    const form = evaluateForm(withField("compatibility", "high"));
    expect(form.fields.compatibility.error).toMatch(/number/);
    expect(form.canSubmit).toBe(false);
  });

  it("blocks rates at or below -100%", () => {
    expect(evaluateForm(withField("inflation_origin", "-1")).canSubmit).toBe(false);
    expect(evaluateForm(withField("growth_target", "-1.5")).canSubmit).toBe(false);
  });

  it("requires the growth rate to stay below the discount rate", () => {
    const form = evaluateForm({
      ...DEMO_DEFAULTS,
      discount_rate: "0.01",
      perpetual_growth: "0.02",
    });
    expect(form.fields.perpetual_growth.error).toMatch(/discount rate/);
    expect(form.canSubmit).toBe(false);
  });

  it("warns without blocking when the inflation ratio exceeds 2", () => {
    const form = evaluateForm({
      ...DEMO_DEFAULTS,
      inflation_target: "1.5",
      inflation_origin: "0",
    });
    expect(form.warnings).toHaveLength(1);
    expect(form.warnings[0]).toMatch(/Inflation ratio/);
    expect(form.canSubmit).toBe(true);
  });

  it("warns without blocking when the growth ratio exceeds 2", () => {
    const form = evaluateForm({
      ...DEMO_DEFAULTS,
      growth_target: "2",
      growth_origin: "0.1",
    });
    expect(form.warnings).toHaveLength(1);
    expect(form.canSubmit).toBe(true);
  });
});

describe("scenario round-trip", () => {
  it("recorded scenario -> form -> payload preserves every value exactly", () => {
    const raw = formFromScenario(
      scenario.market_params as unknown as Record<string, number>,
      scenario.dcf_params,
    );
    const form = evaluateForm(raw);
    expect(form.canSubmit).toBe(true);
    const fragment = formToScenarioFragment(form);
    expect(fragment.market_params).toEqual(scenario.market_params);
    expect(fragment.discount_rate).toBe(scenario.dcf_params?.discount_rate);
    expect(fragment.perpetual_growth).toBe(scenario.dcf_params?.perpetual_growth);
  });

  it("form -> payload -> form is stable", () => {
    const form = evaluateForm(DEMO_DEFAULTS);
    const fragment = formToScenarioFragment(form);
    const again = formFromScenario(fragment.market_params, {
      discount_rate: fragment.discount_rate,
      perpetual_growth: fragment.perpetual_growth,
    });
    expect(evaluateForm(again).canSubmit).toBe(true);
    expect(formToScenarioFragment(evaluateForm(again))).toEqual(fragment);
  });
});
