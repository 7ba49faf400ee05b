/* The typed client parses responses without touching any value, and turns
 * error envelopes into typed errors. */

import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import type { EvaluationPayload, StrategyGridPayload } from "../src/types.js";
import { fixture, replayFetch } from "./helpers.js";

const anc = fixture<EvaluationPayload>("evaluate_anc.json");
const grid = fixture<StrategyGridPayload>("strategy_grid.json");

describe("ApiClient", () => {
  it("returns evaluation payloads exactly as recorded", async () => {
    const client = new ApiClient(
      "",
      replayFetch([{ match: /\/api\/scenarios\/compa\/evaluate$/, body: anc }]),
    );
    const payload = await client.evaluate("compa", "ANC");
    expect(payload).toEqual(anc);
    expect(payload.indicator.indicator_log).toBe(2.1045327977884365);
    expect(payload.valuation.value).toBe("361656741");
  });

  it("fetches the strategy grid with band boundaries intact", async () => {
    const client = new ApiClient(
      "",
      replayFetch([{ match: /\/api\/meta\/strategy-grid$/, body: grid }]),
    );
    const payload = await client.strategyGrid();
    expect(payload.bands).toHaveLength(5);
    expect(payload.bands[0]?.band_id).toBe("GREENFIELD");
    expect(payload.bands[0]?.lower).toBeNull();
    expect(payload.bands[4]?.lower).toBe(5.0);
  });

  it("raises a typed error from the error envelope", async () => {
    const client = new ApiClient(
      "",
      replayFetch([
        {
          match: /\/api\/scenarios\/ghost$/,
          body: { error: { code: "NOT_FOUND", message: "scenario 'ghost' not found" } },
          status: 404,
        },
      ]),
    );
    const failure = await client.getScenario("ghost").catch((e: unknown) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect((failure as ApiError).status).toBe(404);
    expect((failure as ApiError).code).toBe("NOT_FOUND");
  });

  it("carries the offending field through validation errors", async () => {
    const client = new ApiClient(
      "",
      replayFetch([
        {
          match: /\/api\/scenarios$/,
          body: {
            error: {
              code: "VALIDATION",
              message: "country_rating must lie in [1, 10]",
              field: "country_rating",
            },
          },
          status: 400,
        },
      ]),
    );
    const failure = await client.createScenario({}).catch((e: unknown) => e);
    expect((failure as ApiError).field).toBe("country_rating");
  });
});
