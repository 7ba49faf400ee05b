/* Typed client for the scenario-service HTTP API.
 * Responses are returned as parsed, otherwise untouched payloads; the fetch
 * implementation is injectable so tests can run against recorded fixtures. */

import type {
  AboutPayload,
  ApiErrorBody,
  ComparePayload,
  DynamicsPayload,
  EvaluationPayload,
  Method,
  RatingsPayload,
  ScenarioListPayload,
  ScenarioPayload,
  StatementItemsPayload,
  StrategyGridPayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly field?: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    const text = await response.text();
    let body: unknown = null;
    try {
      body = text ? JSON.parse(text) : null;
    } catch {
      body = null;
    }
    if (!response.ok) {
      const error = (body as ApiErrorBody | null)?.error;
      throw new ApiError(
        response.status,
        error?.code ?? "HTTP_ERROR",
        error?.message ?? `request failed with status ${response.status}`,
        error?.field,
      );
    }
    return body as T;
  }

  private json(body: unknown): RequestInit {
    return {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    };
  }

  getScenario(id: string): Promise<ScenarioPayload> {
    return this.request(`/api/scenarios/${encodeURIComponent(id)}`);
  }

  listScenarios(offset = 0, limit = 50): Promise<ScenarioListPayload> {
    return this.request(`/api/scenarios?offset=${offset}&limit=${limit}`);
  }

  createScenario(doc: Record<string, unknown>): Promise<ScenarioPayload> {
    return this.request("/api/scenarios", this.json(doc));
  }

  updateScenario(
    id: string,
    version: number,
    scenario: Record<string, unknown>,
  ): Promise<ScenarioPayload> {
    return this.request(`/api/scenarios/${encodeURIComponent(id)}`, {
      ...this.json({ version, scenario }),
      method: "PUT",
    });
  }

  evaluate(id: string, method?: Method): Promise<EvaluationPayload> {
    return this.request(
      `/api/scenarios/${encodeURIComponent(id)}/evaluate`,
      this.json(method ? { method } : {}),
    );
  }

  compare(id: string): Promise<ComparePayload> {
    return this.request(`/api/scenarios/${encodeURIComponent(id)}/compare`);
  }

  statementItems(id: string): Promise<StatementItemsPayload> {
    return this.request(`/api/statements/${encodeURIComponent(id)}/items`);
  }

  dynamics(id: string, itemIds: string[]): Promise<DynamicsPayload> {
    return this.request(
      `/api/statements/${encodeURIComponent(id)}/dynamics`,
      this.json({ item_ids: itemIds }),
    );
  }

  ratings(country: string, category: string): Promise<RatingsPayload> {
    return this.request(
      `/api/ratings/${encodeURIComponent(country)}/${encodeURIComponent(category)}`,
    );
  }

  strategyGrid(): Promise<StrategyGridPayload> {
    return this.request("/api/meta/strategy-grid");
  }

  about(): Promise<AboutPayload> {
    return this.request("/api/meta/about");
  }
}
