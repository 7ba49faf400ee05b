/* Analyst workbench: four tabbed areas backed by the scenario-service API.
 *
 *   1. comparative parameter entry (with field validation and warning badges)
 *   2. valuation method selection with live indicator and recommendation
 *   3. balance-sheet / profit-and-loss item selection with dynamics charts
 *   4. about
 *
 * The page never computes indicator or valuation figures itself; every
 * number on screen is taken verbatim from an API response. */

import { ApiClient, ApiError } from "./api.js";
import {
  buildLineChart,
  renderChartSvg,
  seriesForMode,
  SERIES_COLORS,
  type ChartMode,
} from "./charts.js";
import { RequestSequencer } from "./sequence.js";
import type {
  Method,
  ScenarioPayload,
  StatementItemsPayload,
} from "./types.js";
import {
  DEMO_DEFAULTS,
  evaluateForm,
  FIELD_LABELS,
  formFromScenario,
  formToScenarioFragment,
  PARAMETER_FIELDS,
  type ParameterFieldName,
  type ParameterForm,
} from "./validate.js";
import {
  activeView,
  BAND_COLORS,
  buildComparisonRows,
  initialSwitcherState,
  selectMethod,
  withEvaluation,
  type MethodSwitcherState,
} from "./viewmodel.js";

const SCENARIO_ID = new URLSearchParams(window.location.search).get("scenario") ?? "compa";

interface AppState {
  scenario: ScenarioPayload | null;
  formRaw: Record<ParameterFieldName, string>;
  form: ParameterForm;
  switcher: MethodSwitcherState | null;
  items: StatementItemsPayload | null;
  selected: string[];
  chartMode: ChartMode;
  serverFieldError: { field: string; message: string } | null;
}

const api = new ApiClient("");
const sequencer = new RequestSequencer();

const state: AppState = {
  scenario: null,
  formRaw: { ...DEMO_DEFAULTS },
  form: evaluateForm(DEMO_DEFAULTS),
  switcher: null,
  items: null,
  selected: [],
  chartMode: "values",
  serverFieldError: null,
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: (Node | string)[] = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "class") node.className = value;
    else node.setAttribute(key, value);
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

function byId(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

/* ---------------------------------------------------------------- tabs -- */

const TABS = [
  { id: "parameters", title: "1 · Parameters" },
  { id: "recommendation", title: "2 · Valuation & strategy" },
  { id: "dynamics", title: "3 · Dynamics" },
  { id: "about", title: "4 · About" },
];

function renderTabs(active: string): void {
  const bar = byId("tabs");
  bar.replaceChildren(
    ...TABS.map((tab) => {
      const button = el("button", { class: tab.id === active ? "tab active" : "tab" }, [
        tab.title,
      ]);
      button.addEventListener("click", () => showTab(tab.id));
      return button;
    }),
  );
}

function showTab(id: string): void {
  for (const tab of TABS) {
    byId(`area-${tab.id}`).style.display = tab.id === id ? "" : "none";
  }
  renderTabs(id);
}

/* ---------------------------------------------------- area 1: parameters -- */

function renderParameterForm(): void {
  const container = byId("parameter-form");
  const rows = PARAMETER_FIELDS.map((name) => {
    const field = state.form.fields[name];
    const input = el("input", {
      id: `field-${name}`,
      value: field.raw,
      autocomplete: "off",
      spellcheck: "false",
    });
    input.addEventListener("input", () => {
      state.formRaw = { ...state.formRaw, [name]: input.value };
      state.form = evaluateForm(state.formRaw);
      state.serverFieldError = null;
      renderParameterForm();
    });
    const serverError =
      state.serverFieldError && state.serverFieldError.field === name
        ? state.serverFieldError.message
        : null;
    const error = field.error ?? serverError;
    return el("div", { class: "form-row" }, [
      el("label", { for: `field-${name}` }, [FIELD_LABELS[name]]),
      input,
      el("span", { class: error ? "field-error" : "field-ok" }, [error ?? "ok"]),
    ]);
  });

  const warningBadges = state.form.warnings.map((text) =>
    el("span", { class: "badge warning" }, [text]),
  );

  const save = el("button", { class: "primary", id: "save-scenario" }, ["Save parameters"]);
  save.disabled = !state.form.canSubmit || state.scenario === null;
  save.addEventListener("click", () => void saveScenario());

  container.replaceChildren(
    ...rows,
    el("div", { class: "badges" }, warningBadges),
    el("div", { class: "form-actions" }, [save]),
  );
}

async function saveScenario(): Promise<void> {
  if (!state.scenario || !state.form.canSubmit) return;
  const fragment = formToScenarioFragment(state.form);
  const doc: Record<string, unknown> = {
    ...state.scenario,
    market_params: fragment.market_params,
  };
  if (state.scenario.dcf_params) {
    doc.dcf_params = {
      ...state.scenario.dcf_params,
      discount_rate: fragment.discount_rate,
      perpetual_growth: fragment.perpetual_growth,
    };
  }
  delete doc.version;
  delete doc.created_at;
  delete doc.updated_at;
  try {
    state.scenario = await api.updateScenario(
      state.scenario.scenario_id,
      state.scenario.version,
      doc,
    );
    state.serverFieldError = null;
    setStatus(`saved scenario ${state.scenario.scenario_id} (v${state.scenario.version})`);
    state.switcher = initialSwitcherState(state.scenario);
    await evaluateActive();
  } catch (error) {
    if (error instanceof ApiError && error.field) {
      state.serverFieldError = { field: error.field, message: error.message };
      renderParameterForm();
    } else {
      setStatus(describeError(error), true);
    }
  }
}

/* ----------------------------------------- area 2: method switch + bands -- */

function renderRecommendation(): void {
  const container = byId("recommendation-view");
  if (!state.switcher) {
    container.replaceChildren(el("p", { class: "muted" }, ["No scenario loaded."]));
    return;
  }

  const selector = el("div", { class: "method-selector" });
  for (const option of state.switcher.options) {
    const button = el(
      "button",
      {
        class:
          option.method === state.switcher.active ? "method active" : "method",
        title: option.disabledReason ?? `evaluate with ${option.method}`,
      },
      [option.method],
    );
    button.disabled = !option.available;
    button.addEventListener("click", () => {
      if (!state.switcher) return;
      state.switcher = selectMethod(state.switcher, option.method);
      renderRecommendation();
      void evaluateActive();
    });
    selector.append(button);
  }

  const view = activeView(state.switcher);
  const details = el("div", { class: "recommendation-details" });
  if (!view) {
    details.append(el("p", { class: "muted" }, ["Evaluating…"]));
  } else {
    const bandColor = BAND_COLORS[view.bandId];
    details.append(
      el("div", { class: "readouts" }, [
        readout("Method", view.method),
        readout("Company value", view.companyValue),
        readout("Social capital", view.socialCapital),
        readout("Risk indicator (I)", view.indicatorText),
        readout("Log scale (I*)", view.indicatorLogText),
      ]),
      el("div", { class: "bars" }, [
        bar("macro component", view.macroComponentText, view.macroBarFraction, "#1565c0"),
        bar("micro component", view.microComponentText, view.microBarFraction, "#c62828"),
      ]),
      el("div", { class: "band-chip", style: `background:${bandColor}` }, [
        el("strong", {}, [view.bandLabel]),
      ]),
      el("p", { class: "environment-note" }, [view.environmentNote]),
    );
    if (view.specialNote) {
      details.append(el("p", { class: "badge warning" }, [view.specialNote]));
    }
    for (const warning of view.warnings) {
      details.append(el("p", { class: "badge warning" }, [warning]));
    }
    for (const flag of view.valuationFlags) {
      details.append(el("p", { class: "badge warning" }, [flag]));
    }
  }

  const compareButton = el("button", {}, ["Compare methods"]);
  compareButton.addEventListener("click", () => void loadComparison());

  container.replaceChildren(
    selector,
    details,
    el("div", { class: "form-actions" }, [compareButton]),
    el("div", { id: "comparison" }),
  );
}

function readout(label: string, value: string): HTMLElement {
  return el("div", { class: "readout" }, [
    el("span", { class: "readout-label" }, [label]),
    el("span", { class: "readout-value" }, [value]),
  ]);
}

function bar(label: string, valueText: string, fraction: number, color: string): HTMLElement {
  const width = Math.max(2, Math.round(fraction * 100));
  return el("div", { class: "bar-row" }, [
    el("span", { class: "bar-label" }, [label]),
    el("div", { class: "bar-track" }, [
      el("div", { class: "bar-fill", style: `width:${width}%;background:${color}` }),
    ]),
    el("span", { class: "bar-value" }, [valueText]),
  ]);
}

async function evaluateActive(): Promise<void> {
  if (!state.switcher) return;
  const method = state.switcher.active;
  const token = sequencer.issue("evaluate");
  try {
    const payload = await api.evaluate(SCENARIO_ID, method);
    if (!sequencer.accept("evaluate", token) || !state.switcher) return;
    state.switcher = withEvaluation(state.switcher, payload);
    renderRecommendation();
  } catch (error) {
    if (sequencer.accept("evaluate", token)) setStatus(describeError(error), true);
  }
}

async function loadComparison(): Promise<void> {
  try {
    const payload = await api.compare(SCENARIO_ID);
    const { rows, differences } = buildComparisonRows(payload);
    const table = el("table", { class: "comparison" }, [
      el("thead", {}, [
        el("tr", {}, [
          el("th", {}, ["Method"]),
          el("th", {}, ["Company value"]),
          el("th", {}, ["I*"]),
          el("th", {}, ["Band"]),
        ]),
      ]),
      el(
        "tbody",
        {},
        rows.map((row) =>
          el("tr", {}, [
            el("td", {}, [row.method]),
            el("td", {}, [row.value]),
            el("td", {}, [row.indicatorLogText]),
            el("td", {}, [row.bandId]),
          ]),
        ),
      ),
    ]);
    const diffs = el(
      "ul",
      { class: "differences" },
      differences.map((d) => el("li", {}, [`${d.label}: ${d.differenceText}`])),
    );
    byId("comparison").replaceChildren(el("h3", {}, ["Method comparison"]), table, diffs);
  } catch (error) {
    setStatus(describeError(error), true);
  }
}

/* ------------------------------------------------- area 3: dynamics view -- */

function renderDynamicsArea(): void {
  const container = byId("dynamics-controls");
  if (!state.items) {
    container.replaceChildren(el("p", { class: "muted" }, ["No statements loaded."]));
    return;
  }

  const available = el(
    "select",
    { id: "available-items", size: "8", multiple: "multiple" },
    state.items.items
      .filter((item) => !state.selected.includes(item.item_id))
      .map((item) =>
        el("option", { value: item.item_id }, [`${item.label} (${item.statement})`]),
      ),
  );
  const chosen = el(
    "select",
    { id: "selected-items", size: "8", multiple: "multiple" },
    state.selected.map((id) => {
      const item = state.items?.items.find((i) => i.item_id === id);
      return el("option", { value: id }, [item ? item.label : id]);
    }),
  );

  const add = el("button", {}, ["Add →"]);
  add.addEventListener("click", () => {
    const picked = Array.from(available.selectedOptions).map((o) => o.value);
    state.selected = [...state.selected, ...picked.filter((p) => !state.selected.includes(p))];
    renderDynamicsArea();
  });
  const remove = el("button", {}, ["← Remove"]);
  remove.addEventListener("click", () => {
    const dropped = new Set(Array.from(chosen.selectedOptions).map((o) => o.value));
    state.selected = state.selected.filter((id) => !dropped.has(id));
    if (state.selected.length === 0) byId("chart").replaceChildren();
    renderDynamicsArea();
  });

  const modeToggle = el("div", { class: "mode-toggle" });
  (["values", "growth", "index"] as ChartMode[]).forEach((mode) => {
    const button = el(
      "button",
      { class: mode === state.chartMode ? "mode active" : "mode" },
      [mode],
    );
    button.addEventListener("click", () => {
      state.chartMode = mode;
      renderDynamicsArea();
      if (state.selected.length > 0) void drawChart();
    });
    modeToggle.append(button);
  });

  const draw = el("button", { class: "primary" }, ["Show dynamics"]);
  draw.disabled = state.selected.length === 0;
  draw.addEventListener("click", () => void drawChart());

  container.replaceChildren(
    el("div", { class: "pane-grid" }, [
      el("div", {}, [el("h4", {}, ["Available items"]), available]),
      el("div", { class: "pane-buttons" }, [add, remove]),
      el("div", {}, [el("h4", {}, ["Selected for charting"]), chosen]),
    ]),
    el("div", { class: "form-actions" }, [modeToggle, draw]),
  );
}

async function drawChart(): Promise<void> {
  if (state.selected.length === 0) return;
  const token = sequencer.issue("dynamics");
  try {
    const payload = await api.dynamics(SCENARIO_ID_STATEMENTS(), state.selected);
    if (!sequencer.accept("dynamics", token)) return;
    const seriesList = payload.series.map((s) => seriesForMode(s, state.chartMode));
    const periods = payload.series[0]?.periods ?? [];
    const chart = buildLineChart(seriesList, periods);
    const legend = el(
      "div",
      { class: "legend" },
      seriesList.map((s, i) =>
        el("span", { class: "legend-entry" }, [
          el("span", {
            class: "legend-swatch",
            style: `background:${SERIES_COLORS[i % SERIES_COLORS.length]}`,
          }),
          s.label,
        ]),
      ),
    );
    const host = byId("chart");
    host.replaceChildren(legend);
    const svgWrap = el("div", { class: "chart-svg" });
    svgWrap.innerHTML = renderChartSvg(chart);
    host.append(svgWrap);
  } catch (error) {
    setStatus(describeError(error), true);
  }
}

function SCENARIO_ID_STATEMENTS(): string {
  return state.scenario?.statements_id ?? SCENARIO_ID;
}

/* --------------------------------------------------------- area 4: about -- */

async function renderAbout(): Promise<void> {
  try {
    const about = await api.about();
    byId("about-view").replaceChildren(
      el("h3", {}, [`${about.name} ${about.version}`]),
      el("p", {}, [about.description]),
      el("ul", {}, about.areas.map((area) => el("li", {}, [area]))),
    );
  } catch (error) {
    setStatus(describeError(error), true);
  }
}

/* -------------------------------------------------------------- plumbing -- */

function setStatus(text: string, isError = false): void {
  const node = byId("status");
  node.textContent = text;
  node.className = isError ? "status error" : "status";
}

function describeError(error: unknown): string {
  if (error instanceof ApiError) {
    return `${error.code}: ${error.message}`;
  }
  return error instanceof Error ? error.message : String(error);
}

async function boot(): Promise<void> {
  renderTabs("parameters");
  showTab("parameters");
  renderParameterForm();
  try {
    state.scenario = await api.getScenario(SCENARIO_ID);
    state.formRaw = formFromScenario(
      state.scenario.market_params as unknown as Record<string, number>,
      state.scenario.dcf_params,
    );
    state.form = evaluateForm(state.formRaw);
    state.switcher = initialSwitcherState(state.scenario);
    renderParameterForm();
    renderRecommendation();
    await evaluateActive();
    if (state.scenario.statements_id) {
      state.items = await api.statementItems(state.scenario.statements_id);
    }
    renderDynamicsArea();
    setStatus(`scenario ${SCENARIO_ID} loaded`);
  } catch (error) {
    setStatus(describeError(error), true);
    renderRecommendation();
    renderDynamicsArea();
  }
  await renderAbout();
}

void boot();
