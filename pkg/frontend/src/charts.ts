/* Multi-series SVG line charts for the dynamics explorer.
 * The series data comes straight from the dynamics endpoint (values, growth
 * or index arrays); the client picks an array and plots it, it never
 * recomputes growth rates or rebases an index. All functions are pure so the
 * geometry is testable without a DOM. */

import type { DynamicsSeriesPayload } from "./types.js";

export type ChartMode = "values" | "growth" | "index";

export const SERIES_COLORS = [
  "#1565c0",
  "#c62828",
  "#2e7d32",
  "#6a1b9a",
  "#ef6c00",
  "#00838f",
  "#9e9d24",
  "#ad1457",
];

export interface ChartSeries {
  label: string;
  /* one entry per period; growth series pad the first period with null */
  points: (number | null)[];
}

export function seriesForMode(series: DynamicsSeriesPayload, mode: ChartMode): ChartSeries {
  if (mode === "values") {
    return {
      label: series.label,
      points: series.values.map((v) => (v === null ? null : Number(v))),
    };
  }
  if (mode === "growth") {
    // growth has one entry per transition; align it to the period axis
    return { label: series.label, points: [null, ...series.growth] };
  }
  return { label: series.label, points: series.index };
}

export interface ChartPath {
  d: string;
  color: string;
  label: string;
}

export interface ChartMarker {
  x: number;
  y: number;
  color: string;
}

export interface LineChart {
  width: number;
  height: number;
  paths: ChartPath[];
  markers: ChartMarker[];
  xLabels: { x: number; text: string }[];
  yTicks: { y: number; text: string }[];
  baselineY: number | null;
}

export interface ChartOptions {
  width?: number;
  height?: number;
  margin?: number;
}

function niceTicks(min: number, max: number, count = 5): number[] {
  if (min === max) {
    return [min];
  }
  const span = max - min;
  const step = Math.pow(10, Math.floor(Math.log10(span / count)));
  const candidates = [step, 2 * step, 2.5 * step, 5 * step, 10 * step];
  const chosen = candidates.find((s) => span / s <= count) ?? 10 * step;
  const start = Math.ceil(min / chosen) * chosen;
  const ticks: number[] = [];
  for (let v = start; v <= max + chosen * 1e-9; v += chosen) {
    ticks.push(Number(v.toPrecision(12)));
  }
  return ticks;
}

export function buildLineChart(
  seriesList: ChartSeries[],
  xLabels: string[],
  options: ChartOptions = {},
): LineChart {
  const width = options.width ?? 640;
  const height = options.height ?? 320;
  const margin = options.margin ?? 48;
  const innerWidth = width - 2 * margin;
  const innerHeight = height - 2 * margin;

  const pointValues = seriesList
    .flatMap((s) => s.points)
    .filter((p): p is number => p !== null && Number.isFinite(p));
  const min = pointValues.length ? Math.min(...pointValues) : 0;
  const max = pointValues.length ? Math.max(...pointValues) : 1;
  const pad = min === max ? (min === 0 ? 1 : Math.abs(min) * 0.1) : (max - min) * 0.08;
  const lo = min - pad;
  const hi = max + pad;

  const xCount = Math.max(xLabels.length, 1);
  const xAt = (i: number): number =>
    xCount === 1 ? margin + innerWidth / 2 : margin + (innerWidth * i) / (xCount - 1);
  const yAt = (v: number): number => margin + innerHeight * (1 - (v - lo) / (hi - lo));

  const paths: ChartPath[] = [];
  const markers: ChartMarker[] = [];
  seriesList.forEach((series, seriesIndex) => {
    const color = SERIES_COLORS[seriesIndex % SERIES_COLORS.length] ?? "#333333";
    let d = "";
    let pen = false;
    series.points.forEach((point, i) => {
      if (point === null || !Number.isFinite(point)) {
        pen = false;   // gap: missing or undefined entry breaks the line
        return;
      }
      const x = xAt(i);
      const y = yAt(point);
      d += `${pen ? " L" : (d ? " M" : "M")}${x.toFixed(2)} ${y.toFixed(2)}`;
      markers.push({ x, y, color });
      pen = true;
    });
    paths.push({ d, color, label: series.label });
  });

  return {
    width,
    height,
    paths,
    markers,
    xLabels: xLabels.map((text, i) => ({ x: xAt(i), text })),
    yTicks: niceTicks(lo, hi).map((v) => ({ y: yAt(v), text: formatTick(v) })),
    baselineY: lo < 0 && hi > 0 ? yAt(0) : null,
  };
}

function formatTick(v: number): string {
  const magnitude = Math.abs(v);
  if (magnitude >= 1e9) return `${(v / 1e9).toFixed(1)}B`;
  if (magnitude >= 1e6) return `${(v / 1e6).toFixed(1)}M`;
  if (magnitude >= 1e3) return `${(v / 1e3).toFixed(1)}k`;
  return String(Number(v.toPrecision(6)));
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderChartSvg(chart: LineChart): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${chart.width} ${chart.height}" ` +
      `width="${chart.width}" height="${chart.height}" role="img">`,
  );
  for (const tick of chart.yTicks) {
    parts.push(
      `<line x1="40" x2="${chart.width - 40}" y1="${tick.y.toFixed(2)}" y2="${tick.y.toFixed(2)}" class="grid"/>`,
      `<text x="36" y="${(tick.y + 4).toFixed(2)}" text-anchor="end" class="tick">${escapeXml(tick.text)}</text>`,
    );
  }
  if (chart.baselineY !== null) {
    parts.push(
      `<line x1="40" x2="${chart.width - 40}" y1="${chart.baselineY.toFixed(2)}" y2="${chart.baselineY.toFixed(2)}" class="baseline"/>`,
    );
  }
  for (const label of chart.xLabels) {
    parts.push(
      `<text x="${label.x.toFixed(2)}" y="${chart.height - 16}" text-anchor="middle" class="tick">${escapeXml(label.text)}</text>`,
    );
  }
  for (const path of chart.paths) {
    if (path.d) {
      parts.push(`<path d="${path.d}" fill="none" stroke="${path.color}" stroke-width="2"/>`);
    }
  }
  for (const marker of chart.markers) {
    parts.push(
      `<circle cx="${marker.x.toFixed(2)}" cy="${marker.y.toFixed(2)}" r="3" fill="${marker.color}"/>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}
