/**
 * Turn a FigureSpec into an SVG file via echarts server-side rendering.
 * Charts are non-animated with fixed dimensions, so a given spec always
 * renders to the same bytes.
 */

import { mkdirSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import * as echarts from "echarts";
import { FigureSpec } from "./scan.js";
import { InputError, readDensityCsv, readTableCsv } from "./schema.js";

export const FIGURE_WIDTH = 840;
export const FIGURE_HEIGHT = 520;

type SeriesData = { name: string; points: [number, number][] }[];

const PALETTE = [
  "#4063a3",
  "#c1403d",
  "#3d8a50",
  "#8a5cb0",
  "#c07c2e",
  "#3f9ca6",
  "#7a7a2e",
  "#b05c86",
];

function baseOption(spec: FigureSpec, xType: "value" | "log", yType: "value" | "log") {
  return {
    animation: false as const,
    color: PALETTE,
    title: {
      text: spec.title,
      subtext: spec.subtitle,
      left: "center",
      textStyle: { fontSize: 16 },
      subtextStyle: { fontSize: 11 },
    },
    legend: { bottom: 0, data: spec.legends },
    grid: { left: 70, right: 30, top: 64, bottom: 56 },
    xAxis: {
      type: xType,
      name: spec.xLabel,
      nameLocation: "middle" as const,
      nameGap: 26,
    },
    yAxis: {
      type: yType,
      name: spec.yLabel,
      nameLocation: "middle" as const,
      nameGap: 52,
    },
  };
}

function lineSeries(data: SeriesData, opts: { symbol?: boolean } = {}) {
  return data.map((s) => ({
    type: "line" as const,
    name: s.name,
    data: s.points,
    showSymbol: opts.symbol ?? false,
    symbolSize: 7,
    lineStyle: { width: 1.6 },
  }));
}

/** Series from a single table CSV, one per configured column. */
function tableSeries(spec: FigureSpec): SeriesData {
  const cols = spec.columns;
  if (cols === undefined) {
    throw new InputError(spec.inputs[0] ?? spec.name, "table figure without column mapping");
  }
  const header = [cols.x, ...cols.series];
  const path = spec.inputs[0];
  if (path === undefined) {
    throw new InputError(spec.name, "empty input list");
  }
  // Headers may hold extra columns (e.g. order, mass); require only the used ones.
  const rows = readTableCsv(path, expectedHeader(path, header));
  return cols.series.map((col, i) => ({
    name: spec.legends[i] ?? col,
    points: rows.flatMap((r) => {
      const x = r[cols.x];
      const y = r[col];
      return x !== null && x !== undefined && y !== null && y !== undefined
        ? [[x, y] as [number, number]]
        : [];
    }),
  }));
}

/** The full header a known table file carries on disk. */
function expectedHeader(path: string, used: string[]): string[] {
  const known: string[][] = [
    ["h", "error", "order"],
    ["L", "mass", "defect"],
    ["alpha", "slope", "reference"],
    ["alpha", "threshold"],
    ["t", "max_abs", "rel_l2"],
    ["x", "p_pde", "p_mc"],
  ];
  for (const header of known) {
    if (used.every((c) => header.includes(c))) return header;
  }
  return used;
}

function densitySeries(spec: FigureSpec): SeriesData {
  return spec.inputs.map((path, i) => {
    const curve = readDensityCsv(path);
    return {
      name: spec.legends[i] ?? path,
      points: curve.x.map((x, j) => [x, curve.p[j]!] as [number, number]),
    };
  });
}

function densityFamilyOption(spec: FigureSpec) {
  const data = spec.columns === undefined ? densitySeries(spec) : tableSeries(spec);
  return {
    ...baseOption(spec, "value", "value"),
    series: lineSeries(data, { symbol: spec.columns !== undefined }),
  };
}

function errorVsTimeOption(spec: FigureSpec) {
  const data = tableSeries(spec).map((s) => ({
    name: s.name,
    points: s.points.filter(([, y]) => y > 0),
  }));
  return {
    ...baseOption(spec, "value", "log"),
    series: lineSeries(data, { symbol: true }),
  };
}

function logLogTailOption(spec: FigureSpec) {
  // Right tail only: log axes need strictly positive coordinates.
  const data = densitySeries(spec).map((s) => ({
    name: s.name,
    points: s.points.filter(([x, y]) => x > 0 && y > 0),
  }));
  return {
    ...baseOption(spec, "log", "log"),
    series: lineSeries(data),
  };
}

function thresholdOption(spec: FigureSpec) {
  return {
    ...baseOption(spec, "value", "value"),
    yAxis: {
      ...baseOption(spec, "value", "value").yAxis,
      min: 0,
      max: 1.05,
    },
    series: lineSeries(tableSeries(spec), { symbol: true }),
  };
}

function convergenceOption(spec: FigureSpec) {
  const data = tableSeries(spec).map((s) => ({
    name: s.name,
    points: s.points.filter(([x, y]) => x > 0 && y > 0),
  }));
  return {
    ...baseOption(spec, "log", "log"),
    series: lineSeries(data, { symbol: true }),
  };
}

/** The echarts option a spec renders with (exposed for testing). */
export function buildOption(spec: FigureSpec): Record<string, unknown> {
  if (spec.inputs.length === 0) {
    throw new InputError(spec.name, "empty input list");
  }
  switch (spec.kind) {
    case "DensityFamily":
      return densityFamilyOption(spec);
    case "ErrorVsTime":
      return errorVsTimeOption(spec);
    case "LogLogTail":
      return logLogTailOption(spec);
    case "ThresholdCurve":
      return thresholdOption(spec);
    case "ConvergenceTable":
      return convergenceOption(spec);
  }
}

/**
 * The SVG backend numbers ids and class names with process-global counters,
 * so a second render differs in bytes. Renumber by first appearance to make
 * a fixed spec render to identical output.
 */
function normalizeIds(svg: string): string {
  const seen = new Map<string, string>();
  return svg.replace(/zr\d+-[A-Za-z0-9_-]+/g, (token) => {
    let stable = seen.get(token);
    if (stable === undefined) {
      stable = `zr-${seen.size}`;
      seen.set(token, stable);
    }
    return stable;
  });
}

/** Render a spec to an SVG string. */
export function renderSvg(spec: FigureSpec): string {
  const option = buildOption(spec);
  const chart = echarts.init(null, null, {
    renderer: "svg",
    ssr: true,
    width: FIGURE_WIDTH,
    height: FIGURE_HEIGHT,
  });
  try {
    chart.setOption(option);
    return normalizeIds(chart.renderToSVGString());
  } finally {
    chart.dispose();
  }
}

/** Render and write `<outDir>/<spec.name>.svg`; nothing is written on error. */
export function writeFigure(spec: FigureSpec, outDir: string): string {
  const svg = renderSvg(spec);
  mkdirSync(outDir, { recursive: true });
  const path = join(outDir, `${spec.name}.svg`);
  writeFileSync(path, svg);
  return path;
}
