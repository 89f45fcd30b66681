/**
 * Walk a solver run directory and decide which figures it supports.
 *
 * Scenario outputs are discovered through their manifests (scenario names may
 * contain underscores, so file names alone are ambiguous); the fixed-name
 * study tables (table1.csv, table2.csv, masscheck.csv, tails.csv,
 * threshold_vs_alpha.csv) are recognized directly.
 */

import { existsSync, readdirSync } from "node:fs";
import { join } from "node:path";
import {
  InputError,
  RunManifest,
  configNumber,
  configString,
  readDensityCsv,
  readManifest,
  readTableCsv,
} from "./schema.js";

export type FigureKind =
  | "DensityFamily"
  | "LogLogTail"
  | "ErrorVsTime"
  | "ThresholdCurve"
  | "ConvergenceTable";

export interface FigureSpec {
  kind: FigureKind;
  /** Output file stem; the renderer writes `<name>.svg`. */
  name: string;
  title: string;
  subtitle: string;
  /** CSV paths consumed by the figure; density curves unless `columns` set. */
  inputs: string[];
  /** One legend entry per series. */
  legends: string[];
  xLabel: string;
  yLabel: string;
  /** For single-table figures: which columns provide x and the series. */
  columns?: { x: string; series: string[] };
}

export interface ScanResult {
  specs: FigureSpec[];
  problems: InputError[];
}

const TABLE_HEADERS: Record<string, string[]> = {
  "table1.csv": ["h", "error", "order"],
  "table2.csv": ["h", "error", "order"],
  "masscheck.csv": ["L", "mass", "defect"],
  "tails.csv": ["alpha", "slope", "reference"],
  "threshold_vs_alpha.csv": ["alpha", "threshold"],
};

function escapeRegExp(s: string): string {
  return s.replace(/[.*+?^${}()|[\]\\]/g, "\\$&");
}

function fmt(v: number): string {
  return String(parseFloat(v.toPrecision(6)));
}

function describeRun(m: RunManifest): string {
  const parts: string[] = [];
  for (const key of ["alpha", "eps", "d", "h"]) {
    const v = configNumber(m, key);
    if (v !== undefined) parts.push(`${key}=${fmt(v)}`);
  }
  const drift = configString(m, "drift");
  if (drift && drift !== "zero") parts.push(`drift=${drift}`);
  const condition = configString(m, "condition");
  if (condition) parts.push(condition);
  return parts.join(", ");
}

interface Snapshot {
  time: number;
  path: string;
}

/** Density snapshots listed by a manifest, sorted by time. */
function snapshotsOf(m: RunManifest, dir: string, problems: InputError[]): Snapshot[] {
  const pattern = new RegExp(`^${escapeRegExp(m.name)}_t([0-9eE+.-]+)\\.csv$`);
  const found: Snapshot[] = [];
  for (const out of m.outputs) {
    const match = pattern.exec(out);
    if (!match) continue;
    const time = parseFloat(match[1]!);
    if (!isFinite(time)) continue;
    const path = join(dir, out);
    try {
      if (!existsSync(path)) {
        throw new InputError(path, `listed in ${m.name}_manifest.json but missing`);
      }
      readDensityCsv(path);
      found.push({ time, path });
    } catch (err) {
      if (err instanceof InputError) problems.push(err);
      else throw err;
    }
  }
  found.sort((a, b) => a.time - b.time);
  return found;
}

/** A listed output that must exist and parse under the given table header. */
function checkedTable(
  m: RunManifest,
  dir: string,
  suffix: string,
  header: string[],
  problems: InputError[]
): string | null {
  const fname = `${m.name}${suffix}`;
  if (!m.outputs.includes(fname)) return null;
  const path = join(dir, fname);
  try {
    if (!existsSync(path)) {
      throw new InputError(path, `listed in ${m.name}_manifest.json but missing`);
    }
    readTableCsv(path, header);
    return path;
  } catch (err) {
    if (err instanceof InputError) {
      problems.push(err);
      return null;
    }
    throw err;
  }
}

function scenarioSpecs(m: RunManifest, dir: string, problems: InputError[]): FigureSpec[] {
  const specs: FigureSpec[] = [];
  const snaps = snapshotsOf(m, dir, problems);
  if (snaps.length > 0) {
    specs.push({
      kind: "DensityFamily",
      name: `${m.name}_density`,
      title: `${m.name}: density evolution`,
      subtitle: describeRun(m),
      inputs: snaps.map((s) => s.path),
      legends: snaps.map((s) => `t=${fmt(s.time)}`),
      xLabel: "x",
      yLabel: "p(x,t)",
    });
  }

  const errors = checkedTable(m, dir, "_errors.csv", ["t", "max_abs", "rel_l2"], problems);
  if (errors !== null) {
    specs.push({
      kind: "ErrorVsTime",
      name: `${m.name}_errors`,
      title: `${m.name}: error vs closed form`,
      subtitle: describeRun(m),
      inputs: [errors],
      legends: ["max abs", "rel 2-norm"],
      xLabel: "t",
      yLabel: "error",
      columns: { x: "t", series: ["max_abs", "rel_l2"] },
    });
  }

  const compare = checkedTable(m, dir, "_mc_compare.csv", ["x", "p_pde", "p_mc"], problems);
  if (compare !== null) {
    specs.push({
      kind: "DensityFamily",
      name: `${m.name}_mc_compare`,
      title: `${m.name}: solver vs particle ensemble`,
      subtitle: describeRun(m),
      inputs: [compare],
      legends: ["solver", "particles"],
      xLabel: "x",
      yLabel: "p(x,t_end)",
      columns: { x: "x", series: ["p_pde", "p_mc"] },
    });
  }
  return specs;
}

/**
 * Pick, per tails.csv row, the pure-jump natural run whose final snapshot
 * shows that alpha's tail: largest domain wins, then latest final time.
 */
function tailSpec(
  dir: string,
  manifests: RunManifest[],
  problems: InputError[]
): FigureSpec | null {
  const path = join(dir, "tails.csv");
  let rows;
  try {
    rows = readTableCsv(path, TABLE_HEADERS["tails.csv"]!);
  } catch (err) {
    if (err instanceof InputError) {
      problems.push(err);
      return null;
    }
    throw err;
  }

  const inputs: string[] = [];
  const legends: string[] = [];
  const notes: string[] = [];
  for (const row of rows) {
    const alpha = row["alpha"];
    if (alpha === null || alpha === undefined) {
      problems.push(new InputError(path, "row without an alpha value"));
      continue;
    }
    const candidates = manifests.filter(
      (m) =>
        configString(m, "condition") === "natural" &&
        (configString(m, "drift") ?? "zero") === "zero" &&
        (configNumber(m, "d") ?? 0) === 0 &&
        configNumber(m, "alpha") === alpha
    );
    let best: { L: number; tEnd: number; snap: Snapshot } | null = null;
    for (const m of candidates) {
      const snaps = snapshotsOf(m, dir, problems);
      if (snaps.length === 0) continue;
      const snap = snaps[snaps.length - 1]!;
      const L = configNumber(m, "L") ?? 0;
      const tEnd = configNumber(m, "t_end") ?? snap.time;
      if (
        best === null ||
        L > best.L ||
        (L === best.L && tEnd > best.tEnd)
      ) {
        best = { L, tEnd, snap };
      }
    }
    if (best === null) {
      problems.push(
        new InputError(path, `no natural-condition pure-jump run found for alpha=${fmt(alpha)}`)
      );
      continue;
    }
    inputs.push(best.snap.path);
    legends.push(`alpha=${fmt(alpha)}`);
    const slope = row["slope"];
    const ref = row["reference"];
    if (slope !== null && slope !== undefined && ref !== null && ref !== undefined) {
      notes.push(`alpha=${fmt(alpha)}: slope ${fmt(slope)} (ref ${fmt(ref)})`);
    }
  }
  if (inputs.length === 0) return null;
  return {
    kind: "LogLogTail",
    name: "tails",
    title: "density tails, log-log",
    subtitle: notes.join(";  "),
    inputs,
    legends,
    xLabel: "x",
    yLabel: "p(x)",
  };
}

function fixedTableSpec(dir: string, fname: string, problems: InputError[]): FigureSpec | null {
  const path = join(dir, fname);
  let rows;
  try {
    rows = readTableCsv(path, TABLE_HEADERS[fname]!);
  } catch (err) {
    if (err instanceof InputError) {
      problems.push(err);
      return null;
    }
    throw err;
  }

  if (fname === "threshold_vs_alpha.csv") {
    return {
      kind: "ThresholdCurve",
      name: "threshold_vs_alpha",
      title: "monotone step bound vs alpha",
      subtitle: "dt limit in units of h^alpha",
      inputs: [path],
      legends: ["threshold"],
      xLabel: "alpha",
      yLabel: "threshold",
      columns: { x: "alpha", series: ["threshold"] },
    };
  }

  if (fname === "masscheck.csv") {
    const masses = rows
      .map((r) => (r["mass"] !== null ? `L=${fmt(r["L"] ?? NaN)}: ${r["mass"]}` : null))
      .filter((s): s is string => s !== null);
    return {
      kind: "ConvergenceTable",
      name: "masscheck",
      title: "mass defect vs domain half-width",
      subtitle: masses.join(";  "),
      inputs: [path],
      legends: ["1 - mass"],
      xLabel: "L",
      yLabel: "defect",
      columns: { x: "L", series: ["defect"] },
    };
  }

  const stem = fname.replace(/\.csv$/, "");
  const orders = rows
    .map((r) => (r["order"] !== null ? fmt(r["order"]!) : null))
    .filter((s): s is string => s !== null);
  return {
    kind: "ConvergenceTable",
    name: stem,
    title:
      stem === "table2"
        ? "refinement with domain extrapolation"
        : "pointwise refinement",
    subtitle: orders.length > 0 ? `observed orders: ${orders.join(", ")}` : "",
    inputs: [path],
    legends: ["error"],
    xLabel: "h",
    yLabel: "error",
    columns: { x: "h", series: ["error"] },
  };
}

/** Scan a run directory; figures it can support plus per-file problems. */
export function scanRunDir(dir: string): ScanResult {
  let entries: string[];
  try {
    entries = readdirSync(dir);
  } catch (err) {
    throw new InputError(dir, `cannot read directory (${(err as Error).message})`);
  }
  entries.sort();

  const problems: InputError[] = [];
  const manifests: RunManifest[] = [];
  for (const entry of entries) {
    if (!entry.endsWith("_manifest.json")) continue;
    try {
      manifests.push(readManifest(join(dir, entry)));
    } catch (err) {
      if (err instanceof InputError) problems.push(err);
      else throw err;
    }
  }

  const specs: FigureSpec[] = [];
  for (const m of manifests) {
    specs.push(...scenarioSpecs(m, dir, problems));
  }
  for (const fname of ["table1.csv", "table2.csv", "masscheck.csv"]) {
    if (entries.includes(fname)) {
      const spec = fixedTableSpec(dir, fname, problems);
      if (spec !== null) specs.push(spec);
    }
  }
  if (entries.includes("tails.csv")) {
    const spec = tailSpec(dir, manifests, problems);
    if (spec !== null) specs.push(spec);
  }
  if (entries.includes("threshold_vs_alpha.csv")) {
    const spec = fixedTableSpec(dir, "threshold_vs_alpha.csv", problems);
    if (spec !== null) specs.push(spec);
  }

  specs.sort((a, b) => (a.name < b.name ? -1 : a.name > b.name ? 1 : 0));
  // The tail figure revalidates snapshots, so the same defect can surface twice.
  const seen = new Set<string>();
  const unique = problems.filter((p) => {
    if (seen.has(p.message)) return false;
    seen.add(p.message);
    return true;
  });
  return { specs, problems: unique };
}
