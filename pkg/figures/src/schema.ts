/**
 * Readers for the solver CLI's output formats: density CSVs (`x,p`),
 * table CSVs with a fixed header, and run manifests (JSON).
 */

import { readFileSync } from "node:fs";
import { basename } from "node:path";
import Papa from "papaparse";

export interface DensityCurve {
  x: number[];
  p: number[];
}

/** One row of a table CSV; empty cells (unavailable orders) become null. */
export type TableRow = Record<string, number | null>;

export interface RunManifest {
  name: string;
  config: Record<string, unknown>;
  outputs: string[];
  path: string;
}

export class InputError extends Error {
  readonly file: string;

  constructor(file: string, message: string) {
    super(`${basename(file)}: ${message}`);
    this.file = file;
  }
}

function parseCsv(path: string): Papa.ParseResult<Record<string, unknown>> {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (err) {
    throw new InputError(path, `cannot read file (${(err as Error).message})`);
  }
  const parsed = Papa.parse<Record<string, unknown>>(text, {
    header: true,
    dynamicTyping: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0]!;
    throw new InputError(path, `malformed CSV (${first.message})`);
  }
  return parsed;
}

function requireHeader(path: string, got: string[] | undefined, want: string[]): void {
  const actual = (got ?? []).join(",");
  if (actual !== want.join(",")) {
    throw new InputError(path, `expected header "${want.join(",")}", got "${actual}"`);
  }
}

/** Parse a density CSV (strict `x,p` header, finite numeric rows). */
export function readDensityCsv(path: string): DensityCurve {
  const parsed = parseCsv(path);
  requireHeader(path, parsed.meta.fields, ["x", "p"]);
  const x: number[] = [];
  const p: number[] = [];
  for (const row of parsed.data) {
    const xv = row["x"];
    const pv = row["p"];
    if (typeof xv !== "number" || typeof pv !== "number" || !isFinite(xv) || !isFinite(pv)) {
      throw new InputError(path, `non-numeric density row near x=${String(xv)}`);
    }
    x.push(xv);
    p.push(pv);
  }
  if (x.length === 0) {
    throw new InputError(path, "no data rows");
  }
  return { x, p };
}

/**
 * Parse a table CSV with exactly the given header. Empty cells map to null
 * (the solver writes unavailable convergence orders as empty fields).
 */
export function readTableCsv(path: string, header: string[]): TableRow[] {
  const parsed = parseCsv(path);
  requireHeader(path, parsed.meta.fields, header);
  const rows: TableRow[] = [];
  for (const raw of parsed.data) {
    const row: TableRow = {};
    for (const col of header) {
      const v = raw[col];
      if (v === null || v === undefined || v === "") {
        row[col] = null;
      } else if (typeof v === "number" && isFinite(v)) {
        row[col] = v;
      } else {
        throw new InputError(path, `non-numeric value ${JSON.stringify(v)} in column "${col}"`);
      }
    }
    rows.push(row);
  }
  if (rows.length === 0) {
    throw new InputError(path, "no data rows");
  }
  return rows;
}

/** Pull a required numeric column out of parsed table rows. */
export function column(rows: TableRow[], name: string): (number | null)[] {
  return rows.map((r) => r[name] ?? null);
}

/** Parse a run manifest and check the fields the figure tools rely on. */
export function readManifest(path: string): RunManifest {
  let doc: unknown;
  try {
    doc = JSON.parse(readFileSync(path, "utf8"));
  } catch (err) {
    throw new InputError(path, `not valid JSON (${(err as Error).message})`);
  }
  if (typeof doc !== "object" || doc === null) {
    throw new InputError(path, "manifest is not an object");
  }
  const m = doc as Record<string, unknown>;
  if (typeof m["name"] !== "string" || m["name"].length === 0) {
    throw new InputError(path, 'manifest missing string "name"');
  }
  if (!Array.isArray(m["outputs"]) || !m["outputs"].every((o) => typeof o === "string")) {
    throw new InputError(path, 'manifest missing string list "outputs"');
  }
  const config =
    typeof m["config"] === "object" && m["config"] !== null
      ? (m["config"] as Record<string, unknown>)
      : {};
  return { name: m["name"], config, outputs: m["outputs"] as string[], path };
}

/** Read a numeric config entry, or undefined when absent/non-numeric. */
export function configNumber(manifest: RunManifest, key: string): number | undefined {
  const v = manifest.config[key];
  return typeof v === "number" && isFinite(v) ? v : undefined;
}

export function configString(manifest: RunManifest, key: string): string | undefined {
  const v = manifest.config[key];
  return typeof v === "string" ? v : undefined;
}
