#!/usr/bin/env node
/**
 * make-figures --in <run dir> --out <dir>
 *
 * Reads a solver run directory and writes one SVG per recognized figure.
 * Inputs are never modified. Exit codes: 0 all recognized inputs rendered,
 * 1 nothing recognized or some input was missing/malformed.
 */

import { realpathSync } from "node:fs";
import { pathToFileURL } from "node:url";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { scanRunDir } from "./scan.js";
import { writeFigure } from "./render.js";
import { InputError } from "./schema.js";

export function main(argv: string[]): number {
  let args: { in: string; out: string };
  try {
    args = yargs(argv)
      .usage("$0 --in <run dir> --out <dir>")
      .option("in", {
        type: "string",
        describe: "directory holding solver CSV/manifest outputs",
        demandOption: true,
      })
      .option("out", {
        type: "string",
        describe: "directory to write SVG figures into",
        demandOption: true,
      })
      .strict()
      .exitProcess(false)
      .parseSync();
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }

  let result;
  try {
    result = scanRunDir(args.in);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }

  for (const problem of result.problems) {
    console.error(`problem: ${problem.message}`);
  }
  if (result.specs.length === 0) {
    console.error(`error: no recognized solver outputs in ${args.in}`);
    return 1;
  }

  let failures = 0;
  for (const spec of result.specs) {
    try {
      const path = writeFigure(spec, args.out);
      console.log(`wrote ${path} (${spec.kind})`);
    } catch (err) {
      failures += 1;
      if (err instanceof InputError) {
        console.error(`problem: ${err.message}`);
      } else {
        console.error(`error rendering ${spec.name}: ${(err as Error).message}`);
      }
    }
  }
  return failures > 0 || result.problems.length > 0 ? 1 : 0;
}

function invokedDirectly(): boolean {
  const script = process.argv[1];
  if (script === undefined) return false;
  try {
    return import.meta.url === pathToFileURL(realpathSync(script)).href;
  } catch {
    return false;
  }
}

if (invokedDirectly()) {
  process.exit(main(hideBin(process.argv)));
}
