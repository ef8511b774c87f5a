#!/usr/bin/env node
/** render_figs --spec <file.json>
 *
 * The spec file holds one figure description or an array of them; input
 * CSV and output SVG paths are resolved relative to the spec file.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { dirname, resolve } from "node:path";

import { parseSweepCsv } from "./csv.js";
import { loadFigureSpecs } from "./figspec.js";
import { renderFigure } from "./render.js";

const VERSION = "0.1.0";

function usage(): string {
  return "usage: render_figs --spec <figures.json> [--spec <more.json> ...]";
}

export function main(argv: string[]): number {
  const specPaths: string[] = [];
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    if (a === "--spec") {
      const p = argv[++i];
      if (!p) {
        console.error(usage());
        return 64;
      }
      specPaths.push(p);
    } else if (a === "--version") {
      console.log(VERSION);
      return 0;
    } else if (a === "--help" || a === "-h") {
      console.log(usage());
      return 0;
    } else {
      console.error(`unknown argument '${a}'\n${usage()}`);
      return 64;
    }
  }
  if (specPaths.length === 0) {
    console.error(usage());
    return 64;
  }
  try {
    for (const specPath of specPaths) {
      const base = dirname(resolve(specPath));
      for (const spec of loadFigureSpecs(specPath)) {
        const table = parseSweepCsv(
          readFileSync(resolve(base, spec.input), "utf8"),
        );
        const svg = renderFigure(spec, table);
        const outPath = resolve(base, spec.output);
        writeFileSync(outPath, svg);
        console.log(`${spec.kind}: ${outPath}`);
      }
    }
  } catch (err) {
    console.error(err instanceof Error ? err.message : String(err));
    return 1;
  }
  return 0;
}

process.exitCode = main(process.argv.slice(2));
