import { readFileSync } from "node:fs";

export const FIGURE_KINDS = [
  "lines-eta",
  "lines-lambda",
  "heatmap",
  "staircase",
  "extensivity",
  "qfi-surface",
  "global-ent",
] as const;

export type FigureKind = (typeof FIGURE_KINDS)[number];

export interface FigureSpec {
  /** path of the input CSV, relative to the spec file's directory */
  input: string;
  kind: FigureKind;
  /** path of the output SVG, relative to the spec file's directory */
  output: string;
  /** series/value columns; kind-dependent defaults when omitted */
  columns?: string[];
  title?: string;
  /** qubit frequency used for analytic crossing markers (default 1) */
  omega0?: number;
  /** explicit marker positions overriding the analytic ones */
  markers?: number[];
}

export class FigureSpecError extends Error {}

export function validateFigureSpec(raw: unknown): FigureSpec {
  if (typeof raw !== "object" || raw === null) {
    throw new FigureSpecError("spec must be a JSON object");
  }
  const spec = raw as Record<string, unknown>;
  for (const field of ["input", "kind", "output"]) {
    if (typeof spec[field] !== "string" || spec[field] === "") {
      throw new FigureSpecError(`spec field '${field}' must be a non-empty string`);
    }
  }
  if (!FIGURE_KINDS.includes(spec.kind as FigureKind)) {
    throw new FigureSpecError(
      `unknown figure kind '${String(spec.kind)}' (expected one of ${FIGURE_KINDS.join(", ")})`,
    );
  }
  if (spec.columns !== undefined) {
    if (
      !Array.isArray(spec.columns) ||
      spec.columns.some((c) => typeof c !== "string")
    ) {
      throw new FigureSpecError("spec field 'columns' must be a string array");
    }
  }
  if (spec.markers !== undefined) {
    if (
      !Array.isArray(spec.markers) ||
      spec.markers.some((m) => typeof m !== "number")
    ) {
      throw new FigureSpecError("spec field 'markers' must be a number array");
    }
  }
  if (spec.omega0 !== undefined && typeof spec.omega0 !== "number") {
    throw new FigureSpecError("spec field 'omega0' must be a number");
  }
  if (spec.title !== undefined && typeof spec.title !== "string") {
    throw new FigureSpecError("spec field 'title' must be a string");
  }
  return spec as unknown as FigureSpec;
}

export function loadFigureSpecs(path: string): FigureSpec[] {
  const text = readFileSync(path, "utf8");
  let parsed: unknown;
  try {
    parsed = JSON.parse(text);
  } catch (err) {
    throw new FigureSpecError(`spec file ${path} is not valid JSON: ${err}`);
  }
  const items = Array.isArray(parsed) ? parsed : [parsed];
  return items.map(validateFigureSpec);
}

/**
 * Crossing couplings of the zero-cavity-coupling model,
 * eta_c/N = -omega0/(2 m_s + 1) for m_s = -N/2 .. -1 (marker
 * decoration; all plotted physics comes from the CSV).
 */
export function analyticCrossings(nQubits: number, omega0 = 1.0): number[] {
  const out: number[] = [];
  for (let m = -nQubits / 2; m <= -1 + 1e-12; m += 1) {
    out.push(-omega0 / (2 * m + 1));
  }
  return out.sort((a, b) => a - b);
}
