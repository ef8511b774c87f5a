import assert from "node:assert/strict";
import { readFileSync } from "node:fs";
import test from "node:test";

import { parseSweepCsv } from "../src/csv.js";
import { analyticCrossings } from "../src/figspec.js";
import { renderFigure } from "../src/render.js";
import { fixture } from "./helpers.js";

const staircase = () =>
  parseSweepCsv(readFileSync(fixture("staircase_n5.csv"), "utf8"));
const lambdaLine = () =>
  parseSweepCsv(readFileSync(fixture("lines_lambda_n5.csv"), "utf8"));
const plane = () =>
  parseSweepCsv(readFileSync(fixture("plane_n5.csv"), "utf8"));
const extensivity = () =>
  parseSweepCsv(readFileSync(fixture("extensivity.csv"), "utf8"));

function markers(svg: string): number[] {
  return [...svg.matchAll(/data-marker="([^"]+)"/g)].map((m) => Number(m[1]));
}

test("analytic crossing markers for five qubits", () => {
  assert.deepEqual(analyticCrossings(5), [0.25, 0.5]);
  assert.deepEqual(analyticCrossings(2), [1]);
});

test("staircase carries markers at the analytic crossings", () => {
  const svg = renderFigure(
    { input: "", output: "", kind: "staircase" },
    staircase(),
  );
  assert.ok(svg.startsWith("<svg"));
  assert.deepEqual(markers(svg), [0.25, 0.5]);
  // one step path per correlation order plus the total
  const paths = svg.match(/<path /g) ?? [];
  assert.equal(paths.length, 5);
  assert.ok(svg.includes("η/N"));
});

test("lines-lambda renders the requested series", () => {
  const svg = renderFigure(
    { input: "", output: "", kind: "lines-lambda", columns: ["I_2", "I_5"] },
    lambdaLine(),
  );
  const paths = svg.match(/<path /g) ?? [];
  assert.equal(paths.length, 2);
  assert.ok(svg.includes("I_2") && svg.includes("I_5"));
  assert.ok(svg.includes("λ/√N"));
});

test("heatmap renders one cell per grid point plus a color bar", () => {
  const svg = renderFigure(
    { input: "", output: "", kind: "heatmap", columns: ["I1"] },
    plane(),
  );
  const rects = svg.match(/<rect /g) ?? [];
  // background + 21*21 cells + 48 color-bar steps + frame
  assert.ok(rects.length >= 21 * 21 + 48);
});

test("qfi surface divides by the qubit count", () => {
  const svg = renderFigure(
    { input: "", output: "", kind: "qfi-surface" },
    plane(),
  );
  assert.ok(svg.includes("f_max/N"));
});

test("global entanglement staircase uses E_G columns and markers", () => {
  const svg = renderFigure(
    { input: "", output: "", kind: "global-ent" },
    staircase(),
  );
  assert.deepEqual(markers(svg), [0.25, 0.5]);
  assert.ok(svg.includes("E_G_1"));
  assert.ok(svg.includes("E_G_4"));
});

test("extensivity renders one curve per system size", () => {
  const svg = renderFigure(
    { input: "", output: "", kind: "extensivity" },
    extensivity(),
  );
  assert.deepEqual(markers(svg), [0.5]);
  assert.ok(svg.includes("N = 4") && svg.includes("N = 8"));
});

test("explicit markers override the analytic ones", () => {
  const svg = renderFigure(
    { input: "", output: "", kind: "staircase", markers: [0.3] },
    staircase(),
  );
  assert.deepEqual(markers(svg), [0.3]);
});

test("missing column fails with its name", () => {
  assert.throws(
    () =>
      renderFigure(
        { input: "", output: "", kind: "lines-eta", columns: ["nope"] },
        staircase(),
      ),
    /'nope'/,
  );
});

test("heatmap refuses a line sweep", () => {
  assert.throws(
    () =>
      renderFigure({ input: "", output: "", kind: "heatmap" }, staircase()),
    /2-d grid/,
  );
});

test("rendering is deterministic", () => {
  const spec = { input: "", output: "", kind: "staircase" as const };
  assert.equal(renderFigure(spec, staircase()), renderFigure(spec, staircase()));
});
