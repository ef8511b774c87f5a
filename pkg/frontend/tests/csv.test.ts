import assert from "node:assert/strict";
import { readFileSync } from "node:fs";
import test from "node:test";

import {
  CsvFormatError,
  SchemaVersionError,
  column,
  inferQubitCount,
  numericColumn,
  parseSweepCsv,
} from "../src/csv.js";
import { fixture } from "./helpers.js";

test("parses a staircase sweep file", () => {
  const table = parseSweepCsv(readFileSync(fixture("staircase_n5.csv"), "utf8"));
  assert.equal(table.version, "0.1.0");
  assert.equal(table.units, "nats");
  assert.equal(table.rows.length, 121);
  assert.ok(table.columns.includes("I_5"));
  assert.equal(inferQubitCount(table), 5);
  const etas = numericColumn(table, "eta_over_N");
  assert.equal(etas[0], 0);
  assert.equal(etas[etas.length - 1], 0.6);
});

test("empty fields become null", () => {
  const text =
    "# units=nats couplings=scaled version=0.1.0\n" +
    "lambda_over_sqrtN,eta_over_N,S_1,E_G_1\n" +
    "0.0,0.1,0.3,\n";
  const table = parseSweepCsv(text);
  assert.deepEqual(column(table, "E_G_1"), [null]);
});

test("rejects wrong schema version", () => {
  const text =
    "# units=nats couplings=scaled version=9.9.9\n" +
    "lambda_over_sqrtN\n0.0\n";
  assert.throws(() => parseSweepCsv(text), SchemaVersionError);
});

test("rejects missing schema line", () => {
  assert.throws(
    () => parseSweepCsv("lambda_over_sqrtN\n0.0\n"),
    CsvFormatError,
  );
});

test("rejects empty grid", () => {
  const text =
    "# units=nats couplings=scaled version=0.1.0\n" +
    "lambda_over_sqrtN,eta_over_N\n";
  assert.throws(() => parseSweepCsv(text), /empty grid/);
});

test("rejects non-numeric fields and ragged rows", () => {
  const head =
    "# units=nats couplings=scaled version=0.1.0\nlambda_over_sqrtN,I1\n";
  assert.throws(() => parseSweepCsv(head + "0.0,abc\n"), /non-numeric/);
  assert.throws(() => parseSweepCsv(head + "0.0\n"), /fields/);
});

test("missing column is a named error", () => {
  const table = parseSweepCsv(readFileSync(fixture("staircase_n5.csv"), "utf8"));
  assert.throws(() => column(table, "bogus"), /'bogus'/);
});
