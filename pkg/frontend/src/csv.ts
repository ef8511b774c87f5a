/**
 * Parser for the sweep CSV interface.
 *
 * Files start with `# units=nats couplings=scaled version=<semver>`,
 * followed by a header row and data rows. Empty fields mean "not
 * computed" and parse to null; everything else must be numeric.
 */

export const SUPPORTED_SCHEMA_VERSION = "0.1.0";

export interface SweepTable {
  version: string;
  units: string;
  couplings: string;
  columns: string[];
  rows: (number | null)[][];
}

export class SchemaVersionError extends Error {}
export class CsvFormatError extends Error {}

const META_RE = /^#\s*units=(\S+)\s+couplings=(\S+)\s+version=(\S+)\s*$/;

export function parseSweepCsv(text: string): SweepTable {
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new CsvFormatError("empty file");
  }
  const meta = META_RE.exec(lines[0]);
  if (!meta) {
    throw new CsvFormatError(
      "missing schema line '# units=... couplings=... version=...'",
    );
  }
  const [, units, couplings, version] = meta;
  if (version !== SUPPORTED_SCHEMA_VERSION) {
    throw new SchemaVersionError(
      `CSV schema version ${version} is not supported ` +
        `(expected ${SUPPORTED_SCHEMA_VERSION})`,
    );
  }
  if (lines.length < 2) {
    throw new CsvFormatError("missing header row");
  }
  const columns = lines[1].split(",");
  const rows: (number | null)[][] = [];
  for (let i = 2; i < lines.length; i++) {
    const fields = lines[i].split(",");
    if (fields.length !== columns.length) {
      throw new CsvFormatError(
        `row ${i - 1} has ${fields.length} fields, expected ${columns.length}`,
      );
    }
    rows.push(
      fields.map((f) => {
        if (f === "") return null;
        const v = Number(f);
        if (Number.isNaN(v)) {
          throw new CsvFormatError(`non-numeric field '${f}' in row ${i - 1}`);
        }
        return v;
      }),
    );
  }
  if (rows.length === 0) {
    throw new CsvFormatError("no data rows (empty grid)");
  }
  return { version, units, couplings, columns, rows };
}

export function columnIndex(table: SweepTable, name: string): number {
  const idx = table.columns.indexOf(name);
  if (idx < 0) {
    throw new CsvFormatError(`column '${name}' not present in CSV header`);
  }
  return idx;
}

export function column(table: SweepTable, name: string): (number | null)[] {
  const idx = columnIndex(table, name);
  return table.rows.map((r) => r[idx]);
}

export function numericColumn(table: SweepTable, name: string): number[] {
  return column(table, name).map((v, i) => {
    if (v === null) {
      throw new CsvFormatError(`column '${name}' has an empty value (row ${i + 1})`);
    }
    return v;
  });
}

/** Number of qubits encoded in the header (count of S_k columns). */
export function inferQubitCount(table: SweepTable): number {
  let n = 0;
  for (const c of table.columns) {
    const m = /^S_(\d+)$/.exec(c);
    if (m) n = Math.max(n, Number(m[1]));
  }
  if (n === 0) {
    throw new CsvFormatError("cannot infer qubit count: no S_k columns");
  }
  return n;
}
