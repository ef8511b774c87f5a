import {
  CsvFormatError,
  SweepTable,
  column,
  columnIndex,
  inferQubitCount,
  numericColumn,
} from "./csv.js";
import { FigureSpec, analyticCrossings } from "./figspec.js";
import {
  HEIGHT,
  MARGIN,
  SERIES_COLORS,
  WIDTH,
  colormap,
  document as svgDocument,
  axes,
  extent,
  fmt,
  fmtTick,
  legend,
  linearScale,
  padExtent,
  polyline,
  verticalMarker,
} from "./svg.js";

const X_LABEL_LAMBDA = "λ/√N";
const X_LABEL_ETA = "η/N";

function plotScales(
  xDomain: [number, number],
  yDomain: [number, number],
) {
  const x = linearScale(xDomain, [MARGIN.left, WIDTH - MARGIN.right]);
  const y = linearScale(yDomain, [HEIGHT - MARGIN.bottom, MARGIN.top]);
  return { x, y };
}

function defaultOrderColumns(table: SweepTable): string[] {
  const re = /^I_(\d+)$/;
  const cols = table.columns
    .filter((c) => re.test(c))
    .sort((a, b) => Number(re.exec(a)![1]) - Number(re.exec(b)![1]));
  if (cols.length === 0) {
    throw new CsvFormatError("no correlation-order columns in CSV");
  }
  return [...cols, "I1"];
}

function seriesFigure(
  table: SweepTable,
  spec: FigureSpec,
  xColumn: string,
  xLabel: string,
  opts: { step?: boolean; markers?: number[] } = {},
): string {
  const cols = spec.columns ?? defaultOrderColumns(table);
  for (const c of cols) columnIndex(table, c);
  const xs = numericColumn(table, xColumn);
  const order = xs
    .map((v, i) => [v, i] as [number, number])
    .sort((a, b) => a[0] - b[0])
    .map(([, i]) => i);

  const allY: number[] = [];
  const series = cols.map((c) => {
    const ys = column(table, c);
    const pts: Array<[number, number]> = [];
    for (const i of order) {
      const v = ys[i];
      if (v !== null) {
        pts.push([xs[i], v]);
        allY.push(v);
      }
    }
    return { name: c, pts };
  });
  if (allY.length === 0) {
    throw new CsvFormatError("selected columns contain no values");
  }

  const { x, y } = plotScales(extent(xs), padExtent(extent(allY)));
  const body: string[] = [];
  for (const m of opts.markers ?? []) {
    body.push(verticalMarker(x, y, m));
  }
  series.forEach((s, i) => {
    const color = SERIES_COLORS[i % SERIES_COLORS.length];
    body.push(
      polyline(
        s.pts.map(([px, py]) => [x(px), y(py)]),
        color,
        { step: opts.step },
      ),
    );
  });
  body.push(axes(x, y, xLabel, "nats"));
  body.push(legend(series.map((s, i) => [s.name, SERIES_COLORS[i % SERIES_COLORS.length]])));
  return svgDocument(body.join("\n"), spec.title);
}

function gridAxes(values: number[]): number[] {
  const uniq = [...new Set(values.map((v) => Number(v.toPrecision(12))))];
  return uniq.sort((a, b) => a - b);
}

function heatmapFigure(
  table: SweepTable,
  spec: FigureSpec,
  valueColumn: string,
  valueLabel: string,
  divideByN = false,
): string {
  columnIndex(table, valueColumn);
  const lams = numericColumn(table, "lambda_over_sqrtN");
  const etas = numericColumn(table, "eta_over_N");
  const raw = column(table, valueColumn);
  const scaleDiv = divideByN ? inferQubitCount(table) : 1;

  const xs = gridAxes(lams);
  const ys = gridAxes(etas);
  if (xs.length < 2 || ys.length < 2) {
    throw new CsvFormatError(
      `heatmap needs a 2-d grid, got ${xs.length} x ${ys.length}`,
    );
  }
  const key = (a: number, b: number) =>
    `${a.toPrecision(12)}|${b.toPrecision(12)}`;
  const cell = new Map<string, number>();
  for (let i = 0; i < raw.length; i++) {
    const v = raw[i];
    if (v !== null) cell.set(key(lams[i], etas[i]), v / scaleDiv);
  }
  const vals = [...cell.values()];
  if (vals.length === 0) {
    throw new CsvFormatError(`column '${valueColumn}' contains no values`);
  }
  const [vLo, vHi] = extent(vals);

  const { x, y } = plotScales(
    [xs[0], xs[xs.length - 1]],
    [ys[0], ys[ys.length - 1]],
  );
  const body: string[] = [];
  const dx = (x(xs[1]) - x(xs[0]));
  const dy = Math.abs(y(ys[1]) - y(ys[0]));
  for (const lam of xs) {
    for (const eta of ys) {
      const v = cell.get(key(lam, eta));
      const fill =
        v === undefined
          ? "#dddddd"
          : colormap(vHi > vLo ? (v - vLo) / (vHi - vLo) : 0.5);
      body.push(
        `<rect x="${fmt(x(lam) - dx / 2)}" y="${fmt(y(eta) - dy / 2)}"` +
          ` width="${fmt(dx)}" height="${fmt(dy)}" fill="${fill}"/>`,
      );
    }
  }
  // color bar
  const barX = WIDTH - MARGIN.right + 24;
  const barTop = MARGIN.top;
  const barH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const steps = 48;
  for (let i = 0; i < steps; i++) {
    const t = 1 - i / (steps - 1);
    body.push(
      `<rect x="${barX}" y="${fmt(barTop + (i * barH) / steps)}" width="16"` +
        ` height="${fmt(barH / steps + 0.5)}" fill="${colormap(t)}"/>`,
    );
  }
  body.push(
    `<text x="${barX + 22}" y="${barTop + 10}" font-size="11">${fmtTick(vHi)}</text>`,
    `<text x="${barX + 22}" y="${barTop + barH}" font-size="11">${fmtTick(vLo)}</text>`,
    `<text x="${barX + 8}" y="${barTop - 8}" font-size="12">${valueLabel}</text>`,
  );
  body.push(axes(x, y, X_LABEL_LAMBDA, X_LABEL_ETA));
  return svgDocument(body.join("\n"), spec.title);
}

function extensivityFigure(table: SweepTable, spec: FigureSpec): string {
  for (const c of ["N", "lambda_over_sqrtN", "I1"]) columnIndex(table, c);
  const ns = numericColumn(table, "N");
  const lams = numericColumn(table, "lambda_over_sqrtN");
  const i1 = numericColumn(table, "I1");
  const sizes = gridAxes(ns);
  const body: string[] = [];
  const { x, y } = plotScales(extent(lams), padExtent(extent(i1)));
  for (const m of spec.markers ?? [0.5]) {
    body.push(verticalMarker(x, y, m));
  }
  const entries: Array<[string, string]> = [];
  sizes.forEach((n, si) => {
    const pts: Array<[number, number]> = [];
    for (let i = 0; i < ns.length; i++) {
      if (ns[i] === n) pts.push([x(lams[i]), y(i1[i])]);
    }
    pts.sort((a, b) => a[0] - b[0]);
    const color = SERIES_COLORS[si % SERIES_COLORS.length];
    body.push(polyline(pts, color));
    entries.push([`N = ${n}`, color]);
  });
  body.push(axes(x, y, X_LABEL_LAMBDA, "total correlations (nats)"));
  body.push(legend(entries));
  return svgDocument(body.join("\n"), spec.title);
}

function staircaseMarkers(table: SweepTable, spec: FigureSpec): number[] {
  if (spec.markers) return spec.markers;
  return analyticCrossings(inferQubitCount(table), spec.omega0 ?? 1.0);
}

function globalEntColumns(table: SweepTable): string[] {
  const re = /^E_G_(\d+)$/;
  const cols = table.columns
    .filter((c) => re.test(c))
    .sort((a, b) => Number(re.exec(a)![1]) - Number(re.exec(b)![1]));
  if (cols.length === 0) {
    throw new CsvFormatError("no global-entanglement columns in CSV");
  }
  return cols;
}

export function renderFigure(spec: FigureSpec, table: SweepTable): string {
  switch (spec.kind) {
    case "lines-eta":
      return seriesFigure(table, spec, "eta_over_N", X_LABEL_ETA, {
        markers: spec.markers,
      });
    case "lines-lambda":
      return seriesFigure(table, spec, "lambda_over_sqrtN", X_LABEL_LAMBDA, {
        markers: spec.markers,
      });
    case "staircase":
      return seriesFigure(table, spec, "eta_over_N", X_LABEL_ETA, {
        step: true,
        markers: staircaseMarkers(table, spec),
      });
    case "heatmap":
      return heatmapFigure(
        table,
        spec,
        spec.columns?.[0] ?? "I1",
        spec.columns?.[0] ?? "I1",
      );
    case "qfi-surface":
      return heatmapFigure(table, spec, "f_max", "f_max/N", true);
    case "global-ent":
      return seriesFigure(
        table,
        { ...spec, columns: spec.columns ?? globalEntColumns(table) },
        "eta_over_N",
        X_LABEL_ETA,
        { step: true, markers: staircaseMarkers(table, spec) },
      );
    case "extensivity":
      return extensivityFigure(table, spec);
  }
}
