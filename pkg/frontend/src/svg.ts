/** Minimal deterministic SVG scene building: no timestamps, no
 * randomness, fixed-precision coordinates. */

export const WIDTH = 720;
export const HEIGHT = 480;
export const MARGIN = { left: 72, right: 132, top: 40, bottom: 56 };

export const SERIES_COLORS = [
  "#1b6aa5",
  "#d1495b",
  "#3c8d53",
  "#e0a426",
  "#7d5ba6",
  "#48a9a6",
  "#b16953",
  "#5c6b73",
];

export function fmt(v: number): string {
  if (!Number.isFinite(v)) return "0";
  const s = v.toFixed(3);
  return s === "-0.000" ? "0.000" : s;
}

export function fmtTick(v: number): string {
  const a = Math.abs(v);
  if (a !== 0 && (a < 1e-3 || a >= 1e4)) return v.toExponential(1);
  const s = Number(v.toPrecision(6));
  return String(s);
}

export function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export interface Scale {
  (v: number): number;
  domain: [number, number];
}

export function linearScale(
  domain: [number, number],
  range: [number, number],
): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 === 0 ? 1 : d1 - d0;
  const f = (v: number) => r0 + ((v - d0) / span) * (r1 - r0);
  const scale = f as Scale;
  scale.domain = domain;
  return scale;
}

export function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!Number.isFinite(lo)) return [0, 1];
  if (lo === hi) return [lo - 0.5, hi + 0.5];
  return [lo, hi];
}

export function padExtent([lo, hi]: [number, number], f = 0.05): [number, number] {
  const pad = (hi - lo) * f;
  return [lo - pad, hi + pad];
}

export function ticks([lo, hi]: [number, number], count = 5): number[] {
  const span = hi - lo;
  if (span <= 0) return [lo];
  const step0 = span / count;
  const mag = 10 ** Math.floor(Math.log10(step0));
  const norm = step0 / mag;
  const step = (norm >= 5 ? 5 : norm >= 2 ? 2 : 1) * mag;
  const start = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = start; v <= hi + step * 1e-9; v += step) {
    out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return out;
}

export function polyline(
  pts: Array<[number, number]>,
  stroke: string,
  opts: { width?: number; dash?: string; step?: boolean } = {},
): string {
  if (pts.length === 0) return "";
  const parts: string[] = [`M${fmt(pts[0][0])},${fmt(pts[0][1])}`];
  for (let i = 1; i < pts.length; i++) {
    if (opts.step) {
      parts.push(`H${fmt(pts[i][0])}`);
      parts.push(`V${fmt(pts[i][1])}`);
    } else {
      parts.push(`L${fmt(pts[i][0])},${fmt(pts[i][1])}`);
    }
  }
  const dash = opts.dash ? ` stroke-dasharray="${opts.dash}"` : "";
  return (
    `<path d="${parts.join(" ")}" fill="none" stroke="${stroke}"` +
    ` stroke-width="${opts.width ?? 1.6}"${dash}/>`
  );
}

export function axes(
  x: Scale,
  y: Scale,
  xLabel: string,
  yLabel: string,
): string {
  const parts: string[] = [];
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right;
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  parts.push(
    `<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}"` +
      ` fill="none" stroke="#333" stroke-width="1"/>`,
  );
  for (const t of ticks(x.domain)) {
    const px = x(t);
    parts.push(
      `<line x1="${fmt(px)}" y1="${y0}" x2="${fmt(px)}" y2="${y0 + 5}" stroke="#333"/>`,
      `<text x="${fmt(px)}" y="${y0 + 20}" text-anchor="middle" font-size="12">${fmtTick(t)}</text>`,
    );
  }
  for (const t of ticks(y.domain)) {
    const py = y(t);
    parts.push(
      `<line x1="${x0 - 5}" y1="${fmt(py)}" x2="${x0}" y2="${fmt(py)}" stroke="#333"/>`,
      `<text x="${x0 - 9}" y="${fmt(py + 4)}" text-anchor="end" font-size="12">${fmtTick(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${(x0 + x1) / 2}" y="${HEIGHT - 12}" text-anchor="middle" font-size="14">${escapeXml(xLabel)}</text>`,
    `<text x="18" y="${(y0 + y1) / 2}" text-anchor="middle" font-size="14"` +
      ` transform="rotate(-90 18 ${(y0 + y1) / 2})">${escapeXml(yLabel)}</text>`,
  );
  return parts.join("\n");
}

export function legend(entries: Array<[string, string]>): string {
  const x = WIDTH - MARGIN.right + 12;
  let y = MARGIN.top + 10;
  const parts: string[] = [];
  for (const [label, color] of entries) {
    parts.push(
      `<line x1="${x}" y1="${y - 4}" x2="${x + 22}" y2="${y - 4}" stroke="${color}" stroke-width="2.5"/>`,
      `<text x="${x + 28}" y="${y}" font-size="12">${escapeXml(label)}</text>`,
    );
    y += 18;
  }
  return parts.join("\n");
}

/** Dashed vertical marker with a machine-readable data attribute. */
export function verticalMarker(x: Scale, y: Scale, at: number): string {
  const px = x(at);
  const y0 = HEIGHT - MARGIN.bottom;
  const y1 = MARGIN.top;
  return (
    `<line data-marker="${Number(at.toPrecision(8))}" x1="${fmt(px)}" y1="${y0}"` +
    ` x2="${fmt(px)}" y2="${y1}" stroke="#888" stroke-width="1" stroke-dasharray="5,4"/>`
  );
}

/** Perceptually ordered colormap (dark blue to yellow), 9 anchors. */
const STOPS: Array<[number, number, number]> = [
  [68, 1, 84],
  [71, 44, 122],
  [59, 81, 139],
  [44, 113, 142],
  [33, 144, 141],
  [39, 173, 129],
  [92, 200, 99],
  [170, 220, 50],
  [253, 231, 37],
];

export function colormap(t: number): string {
  const c = Math.min(1, Math.max(0, t)) * (STOPS.length - 1);
  const i = Math.min(STOPS.length - 2, Math.floor(c));
  const f = c - i;
  const mix = (a: number, b: number) => Math.round(a + (b - a) * f);
  const [r, g, b] = [0, 1, 2].map((k) => mix(STOPS[i][k], STOPS[i + 1][k]));
  return `rgb(${r},${g},${b})`;
}

export function document(body: string, title?: string): string {
  const head = title
    ? `<text x="${WIDTH / 2}" y="24" text-anchor="middle" font-size="15" font-weight="bold">${escapeXml(title)}</text>\n`
    : "";
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}"` +
    ` viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="Helvetica, Arial, sans-serif">\n` +
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>\n` +
    head +
    body +
    `\n</svg>\n`
  );
}
