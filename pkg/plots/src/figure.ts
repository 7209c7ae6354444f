/**
 * Figure assembly: sweep rows -> grouped series -> deterministic SVG.
 *
 * The SVG is built by hand so that identical CSV gives byte-identical
 * output: one curve per group, a shaded Wilson band per curve, and a dashed
 * vertical reference where the deletion fraction equals one half.
 */

import { readFileSync, writeFileSync } from "node:fs";

import { EXPECTED_COLUMNS, SchemaError, SweepRow, parseSweepCsv } from "./schema.js";

export interface FigureSpec {
  csvPath: string;
  groupBy: string[];
  outPath: string;
  format: "svg" | "png";
}

export interface SeriesPoint {
  alpha: number;
  rate: number;
  lo: number;
  hi: number;
}

export interface Series {
  key: string;
  points: SeriesPoint[];
}

const WIDTH = 640;
const HEIGHT = 400;
const MARGIN = { left: 62, right: 200, top: 24, bottom: 48 };
const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#7f7f7f",
];

/** One series per distinct value combination of the group-by columns. */
export function groupSeries(rows: SweepRow[], groupBy: string[]): Series[] {
  const known = new Set<string>(EXPECTED_COLUMNS);
  const bad = groupBy.filter((k) => !known.has(k));
  if (!groupBy.length || bad.length) {
    throw new SchemaError(
      bad.length
        ? `unknown group column(s): ${bad.join(", ")} (have: ${EXPECTED_COLUMNS.join(", ")})`
        : "group-by needs at least one column",
    );
  }

  const buckets = new Map<string, SweepRow[]>();
  for (const row of rows) {
    const key = groupBy
      .map((k) => `${k}=${(row as unknown as Record<string, unknown>)[k]}`)
      .join(" ");
    const bucket = buckets.get(key);
    if (bucket) bucket.push(row);
    else buckets.set(key, [row]);
  }

  return [...buckets.entries()]
    .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
    .map(([key, members]) => ({
      key,
      points: members
        .map((r) => ({
          alpha: r.alpha,
          rate: r.successes / r.trials,
          lo: r.wilson_lo,
          hi: r.wilson_hi,
        }))
        .sort((u, v) => u.alpha - v.alpha),
    }));
}

const fmt = (v: number): string => {
  const s = v.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
};

const tickLabel = (v: number): string => String(parseFloat(v.toFixed(4)));

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Render grouped series into a standalone SVG document. */
export function renderSvg(series: Series[]): string {
  if (!series.length) throw new SchemaError("no rows");

  const alphas = series.flatMap((s) => s.points.map((p) => p.alpha));
  let lo = Math.min(0.5, ...alphas);
  let hi = Math.max(0.5, ...alphas);
  if (lo === hi) {
    lo -= 0.05;
    hi += 0.05;
  }
  const pad = 0.04 * (hi - lo);
  lo -= pad;
  hi += pad;

  const innerW = WIDTH - MARGIN.left - MARGIN.right;
  const innerH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const x = (v: number) => MARGIN.left + ((v - lo) / (hi - lo)) * innerW;
  const y = (v: number) => MARGIN.top + (1 - v) * innerH;

  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif" font-size="12">`,
  );
  out.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);

  // axes and gridlines
  for (const t of [0, 0.25, 0.5, 0.75, 1]) {
    out.push(
      `<line class="grid" x1="${fmt(MARGIN.left)}" y1="${fmt(y(t))}" x2="${fmt(WIDTH - MARGIN.right)}" y2="${fmt(y(t))}" stroke="#dddddd"/>`,
    );
    out.push(
      `<text class="ytick" x="${fmt(MARGIN.left - 8)}" y="${fmt(y(t) + 4)}" text-anchor="end">${tickLabel(t)}</text>`,
    );
  }
  const distinct = [...new Set(alphas)].sort((a, b) => a - b);
  const ticks =
    distinct.length <= 8
      ? distinct
      : Array.from({ length: 6 }, (_, i) => lo + ((hi - lo) * i) / 5);
  for (const t of ticks) {
    out.push(
      `<line class="xtick" x1="${fmt(x(t))}" y1="${fmt(HEIGHT - MARGIN.bottom)}" x2="${fmt(x(t))}" y2="${fmt(HEIGHT - MARGIN.bottom + 5)}" stroke="#333333"/>`,
    );
    out.push(
      `<text x="${fmt(x(t))}" y="${fmt(HEIGHT - MARGIN.bottom + 18)}" text-anchor="middle">${tickLabel(t)}</text>`,
    );
  }
  out.push(
    `<line class="axis" x1="${fmt(MARGIN.left)}" y1="${fmt(HEIGHT - MARGIN.bottom)}" x2="${fmt(WIDTH - MARGIN.right)}" y2="${fmt(HEIGHT - MARGIN.bottom)}" stroke="#333333"/>`,
  );
  out.push(
    `<line class="axis" x1="${fmt(MARGIN.left)}" y1="${fmt(MARGIN.top)}" x2="${fmt(MARGIN.left)}" y2="${fmt(HEIGHT - MARGIN.bottom)}" stroke="#333333"/>`,
  );
  out.push(
    `<text x="${fmt(MARGIN.left + innerW / 2)}" y="${fmt(HEIGHT - 10)}" text-anchor="middle">deletion fraction alpha</text>`,
  );
  out.push(
    `<text x="16" y="${fmt(MARGIN.top + innerH / 2)}" text-anchor="middle" transform="rotate(-90 16 ${fmt(MARGIN.top + innerH / 2)})">success probability</text>`,
  );

  // reference line at one half
  out.push(
    `<line class="ref" x1="${fmt(x(0.5))}" y1="${fmt(MARGIN.top)}" x2="${fmt(x(0.5))}" y2="${fmt(HEIGHT - MARGIN.bottom)}" stroke="#888888" stroke-dasharray="5,4"/>`,
  );
  out.push(
    `<text x="${fmt(x(0.5) + 4)}" y="${fmt(MARGIN.top + 12)}" fill="#666666">alpha = 0.5</text>`,
  );

  series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    const upper = s.points.map((p) => `${fmt(x(p.alpha))},${fmt(y(p.hi))}`);
    const lower = [...s.points]
      .reverse()
      .map((p) => `${fmt(x(p.alpha))},${fmt(y(p.lo))}`);
    out.push(
      `<polygon class="band" points="${[...upper, ...lower].join(" ")}" fill="${color}" fill-opacity="0.15" stroke="none"/>`,
    );
    const line = s.points.map((p) => `${fmt(x(p.alpha))},${fmt(y(p.rate))}`);
    out.push(
      `<polyline class="curve" points="${line.join(" ")}" fill="none" stroke="${color}" stroke-width="1.8"/>`,
    );
    for (const p of s.points) {
      out.push(
        `<circle class="dot" cx="${fmt(x(p.alpha))}" cy="${fmt(y(p.rate))}" r="2.5" fill="${color}"/>`,
      );
    }
    const ly = MARGIN.top + 14 + i * 18;
    out.push(
      `<rect class="swatch" x="${fmt(WIDTH - MARGIN.right + 12)}" y="${fmt(ly - 9)}" width="12" height="12" fill="${color}"/>`,
    );
    out.push(
      `<text class="label" x="${fmt(WIDTH - MARGIN.right + 30)}" y="${fmt(ly + 1)}">${esc(s.key)}</text>`,
    );
  });

  out.push("</svg>");
  return out.join("\n") + "\n";
}

/** Read the CSV, build the figure, write it. Returns what was drawn. */
export function plotResilience(spec: FigureSpec): {
  series: Series[];
  svg: string;
} {
  if (spec.format !== "svg") {
    throw new SchemaError(
      "png output is not supported; write svg and rasterize externally",
    );
  }
  const rows = parseSweepCsv(readFileSync(spec.csvPath, "utf8"));
  const series = groupSeries(rows, spec.groupBy);
  const svg = renderSvg(series);
  writeFileSync(spec.outPath, svg);
  return { series, svg };
}
