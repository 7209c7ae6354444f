/**
 * Strict reader for the resilience-sweep CSV.
 *
 * The harness writes exactly these columns, in this order; anything else is
 * rejected with a column diff rather than guessed at. Figures silently built
 * from a near-miss schema are worse than no figures.
 */

import Papa from "papaparse";

export const EXPECTED_COLUMNS = [
  "n",
  "p",
  "alpha",
  "adversary",
  "mode",
  "trials",
  "successes",
  "unconfirmed",
  "wilson_lo",
  "wilson_hi",
  "mean_ms",
] as const;

export type ColumnName = (typeof EXPECTED_COLUMNS)[number];

const NUMERIC_COLUMNS: ColumnName[] = [
  "n",
  "p",
  "alpha",
  "trials",
  "successes",
  "unconfirmed",
  "wilson_lo",
  "wilson_hi",
  "mean_ms",
];

export interface SweepRow {
  n: number;
  p: number;
  alpha: number;
  adversary: string;
  mode: string;
  trials: number;
  successes: number;
  unconfirmed: number;
  wilson_lo: number;
  wilson_hi: number;
  mean_ms: number;
}

export class SchemaError extends Error {}

function describeDiff(actual: string[]): string {
  const expected = new Set<string>(EXPECTED_COLUMNS);
  const seen = new Set(actual);
  const missing = EXPECTED_COLUMNS.filter((c) => !seen.has(c));
  const unexpected = actual.filter((c) => !expected.has(c));
  const parts: string[] = [];
  if (missing.length) parts.push(`missing: ${missing.join(", ")}`);
  if (unexpected.length) parts.push(`unexpected: ${unexpected.join(", ")}`);
  if (!parts.length) {
    parts.push(
      `column order ${actual.join(",")} != ${EXPECTED_COLUMNS.join(",")}`,
    );
  }
  return parts.join("; ");
}

/** Parse sweep CSV text, enforcing the schema exactly. */
export function parseSweepCsv(text: string): SweepRow[] {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  const fields = parsed.meta.fields ?? [];
  const exact =
    fields.length === EXPECTED_COLUMNS.length &&
    fields.every((f, i) => f === EXPECTED_COLUMNS[i]);
  if (!exact) {
    throw new SchemaError(`schema mismatch - ${describeDiff(fields)}`);
  }
  if (parsed.data.length === 0) {
    throw new SchemaError("no rows");
  }

  return parsed.data.map((rec, idx) => {
    const row: Record<string, number | string> = {};
    for (const col of EXPECTED_COLUMNS) {
      const raw = rec[col];
      if (NUMERIC_COLUMNS.includes(col)) {
        const v = Number(raw);
        if (raw === "" || raw === undefined || !Number.isFinite(v)) {
          throw new SchemaError(
            `row ${idx + 2}: column ${col} is not a number (got ${JSON.stringify(raw)})`,
          );
        }
        row[col] = v;
      } else {
        row[col] = raw ?? "";
      }
    }
    const typed = row as unknown as SweepRow;
    if (typed.trials < 1 || typed.successes > typed.trials) {
      throw new SchemaError(
        `row ${idx + 2}: successes/trials out of range (${typed.successes}/${typed.trials})`,
      );
    }
    return typed;
  });
}
