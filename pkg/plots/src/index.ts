export { EXPECTED_COLUMNS, SchemaError, parseSweepCsv } from "./schema.js";
export type { SweepRow } from "./schema.js";
export { groupSeries, plotResilience, renderSvg } from "./figure.js";
export type { FigureSpec, Series, SeriesPoint } from "./figure.js";
export { main } from "./cli.js";
