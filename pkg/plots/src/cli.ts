#!/usr/bin/env node
/**
 * plot_resilience --csv results.csv --group n,p,adversary --out fig.svg
 *
 * Exit codes: 0 on a written figure, 1 for anything wrong (schema mismatch,
 * empty CSV, unreadable file, unsupported format, bad flags).
 */

import { realpathSync } from "node:fs";
import { fileURLToPath } from "node:url";

import yargs from "yargs";

import { plotResilience } from "./figure.js";

export async function main(argv: string[]): Promise<number> {
  let args;
  try {
    args = await yargs(argv)
      .usage("plot_resilience --csv results.csv --group n,p,adversary --out fig.svg")
      .option("csv", { type: "string", demandOption: true, describe: "sweep CSV input" })
      .option("group", {
        type: "string",
        default: "n,p,adversary",
        describe: "comma-separated columns defining one curve each",
      })
      .option("out", { type: "string", demandOption: true, describe: "output figure path" })
      .option("format", {
        type: "string",
        choices: ["svg", "png"] as const,
        describe: "output format (default: from --out extension)",
      })
      .strict()
      .exitProcess(false)
      .fail((msg, err) => {
        throw err ?? new Error(msg);
      })
      .parseAsync();
  } catch (err) {
    console.error(`plot_resilience: ${err instanceof Error ? err.message : err}`);
    return 1;
  }

  const format =
    (args.format as "svg" | "png" | undefined) ??
    (args.out.toLowerCase().endsWith(".png") ? "png" : "svg");
  try {
    const { series } = plotResilience({
      csvPath: args.csv,
      groupBy: args.group.split(",").map((s) => s.trim()).filter(Boolean),
      outPath: args.out,
      format,
    });
    console.error(`wrote ${args.out} (${series.length} series)`);
    return 0;
  } catch (err) {
    console.error(`plot_resilience: ${err instanceof Error ? err.message : err}`);
    return 1;
  }
}

const invokedDirectly = (() => {
  try {
    return realpathSync(process.argv[1]) === fileURLToPath(import.meta.url);
  } catch {
    return false;
  }
})();

if (invokedDirectly) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
