#!/usr/bin/env node
import { writeFile } from "node:fs/promises";
import yargs from "yargs";
import { loadRun } from "./csv.js";
import { BUILDERS, renderFigure } from "./render.js";

/** Run the CLI with explicit argv; returns the process exit code. */
export async function runCli(argv: string[]): Promise<number> {
  const parser = yargs(argv)
    .command("render", "render a scenario CSV to an SVG figure", (y) =>
      y
        .option("scenario", {
          type: "string",
          demandOption: true,
          choices: Object.keys(BUILDERS),
          describe: "which figure to build",
        })
        .option("in", {
          type: "string",
          array: true,
          demandOption: true,
          describe: "input CSV path(s) from the experiment runner",
        })
        .option("out", {
          type: "string",
          demandOption: true,
          describe: "output SVG path",
        }),
    )
    .demandCommand(1, "expected the render command")
    .strict()
    .exitProcess(false)
    .fail((msg, err) => {
      throw err ?? new Error(msg);
    });

  let args;
  try {
    args = await parser.parse();
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 2;
  }

  try {
    const runs = await Promise.all((args.in as string[]).map(loadRun));
    const { svg, series } = renderFigure(args.scenario as string, runs);
    await writeFile(args.out as string, svg, "utf8");
    const points = series.reduce((acc, s) => acc + s.points.length, 0);
    process.stderr.write(
      `wrote ${args.out}: ${series.length} series, ${points} points\n`,
    );
    return 0;
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 1;
  }
}

const entry = process.argv[1] ?? "";
if (entry.endsWith("cli.js") || entry.endsWith("oscnet-render")) {
  runCli(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
