import { readFileSync } from "fs";
import Papa from "papaparse";

export interface ParsedRun {
  /** key/value pairs from the '# key = value' header echo */
  header: Record<string, string>;
  columns: string[];
  rows: Record<string, string>[];
}

/**
 * Parse one experiment CSV. The file starts with '# key = value' lines
 * echoing the run configuration, then a column-name row, then data rows.
 */
export function parseRun(text: string): ParsedRun {
  const header: Record<string, string> = {};
  const lines = text.split("\n");
  let body = 0;
  while (body < lines.length && lines[body].startsWith("#")) {
    const line = lines[body].slice(1);
    const eq = line.indexOf("=");
    if (eq >= 0) {
      header[line.slice(0, eq).trim()] = line.slice(eq + 1).trim();
    }
    body++;
  }
  const rest = lines.slice(body).join("\n");
  if (rest.trim() === "") {
    throw new Error("CSV has no column row");
  }
  const parsed = Papa.parse<Record<string, string>>(rest, {
    header: true,
    skipEmptyLines: true,
    comments: "#",
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new Error(`CSV parse error at data row ${first.row}: ${first.message}`);
  }
  const columns = parsed.meta.fields ?? [];
  if (columns.length === 0) {
    throw new Error("CSV has no column row");
  }
  return { header, columns, rows: parsed.data };
}

export function loadRun(path: string): ParsedRun {
  return parseRun(readFileSync(path, "utf8"));
}

/** Merge several runs of the same scenario into one row list. */
export function mergeRuns(runs: ParsedRun[]): ParsedRun {
  if (runs.length === 0) throw new Error("no input runs");
  const first = runs[0];
  for (const run of runs.slice(1)) {
    if (run.columns.join(",") !== first.columns.join(",")) {
      throw new Error("input files have different columns");
    }
    if (run.header.scenario !== first.header.scenario) {
      throw new Error("input files come from different scenarios");
    }
  }
  return {
    header: first.header,
    columns: first.columns,
    rows: runs.flatMap((r) => r.rows),
  };
}

export function num(row: Record<string, string>, column: string): number {
  const value = Number(row[column]);
  if (!Number.isFinite(value)) {
    throw new Error(`column ${column} is not numeric: ${JSON.stringify(row[column])}`);
  }
  return value;
}
