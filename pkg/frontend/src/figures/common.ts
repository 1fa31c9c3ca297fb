import type { ParsedRun } from "../csv.js";
import type { Panel, Series } from "../svg.js";

export interface Figure {
  panels: Panel[];
  /** flat list of every series across panels, for count checks */
  series: Series[];
}

export type FigureBuilder = (run: ParsedRun) => Figure;

export function groupBy<T>(items: T[], key: (item: T) => string): Map<string, T[]> {
  const out = new Map<string, T[]>();
  for (const item of items) {
    const k = key(item);
    const bucket = out.get(k);
    if (bucket) bucket.push(item);
    else out.set(k, [item]);
  }
  return out;
}

export function uniqueSorted(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

export function mean(values: number[]): number {
  return values.reduce((acc, v) => acc + v, 0) / values.length;
}

export function collect(panels: Panel[]): Figure {
  return { panels, series: panels.flatMap((p) => p.series) };
}

/** small deterministic x offset so categories of different series do not overlap */
export function offset(index: number, count: number, width = 0.3): number {
  if (count <= 1) return 0;
  return -width / 2 + (width * index) / (count - 1);
}
