import { num, type ParsedRun } from "../csv.js";
import { color } from "../svg.js";
import { collect, groupBy, type Figure } from "./common.js";
import type { Panel } from "../svg.js";

/**
 * Spectrum checks: closed-form agreement for uniform chains, and the
 * size of slow-mode shifts under a single random link removal.
 */
export function appA(run: ParsedRun): Figure {
  const closedRows = run.rows.filter((r) => r.part === "closed_form");
  const robustRows = run.rows.filter((r) => r.part === "robustness");

  const byKind = groupBy(closedRows, (r) => r.kind);
  const kinds = [...byKind.keys()].sort();
  const closedSeries = kinds.map((kind, i) => {
    const rows = byKind.get(kind)!;
    rows.sort((a, b) => num(a, "n") - num(b, "n"));
    return {
      label: kind,
      color: color(i),
      line: true,
      points: rows.map((r) => ({ x: num(r, "n"), y: num(r, "max_abs_err") })),
      sourceRows: rows.length,
    };
  });
  const closedPanel: Panel = {
    title: "Closed-form spectrum error",
    xLabel: "chain length",
    yLabel: "max abs error",
    series: closedSeries,
  };

  const byGroup = groupBy(robustRows, (r) => `${r.kind}|${r.removed_kind}`);
  const groups = [...byGroup.keys()].sort();
  const robustSeries = groups.map((key, i) => {
    const rows = byGroup.get(key)!;
    const [kind, removed] = key.split("|");
    return {
      label: `${kind}, ${removed.replace("_", " ")} cut`,
      color: color(i),
      points: rows.map((r) => ({
        x: num(r, "realization"),
        y: num(r, "max_abs_rel_shift"),
      })),
      sourceRows: rows.length,
    };
  });
  const robustPanel: Panel = {
    title: "Slow-mode shift from one lost link",
    xLabel: "realization",
    yLabel: "max relative shift",
    series: robustSeries,
  };

  return collect([closedPanel, robustPanel]);
}
