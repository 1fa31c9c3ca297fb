import { num, type ParsedRun } from "../csv.js";
import { color } from "../svg.js";
import { collect, groupBy, offset, type Figure } from "./common.js";

/**
 * Slow-mode frequency shifts after link removal. One point per CSV row:
 * x is the number of removed links, y the relative shift, one series per
 * (link kind, shift rank).
 */
export function fig2(run: ParsedRun): Figure {
  const groups = groupBy(run.rows, (r) => `${r.link_kind}|${r.rank}`);
  const keys = [...groups.keys()].sort();
  const series = keys.map((key, i) => {
    const [kind, rank] = key.split("|");
    const rows = groups.get(key)!;
    return {
      label: `${kind} rank ${rank}`,
      color: color(i),
      points: rows.map((r) => ({
        x: num(r, "n_removed") + offset(i, keys.length, 0.45),
        y: num(r, "rel_shift"),
      })),
      sourceRows: rows.length,
    };
  });
  return collect([
    {
      title: "Slow-mode shifts from link removal",
      xLabel: "links removed",
      yLabel: "relative frequency shift",
      series,
    },
  ]);
}
