import { num, type ParsedRun } from "../csv.js";
import { color } from "../svg.js";
import { collect, groupBy, mean, uniqueSorted, type Figure } from "./common.js";
import type { Panel } from "../svg.js";

/**
 * Lost-link detection rate across the network grid. One panel per
 * community count; a rate curve per community size aggregates the hit
 * column over realizations; the chance baseline is drawn dashed.
 */
export function fig4(run: ParsedRun): Figure {
  const panels: Panel[] = [];
  const byCommunities = groupBy(run.rows, (r) => r.communities);
  const communityCounts = uniqueSorted([...byCommunities.keys()].map(Number));
  for (const nc of communityCounts) {
    const rows = byCommunities.get(String(nc))!;
    const sizes = uniqueSorted(rows.map((r) => num(r, "community_size")));
    const series = sizes.map((size, i) => {
      const sizeRows = rows.filter((r) => num(r, "community_size") === size);
      const pBets = uniqueSorted(sizeRows.map((r) => num(r, "p_bet")));
      return {
        label: `size ${size}`,
        color: color(i),
        line: true,
        points: pBets.map((p) => {
          const cell = sizeRows.filter((r) => num(r, "p_bet") === p);
          return { x: p, y: mean(cell.map((r) => num(r, "hit"))) };
        }),
        sourceRows: sizeRows.length,
      };
    });
    const pBets = uniqueSorted(rows.map((r) => num(r, "p_bet")));
    series.push({
      label: "chance",
      color: "#888888",
      line: true,
      dashed: true,
      markers: false,
      points: pBets.map((p) => ({ x: p, y: num(rows[0], "baseline") })),
      sourceRows: 0,
    } as (typeof series)[number]);
    panels.push({
      title: `${nc} communities`,
      xLabel: "p_bet",
      yLabel: "identification rate",
      series,
    });
  }
  return collect(panels);
}
