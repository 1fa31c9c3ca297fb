import { num, type ParsedRun } from "../csv.js";
import { color } from "../svg.js";
import { collect, groupBy, offset, type Figure } from "./common.js";

const STATS = ["f_best", "f_top2", "f_mean"] as const;
const CASES = ["lossless", "lossy", "compensated"];

/** Transfer fidelity statistics per mode for each network condition. */
export function fig3(run: ParsedRun): Figure {
  const byCase = groupBy(run.rows, (r) => r.case);
  const cases = CASES.filter((c) => byCase.has(c)).concat(
    [...byCase.keys()].filter((c) => !CASES.includes(c)).sort(),
  );
  const series = [];
  for (let ci = 0; ci < cases.length; ci++) {
    const rows = byCase.get(cases[ci])!;
    for (let si = 0; si < STATS.length; si++) {
      series.push({
        label: `${cases[ci]} ${STATS[si]}`,
        color: color(ci * STATS.length + si),
        points: rows.map((r) => ({
          x: num(r, "mode") + offset(ci, cases.length, 0.5),
          y: num(r, STATS[si]),
        })),
        sourceRows: rows.length,
      });
    }
  }
  return collect([
    {
      title: "Transfer fidelity under loss and compensation",
      xLabel: "normal mode",
      yLabel: "fidelity",
      series,
      xTicks: [1, 2, 3].map((m) => ({ value: m, label: String(m) })),
    },
  ]);
}
