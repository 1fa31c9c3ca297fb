import { num, type ParsedRun } from "../csv.js";
import { color } from "../svg.js";
import { collect, groupBy, offset, uniqueSorted, type Figure } from "./common.js";

const CASE_ORDER = ["noiseless", "link_loss", "detuned_moderate", "detuned_large"];

/**
 * Surviving entanglement after distributing one half of a two-mode
 * squeezed pair. One series per noise case, one point per CSV row.
 */
export function fig7(run: ParsedRun): Figure {
  const byCase = groupBy(run.rows, (r) => r.case);
  const seen = [...byCase.keys()];
  const cases = [
    ...CASE_ORDER.filter((c) => seen.includes(c)),
    ...seen.filter((c) => !CASE_ORDER.includes(c)).sort(),
  ];
  const modes = uniqueSorted(run.rows.map((r) => num(r, "mode")));
  const series = cases.map((kase, i) => {
    const rows = byCase.get(kase)!;
    return {
      label: kase.replace("_", " "),
      color: color(i),
      points: rows.map((r) => ({
        x: num(r, "mode") + offset(i, cases.length, 0.5),
        y: num(r, "en_fraction"),
      })),
      sourceRows: rows.length,
    };
  });
  return collect([
    {
      title: "Entanglement fraction by mode",
      xLabel: "mode",
      yLabel: "surviving fraction",
      series,
      xTicks: modes.map((m) => ({ value: m, label: String(m) })),
    },
  ]);
}
