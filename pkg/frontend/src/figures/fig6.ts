import { num, type ParsedRun } from "../csv.js";
import { color } from "../svg.js";
import { collect, groupBy, offset, uniqueSorted, type Figure } from "./common.js";
import type { Panel } from "../svg.js";

const CASE_ORDER = ["detuned", "compensated"];

function caseList(rows: Record<string, string>[]): string[] {
  const seen = new Set(rows.map((r) => r.case));
  const known = CASE_ORDER.filter((c) => seen.has(c));
  const rest = [...seen].filter((c) => !CASE_ORDER.includes(c)).sort();
  return [...known, ...rest];
}

/**
 * Community detuning and blind compensation. The spectral panel shows
 * the slow-mode weight per community; the dynamics panel compares
 * readout fidelity before and after the counter-detuning.
 */
export function fig6(run: ParsedRun): Figure {
  const spectralRows = run.rows.filter((r) => r.part === "spectral");
  const dynamicsRows = run.rows.filter((r) => r.part === "dynamics");

  const dws = uniqueSorted(spectralRows.map((r) => num(r, "dw")));
  const couplingSeries = dws.map((dw, i) => {
    const rows = spectralRows.filter((r) => num(r, "dw") === dw);
    return {
      label: `dw = ${dw}`,
      color: color(i),
      points: rows.map((r) => ({
        x: num(r, "community") + offset(i, dws.length, 0.5),
        y: num(r, "coupling"),
      })),
      sourceRows: rows.length,
    };
  });
  const couplingPanel: Panel = {
    title: "Slow-mode weight per community",
    xLabel: "community",
    yLabel: "mode weight",
    series: couplingSeries,
  };

  const cases = caseList(dynamicsRows);
  const dynDws = uniqueSorted(dynamicsRows.map((r) => num(r, "dw")));
  const combos: Array<{ dw: number; kase: string }> = [];
  for (const dw of dynDws) for (const kase of cases) combos.push({ dw, kase });
  const byCombo = groupBy(dynamicsRows, (r) => `${num(r, "dw")}|${r.case}`);
  const dynSeries = combos
    .filter((c) => byCombo.has(`${c.dw}|${c.kase}`))
    .map((c, i, all) => {
      const rows = byCombo.get(`${c.dw}|${c.kase}`)!;
      return {
        label: `dw = ${c.dw}, ${c.kase}`,
        color: color(i),
        points: rows.map((r) => ({
          x: num(r, "mode") + offset(i, all.length, 0.5),
          y: num(r, "f_ideal"),
        })),
        sourceRows: rows.length,
      };
    });
  const dynPanel: Panel = {
    title: "Readout fidelity, detuned vs compensated",
    xLabel: "mode",
    yLabel: "fidelity",
    series: dynSeries,
  };

  return collect([couplingPanel, dynPanel]);
}
