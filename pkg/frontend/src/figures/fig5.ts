import { num, type ParsedRun } from "../csv.js";
import { color } from "../svg.js";
import { collect, groupBy, offset, uniqueSorted, type Figure } from "./common.js";
import type { Panel, Series } from "../svg.js";

/**
 * Single-node detuning: spectral signature, estimator quality, and the
 * fidelity cost at the nominal readout time.
 */
export function fig5(run: ParsedRun): Figure {
  const spectralRows = run.rows.filter((r) => r.part === "spectral");
  const dynamicsRows = run.rows.filter((r) => r.part === "dynamics");

  const shiftSeries: Series = {
    label: "realizations",
    color: color(0),
    points: spectralRows.map((r) => ({ x: num(r, "dw"), y: num(r, "omega0_shift") })),
    sourceRows: spectralRows.length,
  };
  const shiftPanel: Panel = {
    title: "Slow-mode shift vs detuning",
    xLabel: "detuning dw",
    yLabel: "slow-mode shift",
    series: [shiftSeries],
  };

  const estPoints = spectralRows.map((r) => ({
    x: 1 + num(r, "dw"),
    y: num(r, "est_omega"),
  }));
  const xs = estPoints.map((p) => p.x);
  const lo = xs.length > 0 ? Math.min(...xs) : 0;
  const hi = xs.length > 0 ? Math.max(...xs) : 1;
  const estPanel: Panel = {
    title: "Estimated node frequency",
    xLabel: "true frequency",
    yLabel: "estimate",
    series: [
      {
        label: "estimates",
        color: color(1),
        points: estPoints,
        sourceRows: spectralRows.length,
      },
      {
        label: "ideal",
        color: "#888888",
        line: true,
        dashed: true,
        markers: false,
        points: [
          { x: lo, y: lo },
          { x: hi, y: hi },
        ],
        sourceRows: 0,
      },
    ],
  };

  const byMode = groupBy(dynamicsRows, (r) => r.mode);
  const modes = uniqueSorted([...byMode.keys()].map(Number));
  const dynSeries = modes.map((mode, i) => {
    const rows = byMode.get(String(mode))!;
    return {
      label: `mode ${mode}`,
      color: color(i),
      points: rows.map((r) => ({
        x: num(r, "dw") + offset(i, modes.length, 0.04),
        y: num(r, "f_ideal"),
      })),
      sourceRows: rows.length,
    };
  });
  const dynPanel: Panel = {
    title: "Fidelity at nominal readout",
    xLabel: "detuning dw",
    yLabel: "fidelity",
    series: dynSeries,
  };

  return collect([shiftPanel, estPanel, dynPanel]);
}
