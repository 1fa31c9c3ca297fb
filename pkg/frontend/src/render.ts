import { mergeRuns, type ParsedRun } from "./csv.js";
import { renderSvg, type Series } from "./svg.js";
import type { Figure, FigureBuilder } from "./figures/common.js";
import { fig2 } from "./figures/fig2.js";
import { fig3 } from "./figures/fig3.js";
import { fig4 } from "./figures/fig4.js";
import { fig5 } from "./figures/fig5.js";
import { fig6 } from "./figures/fig6.js";
import { fig7 } from "./figures/fig7.js";
import { appA } from "./figures/appA.js";

export const BUILDERS: Record<string, FigureBuilder> = {
  fig2,
  fig3,
  fig4,
  fig5,
  fig6,
  fig7,
  appA,
};

export interface Rendered {
  svg: string;
  figure: Figure;
  series: Series[];
}

/** Build the figure for a scenario from one or more parsed runs. */
export function renderFigure(scenario: string, runs: ParsedRun[]): Rendered {
  const builder = BUILDERS[scenario];
  if (!builder) {
    const known = Object.keys(BUILDERS).join(", ");
    throw new Error(`unknown scenario '${scenario}' (expected one of ${known})`);
  }
  const run = mergeRuns(runs);
  const fromHeader = run.header.scenario;
  if (fromHeader && fromHeader !== scenario) {
    throw new Error(`input was produced by scenario '${fromHeader}', not '${scenario}'`);
  }
  const figure = builder(run);
  return { svg: renderSvg(figure.panels), figure, series: figure.series };
}
