export { parseRun, loadRun, mergeRuns, num, type ParsedRun } from "./csv.js";
export {
  renderSvg,
  renderPanel,
  linearScale,
  niceTicks,
  color,
  type Panel,
  type Series,
  type Point,
} from "./svg.js";
export { BUILDERS, renderFigure, type Rendered } from "./render.js";
export type { Figure, FigureBuilder } from "./figures/common.js";
