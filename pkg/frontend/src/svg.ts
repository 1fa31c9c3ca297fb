export interface Point {
  x: number;
  y: number;
}

export interface Series {
  label: string;
  points: Point[];
  color: string;
  /** connect points with a line (points still get markers unless markers=false) */
  line?: boolean;
  dashed?: boolean;
  markers?: boolean;
  /** how many CSV rows this series consumed; derived guides use 0 */
  sourceRows: number;
}

export interface Panel {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  /** explicit tick positions with labels, for category axes */
  xTicks?: { value: number; label: string }[];
}

export const PALETTE = [
  "#2266aa",
  "#cc5511",
  "#228855",
  "#8844aa",
  "#aa3344",
  "#667788",
  "#b8860b",
  "#116677",
  "#994466",
  "#557722",
  "#333333",
  "#777777",
];

export function color(i: number): string {
  return PALETTE[i % PALETTE.length];
}

export interface Scale {
  (v: number): number;
  ticks: number[];
}

export function linearScale(domain: [number, number], range: [number, number], tickCount = 5): Scale {
  let [d0, d1] = domain;
  if (d0 === d1) {
    // degenerate domain: pad so the single value sits mid-range
    d0 -= d0 === 0 ? 1 : Math.abs(d0) * 0.5;
    d1 += d1 === 0 ? 1 : Math.abs(d1) * 0.5;
  }
  const [r0, r1] = range;
  const scale = ((v: number) => r0 + ((v - d0) / (d1 - d0)) * (r1 - r0)) as Scale;
  scale.ticks = niceTicks(d0, d1, tickCount);
  return scale;
}

export function niceTicks(lo: number, hi: number, count: number): number[] {
  const span = hi - lo;
  const rawStep = span / Math.max(1, count);
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (m * mag >= rawStep) {
      step = m * mag;
      break;
    }
  }
  const start = Math.ceil(lo / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

export function formatTick(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(0);
  return String(Number(v.toPrecision(4)));
}

function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

const PANEL_W = 360;
const PANEL_H = 300;
const MARGIN = { top: 36, right: 16, bottom: 46, left: 58 };
const LEGEND_ROW = 16;

function dataBounds(series: Series[]): { x: [number, number]; y: [number, number] } {
  let x0 = Infinity, x1 = -Infinity, y0 = Infinity, y1 = -Infinity;
  for (const s of series) {
    for (const p of s.points) {
      x0 = Math.min(x0, p.x); x1 = Math.max(x1, p.x);
      y0 = Math.min(y0, p.y); y1 = Math.max(y1, p.y);
    }
  }
  if (!Number.isFinite(x0)) { x0 = 0; x1 = 1; y0 = 0; y1 = 1; }
  const padY = (y1 - y0) * 0.06 || Math.abs(y1) * 0.1 || 0.5;
  const padX = (x1 - x0) * 0.04 || 0.5;
  return { x: [x0 - padX, x1 + padX], y: [y0 - padY, y1 + padY] };
}

export function renderPanel(panel: Panel, ox: number, oy: number): string {
  const left = ox + MARGIN.left;
  const top = oy + MARGIN.top;
  const width = PANEL_W - MARGIN.left - MARGIN.right;
  const legendRows = Math.ceil(panel.series.length / 2);
  const height = PANEL_H - MARGIN.top - MARGIN.bottom - legendRows * LEGEND_ROW;
  const bounds = dataBounds(panel.series);
  const sx = linearScale(bounds.x, [left, left + width]);
  const sy = linearScale(bounds.y, [top + height, top]);

  const parts: string[] = [];
  parts.push(`<text x="${ox + PANEL_W / 2}" y="${oy + 18}" text-anchor="middle" class="title">${escapeXml(panel.title)}</text>`);
  parts.push(`<rect x="${left}" y="${top}" width="${width}" height="${height}" fill="none" stroke="#444" stroke-width="1"/>`);

  const xTicks = panel.xTicks ?? sx.ticks.map((v) => ({ value: v, label: formatTick(v) }));
  for (const t of xTicks) {
    if (t.value < bounds.x[0] || t.value > bounds.x[1]) continue;
    const px = sx(t.value);
    parts.push(`<line x1="${px.toFixed(1)}" y1="${top + height}" x2="${px.toFixed(1)}" y2="${top + height + 4}" stroke="#444"/>`);
    parts.push(`<text x="${px.toFixed(1)}" y="${top + height + 16}" text-anchor="middle" class="tick">${escapeXml(t.label)}</text>`);
  }
  for (const v of sy.ticks) {
    if (v < bounds.y[0] || v > bounds.y[1]) continue;
    const py = sy(v);
    parts.push(`<line x1="${left - 4}" y1="${py.toFixed(1)}" x2="${left}" y2="${py.toFixed(1)}" stroke="#444"/>`);
    parts.push(`<text x="${left - 7}" y="${(py + 3).toFixed(1)}" text-anchor="end" class="tick">${formatTick(v)}</text>`);
  }
  parts.push(`<text x="${left + width / 2}" y="${top + height + 32}" text-anchor="middle" class="label">${escapeXml(panel.xLabel)}</text>`);
  parts.push(`<text transform="translate(${ox + 14},${top + height / 2}) rotate(-90)" text-anchor="middle" class="label">${escapeXml(panel.yLabel)}</text>`);

  for (const s of panel.series) {
    if (s.line && s.points.length > 1) {
      const d = s.points.map((p) => `${sx(p.x).toFixed(1)},${sy(p.y).toFixed(1)}`).join(" ");
      const dash = s.dashed ? ' stroke-dasharray="5,4"' : "";
      parts.push(`<polyline points="${d}" fill="none" stroke="${s.color}" stroke-width="1.3"${dash}/>`);
    }
    if (s.markers !== false) {
      for (const p of s.points) {
        parts.push(`<circle class="pt" cx="${sx(p.x).toFixed(1)}" cy="${sy(p.y).toFixed(1)}" r="2.6" fill="${s.color}" fill-opacity="0.75"/>`);
      }
    }
  }

  panel.series.forEach((s, i) => {
    const lx = left + (i % 2) * (width / 2);
    const ly = top + height + 42 + Math.floor(i / 2) * LEGEND_ROW;
    parts.push(`<circle cx="${lx}" cy="${ly - 3}" r="3.5" fill="${s.color}"/>`);
    parts.push(`<text x="${lx + 8}" y="${ly}" class="tick">${escapeXml(s.label)}</text>`);
  });
  return parts.join("\n");
}

/** Assemble panels into one horizontal SVG strip. */
export function renderSvg(panels: Panel[]): string {
  const maxLegend = Math.max(...panels.map((p) => Math.ceil(p.series.length / 2)), 1);
  const height = PANEL_H + maxLegend * LEGEND_ROW;
  const width = panels.length * PANEL_W;
  const body = panels.map((p, i) => renderPanel(p, i * PANEL_W, 0)).join("\n");
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    "<style>text{font-family:sans-serif}.title{font-size:13px;font-weight:bold}.label{font-size:12px}.tick{font-size:10px}</style>",
    `<rect width="${width}" height="${height}" fill="white"/>`,
    body,
    "</svg>",
  ].join("\n");
}
