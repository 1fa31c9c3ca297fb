import { describe, expect, it } from "vitest";
import { formatTick, linearScale, niceTicks, renderSvg, type Panel } from "../src/svg.js";

describe("linearScale", () => {
  it("maps domain endpoints onto the range", () => {
    const s = linearScale([0, 10], [100, 300]);
    expect(s(0)).toBe(100);
    expect(s(10)).toBe(300);
    expect(s(5)).toBe(200);
  });

  it("handles a degenerate single-value domain", () => {
    const s = linearScale([4, 4], [0, 100]);
    expect(s(4)).toBeGreaterThan(0);
    expect(s(4)).toBeLessThan(100);
  });
});

describe("niceTicks", () => {
  it("uses round steps and stays inside the interval", () => {
    expect(niceTicks(0, 10, 5)).toEqual([0, 2, 4, 6, 8, 10]);
    for (const t of niceTicks(-0.31, 0.29, 5)) {
      expect(t).toBeGreaterThanOrEqual(-0.31);
      expect(t).toBeLessThanOrEqual(0.29);
    }
  });

  it("returns ascending values", () => {
    const ticks = niceTicks(0.013, 97.2, 6);
    const sorted = [...ticks].sort((a, b) => a - b);
    expect(ticks).toEqual(sorted);
  });
});

describe("formatTick", () => {
  it("keeps small magnitudes readable and compacts extremes", () => {
    expect(formatTick(0)).toBe("0");
    expect(formatTick(0.25)).toBe("0.25");
    expect(formatTick(123456)).toBe("1e+5");
  });
});

function samplePanel(): Panel {
  return {
    title: "a <b> title",
    xLabel: "x",
    yLabel: "y",
    series: [
      {
        label: "scatter",
        color: "#2266aa",
        points: [
          { x: 0, y: 1 },
          { x: 1, y: 2 },
          { x: 2, y: 1.5 },
        ],
        sourceRows: 3,
      },
      {
        label: "guide",
        color: "#888888",
        line: true,
        dashed: true,
        markers: false,
        points: [
          { x: 0, y: 1 },
          { x: 2, y: 1 },
        ],
        sourceRows: 0,
      },
    ],
  };
}

describe("renderSvg", () => {
  it("produces one marker circle per visible data point", () => {
    const svg = renderSvg([samplePanel()]);
    const markers = svg.match(/class="pt"/g) ?? [];
    expect(markers).toHaveLength(3);
  });

  it("escapes text and draws the dashed guide", () => {
    const svg = renderSvg([samplePanel()]);
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).toContain("a &lt;b&gt; title");
    expect(svg).toContain("stroke-dasharray");
    expect(svg).toContain(">scatter</text>");
    expect(svg).toContain(">guide</text>");
  });

  it("lays panels out side by side", () => {
    const svg = renderSvg([samplePanel(), samplePanel()]);
    const width = svg.match(/width="(\d+)"/);
    expect(width && Number(width[1])).toBe(720);
  });
});
