import { existsSync, mkdtempSync, readdirSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, describe, expect, it } from "vitest";
import { FIGURE_HEIGHT, FIGURE_WIDTH, buildOption, renderSvg, writeFigure } from "../src/render.js";
import { FigureSpec, scanRunDir } from "../src/scan.js";

const FIXTURE = fileURLToPath(new URL("./fixtures/rundir", import.meta.url));
const scratch = mkdtempSync(join(tmpdir(), "figrender-"));

afterAll(() => {
  rmSync(scratch, { recursive: true, force: true });
});

const { specs, problems } = scanRunDir(FIXTURE);
const byName = new Map(specs.map((s) => [s.name, s]));

function spec(name: string): FigureSpec {
  const found = byName.get(name);
  if (found === undefined) throw new Error(`no fixture spec named ${name}`);
  return found;
}

type Series = { name: string; data: [number, number][] }[];

it("fixture scan is clean", () => {
  expect(problems).toEqual([]);
});

describe("buildOption", () => {
  it("step-bound curve: linear axes, decreasing from about 1 to about 1/2", () => {
    const option = buildOption(spec("threshold_vs_alpha")) as {
      xAxis: { type: string };
      yAxis: { type: string; max: number };
      series: Series;
    };
    expect(option.xAxis.type).toBe("value");
    expect(option.yAxis.type).toBe("value");
    expect(option.yAxis.max).toBe(1.05);
    const points = option.series[0]!.data;
    expect(points.length).toBe(39);
    expect(points[0]![1]).toBeGreaterThan(0.95);
    expect(points[points.length - 1]![1]).toBeLessThan(0.55);
    for (let i = 1; i < points.length; i++) {
      expect(points[i]![1]).toBeLessThan(points[i - 1]![1]);
    }
  });

  it("tail figure: base-10 log axes, positive right-tail points only", () => {
    const option = buildOption(spec("tails")) as {
      xAxis: { type: string };
      yAxis: { type: string };
      series: Series;
    };
    expect(option.xAxis.type).toBe("log");
    expect(option.yAxis.type).toBe("log");
    expect(option.series.length).toBe(3);
    for (const s of option.series) {
      expect(s.data.length).toBeGreaterThan(10);
      for (const [x, y] of s.data) {
        expect(x).toBeGreaterThan(0);
        expect(y).toBeGreaterThan(0);
      }
    }
    const names = option.series.map((s) => s.name);
    expect(names).toEqual(["alpha=0.5", "alpha=1", "alpha=1.5"]);
  });

  it("heavier tails sit higher: tail density grows with smaller alpha", () => {
    const option = buildOption(spec("tails")) as { series: Series };
    const last = (name: string) => {
      const s = option.series.find((q) => q.name === name)!;
      return s.data[s.data.length - 1]![1];
    };
    expect(last("alpha=0.5")).toBeGreaterThan(last("alpha=1"));
    expect(last("alpha=1")).toBeGreaterThan(last("alpha=1.5"));
  });

  it("density families keep every node of every snapshot", () => {
    const option = buildOption(spec("cauchy_small_density")) as { series: Series };
    expect(option.series.length).toBe(2);
    for (const s of option.series) {
      expect(s.data.length).toBe(401);
    }
    expect(option.series.map((s) => s.name)).toEqual(["t=0.15", "t=0.2"]);
  });

  it("error history uses a log ordinate", () => {
    const option = buildOption(spec("cauchy_small_errors")) as {
      yAxis: { type: string };
      series: Series;
    };
    expect(option.yAxis.type).toBe("log");
    expect(option.series.map((s) => s.name)).toEqual(["max abs", "rel 2-norm"]);
  });

  it("refinement tables go on log-log axes with all rows present", () => {
    const option = buildOption(spec("table1")) as {
      xAxis: { type: string };
      yAxis: { type: string };
      series: Series;
    };
    expect(option.xAxis.type).toBe("log");
    expect(option.yAxis.type).toBe("log");
    expect(option.series[0]!.data.length).toBe(2);
  });

  it("mass defect decreases with domain half-width", () => {
    const option = buildOption(spec("masscheck")) as { series: Series };
    const points = option.series[0]!.data;
    expect(points.length).toBe(5);
    for (let i = 1; i < points.length; i++) {
      expect(points[i]![1]).toBeLessThan(points[i - 1]![1]);
    }
  });

  it("rejects an empty input list", () => {
    const empty: FigureSpec = { ...spec("tails"), inputs: [], legends: [] };
    expect(() => buildOption(empty)).toThrowError(/empty input list/);
  });
});

describe("renderSvg", () => {
  it("renders fixed-size SVG markup with titles and legends", () => {
    const svg = renderSvg(spec("threshold_vs_alpha"));
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).toContain(`width="${FIGURE_WIDTH}"`);
    expect(svg).toContain(`height="${FIGURE_HEIGHT}"`);
    expect(svg).toContain("monotone step bound vs alpha");
  });

  it("is deterministic for a fixed spec", () => {
    const a = renderSvg(spec("tails"));
    const b = renderSvg(spec("tails"));
    expect(a).toBe(b);
    expect(a).toContain("alpha=0.5");
  });
});

describe("writeFigure", () => {
  it("writes <name>.svg and returns the path", () => {
    const path = writeFigure(spec("table1"), scratch);
    expect(path).toBe(join(scratch, "table1.svg"));
    expect(existsSync(path)).toBe(true);
  });

  it("writes nothing when rendering fails", () => {
    const dir = join(scratch, "never-created");
    const empty: FigureSpec = { ...spec("table1"), name: "broken", inputs: [] };
    expect(() => writeFigure(empty, dir)).toThrowError(/empty input list/);
    expect(existsSync(dir)).toBe(false);
  });

  it("never touches its inputs", () => {
    const before = readdirSync(FIXTURE).length;
    writeFigure(spec("masscheck"), scratch);
    expect(readdirSync(FIXTURE).length).toBe(before);
  });
});
