import fs from "fs";
import os from "os";
import path from "path";
import { describe, expect, it } from "vitest";
import { okRows, readTable } from "../src/csv";
import { Contour, Pt } from "../src/marching";
import { renderDeltoid, main as deltoidMain } from "../src/figures/deltoid";
import { FAMILY_COLORS, renderSurface, main as surfaceMain } from "../src/figures/surface";
import { renderSlices, main as slicesMain } from "../src/figures/slices";
import { renderPloop, superpinchLoop, main as ploopMain } from "../src/figures/ploop";

const FIXTURES = path.join(__dirname, "fixtures");
const fx = (name: string) => path.join(FIXTURES, name);
const SLICES = ["0.000", "0.020", "0.040", "0.044", "0.060", "0.085"].map((p) =>
  fx(`slice_${p}.csv`),
);

function tmpOut(name: string): string {
  return path.join(fs.mkdtempSync(path.join(os.tmpdir(), "figrender-")), name);
}

describe("deltoid figure", () => {
  it("draws one closed curve inside the radius-3 circle", () => {
    const fig = renderDeltoid(fx("deltoid.csv"));
    expect(fig.curve.length).toBe(256);
    for (const p of fig.curve) {
      expect(Math.hypot(p.x, p.y)).toBeLessThanOrEqual(3 + 1e-9);
    }
    expect(fig.svg.startsWith("<svg")).toBe(true);
    expect(fig.svg).toContain("stroke-dasharray"); // the |z| = 3 circle
  });
});

describe("surface figure", () => {
  it("projects the surface twice and overlays all five families", () => {
    const fig = renderSurface(fx("surface.csv"), fx("family.csv"));
    expect(fig.pointCount).toBeGreaterThan(1000);
    expect([...fig.familyKinds].sort()).toEqual([
      "bending",
      "finite",
      "ideal_triangle",
      "modular_one",
      "modular_two",
    ]);
    for (const color of Object.values(FAMILY_COLORS)) {
      expect(fig.svg).toContain(`stroke="${color}"`);
    }
  });
});

function segsCross(a: Pt, b: Pt, c: Pt, d: Pt): boolean {
  const orient = (p: Pt, q: Pt, r: Pt) =>
    Math.sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x));
  return (
    orient(a, b, c) !== orient(a, b, d) &&
    orient(c, d, a) !== orient(c, d, b) &&
    orient(a, b, c) !== 0 &&
    orient(c, d, a) !== 0
  );
}

function contoursCross(black: Contour[], red: Contour[]): boolean {
  for (const cb of black) {
    for (const cr of red) {
      for (let i = 0; i + 1 < cb.points.length; i++) {
        for (let j = 0; j + 1 < cr.points.length; j++) {
          if (segsCross(cb.points[i], cb.points[i + 1], cr.points[j], cr.points[j + 1])) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

describe("slices figure", () => {
  it("extracts both zero curves on every slice", () => {
    const fig = renderSlices(SLICES);
    expect(fig.panels.map((p) => p.psi)).toEqual([0, 0.02, 0.04, 0.044, 0.06, 0.085]);
    for (const panel of fig.panels) {
      expect(panel.black.length).toBeGreaterThan(0);
      expect(panel.red.length).toBeGreaterThan(0);
    }
  });

  it("shows intersecting curves at psi 0.02 and separated ones at 0.085", () => {
    const fig = renderSlices([fx("slice_0.020.csv"), fx("slice_0.085.csv")]);
    expect(contoursCross(fig.panels[0].black, fig.panels[0].red)).toBe(true);
    expect(contoursCross(fig.panels[1].black, fig.panels[1].red)).toBe(false);
  });
});

describe("superpinch loop figure", () => {
  it("builds a single closed contour symmetric under Y -> -Y", () => {
    const rows = okRows(readTable(fx("superpinch.csv"), ["X", "Y", "status"]));
    const loop = superpinchLoop(rows);

    // one vertex per solved point plus the mirrored interior
    const interior = rows.filter((r) => Number(r.Y) < 0).length;
    expect(loop.length).toBe(rows.length + interior);

    // mirror symmetry is exact on the vertex set
    const keys = new Set(loop.map((p) => `${p.x}:${p.y}`));
    for (const p of loop) {
      expect(keys.has(`${p.x}:${-p.y === 0 ? 0 : -p.y}`)).toBe(true);
    }

    // single component: consecutive vertices stay close relative to the
    // loop's diameter, including the wrap-around edge
    const xs = loop.map((p) => p.x);
    const diameter = Math.max(...xs) - Math.min(...xs);
    for (let i = 0; i < loop.length; i++) {
      const a = loop[i];
      const b = loop[(i + 1) % loop.length];
      expect(Math.hypot(a.x - b.x, a.y - b.y)).toBeLessThan(0.2 * diameter);
    }
  });

  it("renders the loop as the only closed path", () => {
    const fig = renderPloop(fx("superpinch.csv"));
    const closedPaths = fig.svg.match(/Z" /g) ?? [];
    expect(closedPaths.length).toBe(1);
  });
});

describe("figure scripts", () => {
  it("deltoid script writes an SVG", () => {
    const out = tmpOut("deltoid.svg");
    deltoidMain(["--in", fx("deltoid.csv"), "--out", out]);
    expect(fs.readFileSync(out, "utf-8").startsWith("<svg")).toBe(true);
  });

  it("surface script writes an SVG", () => {
    const out = tmpOut("surface.svg");
    surfaceMain(["--in", fx("surface.csv"), "--families", fx("family.csv"), "--out", out]);
    expect(fs.readFileSync(out, "utf-8").startsWith("<svg")).toBe(true);
  });

  it("slices script writes an SVG", () => {
    const out = tmpOut("slices.svg");
    slicesMain(["--in", SLICES[0], "--in", SLICES[1], "--out", out]);
    expect(fs.readFileSync(out, "utf-8").startsWith("<svg")).toBe(true);
  });

  it("superpinch script writes an SVG", () => {
    const out = tmpOut("ploop.svg");
    ploopMain(["--in", fx("superpinch.csv"), "--out", out]);
    expect(fs.readFileSync(out, "utf-8").startsWith("<svg")).toBe(true);
  });
});
