import yargs from "yargs";
import { Row, num, okRows, readTable } from "../csv";
import { Pt } from "../marching";
import { Panel, SvgDoc, Window, saveSvg } from "../svg";

export const FAMILY_COLORS: Record<string, string> = {
  bending: "red",
  finite: "black",
  ideal_triangle: "blue",
  modular_one: "green",
  modular_two: "magenta",
};

interface P3 {
  x: number;
  y: number;
  z: number;
}

type Project = (p: P3) => Pt;

/** Orthographic view by azimuth/elevation, world z up. */
function viewer(azimuthDeg: number, elevationDeg: number): Project {
  const az = (azimuthDeg * Math.PI) / 180;
  const el = (elevationDeg * Math.PI) / 180;
  const ca = Math.cos(az);
  const sa = Math.sin(az);
  const ce = Math.cos(el);
  const se = Math.sin(el);
  return (p) => ({
    x: -p.x * sa + p.y * ca,
    y: -(p.x * ca + p.y * sa) * se + p.z * ce,
  });
}

function angles(r: Row): P3 {
  return { x: num(r, "theta"), y: num(r, "phi"), z: num(r, "psi") };
}

function extent(pts: Pt[], pad: number): Window {
  let x0 = Infinity;
  let x1 = -Infinity;
  let y0 = Infinity;
  let y1 = -Infinity;
  for (const p of pts) {
    x0 = Math.min(x0, p.x);
    x1 = Math.max(x1, p.x);
    y0 = Math.min(y0, p.y);
    y1 = Math.max(y1, p.y);
  }
  const dx = (x1 - x0) * pad;
  const dy = (y1 - y0) * pad;
  return { x0: x0 - dx, x1: x1 + dx, y0: y0 - dy, y1: y1 + dy };
}

export interface SurfaceFigure {
  svg: string;
  pointCount: number;
  familyKinds: string[];
}

/** Two orthographic views of the parabolicity surface point set with the
 * five family segments overlaid in their conventional colors. */
export function renderSurface(surfacePath: string, familyPath: string): SurfaceFigure {
  const surface = readTable(surfacePath, [
    "theta",
    "phi",
    "psi",
    "f_J1J2inv",
    "f_comm_re_deficit",
    "status",
  ]);
  const family = readTable(familyPath, ["kind", "param", "theta", "phi", "psi", "status"]);

  const surfacePts = okRows(surface).map(angles);
  const byKind = new Map<string, P3[]>();
  for (const r of okRows(family)) {
    const list = byKind.get(r.kind);
    if (list) list.push(angles(r));
    else byKind.set(r.kind, [angles(r)]);
  }

  const views: [string, Project][] = [
    ["view 1", viewer(-55, 22)],
    ["view 2", viewer(20, 10)],
  ];
  const panelSize = 360;
  const margin = 30;
  const doc = new SvgDoc(2 * panelSize + 3 * margin, panelSize + 2 * margin + 60);

  views.forEach(([label, project], i) => {
    const projected = surfacePts.map(project);
    const window = extent(projected, 0.08);
    const panel = new Panel(
      window,
      margin + i * (panelSize + margin),
      margin,
      panelSize,
      panelSize,
    );
    doc.frame(panel, label);
    for (const p of projected) doc.dot(panel, p, 1, "black", 0.3);
    for (const [kind, pts] of byKind) {
      doc.polyline(panel, pts.map(project), {
        stroke: FAMILY_COLORS[kind] ?? "orange",
        strokeWidth: 2,
      });
    }
  });
  doc.legend(
    margin,
    panelSize + margin + 30,
    [...byKind.keys()].map((k) => [k, FAMILY_COLORS[k] ?? "orange"]),
  );
  return {
    svg: doc.toString(),
    pointCount: surfacePts.length,
    familyKinds: [...byKind.keys()],
  };
}

export function main(argv: string[]): void {
  const args = yargs(argv)
    .option("in", { type: "string", demandOption: true, describe: "surface CSV" })
    .option("families", { type: "string", demandOption: true, describe: "family CSV" })
    .option("out", { type: "string", demandOption: true, describe: "output SVG" })
    .strict()
    .parseSync();
  const fig = renderSurface(args.in, args.families);
  saveSvg(args.out, fig.svg);
  console.log(
    `${args.out}: ${fig.pointCount} surface points, families ${fig.familyKinds.join(", ")}`,
  );
}

if (require.main === module) main(process.argv.slice(2));
