import yargs from "yargs";
import { Row, num, okRows, readTable } from "../csv";
import { Pt } from "../marching";
import { Panel, SvgDoc, saveSvg } from "../svg";

/** The solved locus points cover the lower half of the pinch curve
 * (Y <= 0, one point per X, endpoints on the axis).  The full curve is its
 * union with the Y -> -Y mirror image: walk the lower branch left to right,
 * then the mirrored interior points right to left, giving one closed loop. */
export function superpinchLoop(rows: Row[]): Pt[] {
  const lower = rows
    .map((r) => ({ x: num(r, "X"), y: num(r, "Y") }))
    .sort((a, b) => a.x - b.x);
  const upper = lower
    .filter((p) => p.y < 0)
    .map((p) => ({ x: p.x, y: -p.y }))
    .reverse();
  return [...lower, ...upper];
}

export interface PloopFigure {
  svg: string;
  loop: Pt[];
}

export function renderPloop(csvPath: string): PloopFigure {
  const table = readTable(csvPath, ["X", "Y", "status"]);
  const loop = superpinchLoop(okRows(table));

  const xs = loop.map((p) => p.x);
  const ys = loop.map((p) => p.y);
  const x0 = Math.min(...xs);
  const x1 = Math.max(...xs);
  const yMax = Math.max(...ys.map(Math.abs), 0.05);
  const padX = (x1 - x0) * 0.1;

  const width = 520;
  const height = 300;
  const margin = 30;
  const doc = new SvgDoc(width + 2 * margin, height + 2 * margin);
  const panel = new Panel(
    { x0: x0 - padX, x1: x1 + padX, y0: -1.4 * yMax, y1: 1.4 * yMax },
    margin,
    margin,
    width,
    height,
  );
  doc.frame(panel);
  // Y = 0 axis for the mirror symmetry
  doc.polyline(panel, [{ x: x0 - padX, y: 0 }, { x: x1 + padX, y: 0 }], {
    stroke: "#999",
    strokeWidth: 0.6,
    dash: "4 4",
  });
  doc.polyline(panel, loop, { stroke: "black", strokeWidth: 1.5, closed: true });
  return { svg: doc.toString(), loop };
}

export function main(argv: string[]): void {
  const args = yargs(argv)
    .option("in", { type: "string", demandOption: true, describe: "superpinch CSV" })
    .option("out", { type: "string", demandOption: true, describe: "output SVG" })
    .strict()
    .parseSync();
  const fig = renderPloop(args.in);
  saveSvg(args.out, fig.svg);
  console.log(`${args.out}: loop of ${fig.loop.length} vertices`);
}

if (require.main === module) main(process.argv.slice(2));
