import yargs from "yargs";
import { num, okRows, readTable } from "../csv";
import { Pt } from "../marching";
import { Panel, SvgDoc, saveSvg } from "../svg";

export interface DeltoidFigure {
  svg: string;
  curve: Pt[];
}

/** Trace curve from the deltoid dataset, drawn inside the radius-3 circle
 * that bounds traces of unit-determinant boundary isometries. */
export function renderDeltoid(csvPath: string): DeltoidFigure {
  const table = readTable(csvPath, ["alpha", "re", "im", "status"]);
  const rows = okRows(table).sort((a, b) => num(a, "alpha") - num(b, "alpha"));
  const curve = rows.map((r) => ({ x: num(r, "re"), y: num(r, "im") }));

  const size = 480;
  const margin = 20;
  const doc = new SvgDoc(size + 2 * margin, size + 2 * margin);
  const panel = new Panel({ x0: -4, x1: 4, y0: -4, y1: 4 }, margin, margin, size, size);
  doc.frame(panel);
  doc.circle(panel, 0, 0, 3, { stroke: "#888", dash: "5 4" });
  doc.polyline(panel, curve, { stroke: "black", strokeWidth: 1.5, closed: true });
  return { svg: doc.toString(), curve };
}

export function main(argv: string[]): void {
  const args = yargs(argv)
    .option("in", { type: "string", demandOption: true, describe: "deltoid CSV" })
    .option("out", { type: "string", demandOption: true, describe: "output SVG" })
    .strict()
    .parseSync();
  const fig = renderDeltoid(args.in);
  saveSvg(args.out, fig.svg);
  console.log(`${args.out}: ${fig.curve.length} curve points`);
}

if (require.main === module) main(process.argv.slice(2));
