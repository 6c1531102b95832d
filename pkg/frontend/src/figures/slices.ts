import yargs from "yargs";
import { num, okRows, readTable } from "../csv";
import { Contour, gridFromRows, levelContours } from "../marching";
import { Panel, SvgDoc, saveSvg } from "../svg";

export interface SlicePanel {
  psi: number;
  /** zero set of f(tr J1J2^-1) */
  black: Contour[];
  /** zero set of f(tr [J1,J2]) */
  red: Contour[];
}

export interface SlicesFigure {
  svg: string;
  panels: SlicePanel[];
}

/** One panel per slice CSV: the two parabolicity curves in the (theta, phi)
 * square at that psi, black for J1J2^-1 and red for the commutator. */
export function renderSlices(csvPaths: string[]): SlicesFigure {
  const panels: SlicePanel[] = csvPaths.map((p) => {
    const table = readTable(p, ["psi", "theta", "phi", "f_J1J2inv", "f_comm", "status"]);
    const rows = okRows(table);
    return {
      psi: num(rows[0], "psi"),
      black: levelContours(gridFromRows(rows, "theta", "phi", "f_J1J2inv")),
      red: levelContours(gridFromRows(rows, "theta", "phi", "f_comm")),
    };
  });

  const cols = 2;
  const rowsN = Math.ceil(panels.length / cols);
  const size = 260;
  const margin = 28;
  const labelBand = 26;
  const doc = new SvgDoc(
    cols * size + (cols + 1) * margin,
    rowsN * (size + labelBand) + (rowsN + 1) * margin,
  );
  const q = Math.PI / 4;

  panels.forEach((sp, idx) => {
    const i = idx % cols;
    const j = Math.floor(idx / cols);
    const panel = new Panel(
      { x0: -q, x1: q, y0: -q, y1: q },
      margin + i * (size + margin),
      margin + j * (size + labelBand + margin),
      size,
      size,
    );
    doc.frame(panel, `psi = ${sp.psi}`);
    for (const c of sp.black) {
      doc.polyline(panel, c.points, { stroke: "black", strokeWidth: 1.2, closed: c.closed });
    }
    for (const c of sp.red) {
      doc.polyline(panel, c.points, { stroke: "red", strokeWidth: 1.2, closed: c.closed });
    }
  });
  return { svg: doc.toString(), panels };
}

export function main(argv: string[]): void {
  const args = yargs(argv)
    .option("in", {
      type: "string",
      array: true,
      demandOption: true,
      describe: "slice CSVs, one per psi value",
    })
    .option("out", { type: "string", demandOption: true, describe: "output SVG" })
    .strict()
    .parseSync();
  const fig = renderSlices(args.in);
  saveSvg(args.out, fig.svg);
  const counts = fig.panels
    .map((p) => `psi=${p.psi}: ${p.black.length} black / ${p.red.length} red`)
    .join("; ");
  console.log(`${args.out}: ${counts}`);
}

if (require.main === module) main(process.argv.slice(2));
