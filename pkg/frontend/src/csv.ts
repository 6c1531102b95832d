import fs from "fs";
import Papa from "papaparse";

export class MissingColumn extends Error {
  constructor(path: string, columns: string[]) {
    super(`${path}: missing column(s) ${columns.join(", ")}`);
    this.name = "MissingColumn";
  }
}

export class EmptyDataset extends Error {
  constructor(path: string) {
    super(`${path}: no data rows`);
    this.name = "EmptyDataset";
  }
}

export type Row = Record<string, string>;

export interface Table {
  path: string;
  columns: string[];
  rows: Row[];
}

/** Parse a CSV produced by the su21 CLI and check it has the columns a
 * figure needs.  Cells stay strings; use num() for numeric columns. */
export function readTable(path: string, required: string[]): Table {
  const text = fs.readFileSync(path, "utf-8");
  const parsed = Papa.parse<Row>(text, { header: true, skipEmptyLines: true });
  const columns = parsed.meta.fields ?? [];
  const missing = required.filter((c) => !columns.includes(c));
  if (missing.length > 0) throw new MissingColumn(path, missing);
  if (parsed.data.length === 0) throw new EmptyDataset(path);
  return { path, columns, rows: parsed.data };
}

export function num(row: Row, column: string): number {
  const v = Number(row[column]);
  if (Number.isNaN(v)) {
    throw new Error(`non-numeric value ${JSON.stringify(row[column])} in column ${column}`);
  }
  return v;
}

/** Rows the generator marked "ok"; flagged rows carry a reason instead. */
export function okRows(table: Table): Row[] {
  return table.rows.filter((r) => r.status === "ok");
}
