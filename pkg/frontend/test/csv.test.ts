import fs from "fs";
import os from "os";
import path from "path";
import { describe, expect, it } from "vitest";
import { EmptyDataset, MissingColumn, num, okRows, readTable } from "../src/csv";

const FIXTURES = path.join(__dirname, "fixtures");

function tmpCsv(content: string): string {
  const file = path.join(fs.mkdtempSync(path.join(os.tmpdir(), "figrender-")), "t.csv");
  fs.writeFileSync(file, content, "utf-8");
  return file;
}

describe("readTable", () => {
  it("parses a generated dataset", () => {
    const t = readTable(path.join(FIXTURES, "deltoid.csv"), ["alpha", "re", "im", "status"]);
    expect(t.rows.length).toBe(256);
    expect(t.columns).toEqual(["alpha", "re", "im", "status"]);
    expect(num(t.rows[0], "alpha")).toBeCloseTo(-Math.PI, 12);
  });

  it("rejects a dataset lacking a required column", () => {
    expect(() => readTable(path.join(FIXTURES, "deltoid.csv"), ["alpha", "nope"])).toThrow(
      MissingColumn,
    );
  });

  it("rejects a header-only file", () => {
    const file = tmpCsv("a,b,status\n");
    expect(() => readTable(file, ["a", "b"])).toThrow(EmptyDataset);
  });

  it("filters flagged rows", () => {
    const file = tmpCsv("x,status\n1,ok\n2,f residual 3.2e-09\n3,ok\n");
    const t = readTable(file, ["x", "status"]);
    expect(t.rows.length).toBe(3);
    expect(okRows(t).map((r) => r.x)).toEqual(["1", "3"]);
  });

  it("refuses non-numeric cells on numeric access", () => {
    const file = tmpCsv("x,status\noops,ok\n");
    const t = readTable(file, ["x"]);
    expect(() => num(t.rows[0], "x")).toThrow(/non-numeric/);
  });
});
