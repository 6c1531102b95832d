import { Row, num } from "./csv";

export interface Pt {
  x: number;
  y: number;
}

export interface Grid {
  xs: number[];
  ys: number[];
  /** v[iy][ix] */
  v: number[][];
}

export interface Contour {
  points: Pt[];
  closed: boolean;
}

/** Rebuild the rectangular grid a scan was sampled on.  The generator
 * serializes repeated coordinates identically, so the raw cell strings are
 * exact dedup keys. */
export function gridFromRows(rows: Row[], xKey: string, yKey: string, vKey: string): Grid {
  const xSet = new Map<string, number>();
  const ySet = new Map<string, number>();
  for (const r of rows) {
    xSet.set(r[xKey], num(r, xKey));
    ySet.set(r[yKey], num(r, yKey));
  }
  const xs = [...xSet.values()].sort((a, b) => a - b);
  const ys = [...ySet.values()].sort((a, b) => a - b);
  const xRank = new Map(xs.map((x, i) => [x, i]));
  const yRank = new Map(ys.map((y, i) => [y, i]));
  const xIndex = new Map([...xSet.entries()].map(([k, x]) => [k, xRank.get(x)!]));
  const yIndex = new Map([...ySet.entries()].map(([k, y]) => [k, yRank.get(y)!]));

  const v: number[][] = ys.map(() => new Array<number>(xs.length).fill(NaN));
  for (const r of rows) {
    v[yIndex.get(r[yKey])!][xIndex.get(r[xKey])!] = num(r, vKey);
  }
  for (let j = 0; j < ys.length; j++) {
    for (let i = 0; i < xs.length; i++) {
      if (Number.isNaN(v[j][i])) {
        throw new Error(`grid hole at ${xKey}=${xs[i]}, ${yKey}=${ys[j]}`);
      }
    }
  }
  return { xs, ys, v };
}

function lerp(a: number, b: number, va: number, vb: number, level: number): number {
  const d = vb - va;
  const t = Math.abs(d) < 1e-300 ? 0.5 : (level - va) / d;
  return a + Math.min(1, Math.max(0, t)) * (b - a);
}

// segment endpoints per case, as pairs of cell edges
// edges: 0 bottom, 1 right, 2 top, 3 left; corner bits: 1 v00, 2 v10, 4 v11, 8 v01
const CASE_EDGES: number[][][] = [
  [],
  [[3, 0]],
  [[0, 1]],
  [[3, 1]],
  [[1, 2]],
  [], // saddle, resolved at runtime
  [[0, 2]],
  [[2, 3]],
  [[2, 3]],
  [[0, 2]],
  [], // saddle
  [[1, 2]],
  [[3, 1]],
  [[0, 1]],
  [[3, 0]],
  [],
];

/** Level-set segments of the grid field by marching squares with linear
 * interpolation along cell edges. */
export function contourSegments(grid: Grid, level = 0): [Pt, Pt][] {
  const { xs, ys, v } = grid;
  const segs: [Pt, Pt][] = [];
  for (let j = 0; j + 1 < ys.length; j++) {
    for (let i = 0; i + 1 < xs.length; i++) {
      const v00 = v[j][i];
      const v10 = v[j][i + 1];
      const v11 = v[j + 1][i + 1];
      const v01 = v[j + 1][i];
      let code = 0;
      if (v00 >= level) code |= 1;
      if (v10 >= level) code |= 2;
      if (v11 >= level) code |= 4;
      if (v01 >= level) code |= 8;
      if (code === 0 || code === 15) continue;

      const x0 = xs[i];
      const x1 = xs[i + 1];
      const y0 = ys[j];
      const y1 = ys[j + 1];
      const edgePoint = (edge: number): Pt => {
        switch (edge) {
          case 0:
            return { x: lerp(x0, x1, v00, v10, level), y: y0 };
          case 1:
            return { x: x1, y: lerp(y0, y1, v10, v11, level) };
          case 2:
            return { x: lerp(x0, x1, v01, v11, level), y: y1 };
          default:
            return { x: x0, y: lerp(y0, y1, v00, v01, level) };
        }
      };

      let pairs = CASE_EDGES[code];
      if (code === 5 || code === 10) {
        const centerAbove = (v00 + v10 + v11 + v01) / 4 >= level;
        if (code === 5) {
          pairs = centerAbove ? [[0, 1], [2, 3]] : [[3, 0], [1, 2]];
        } else {
          pairs = centerAbove ? [[3, 0], [1, 2]] : [[0, 1], [2, 3]];
        }
      }
      for (const [ea, eb] of pairs) {
        segs.push([edgePoint(ea), edgePoint(eb)]);
      }
    }
  }
  return segs;
}

function endpointKey(p: Pt, eps: number): string {
  return `${Math.round(p.x / eps)}:${Math.round(p.y / eps)}`;
}

/** Join segments sharing endpoints into polylines; a contour is closed when
 * the walk returns to its starting point.  Zero-length segments (the level
 * set passing exactly through a grid node) would turn that node into a
 * degree-4 junction and split the walk, so they are dropped first. */
export function chainSegments(allSegs: [Pt, Pt][], eps = 1e-9): Contour[] {
  const segs = allSegs.filter(([a, b]) => endpointKey(a, eps) !== endpointKey(b, eps));
  const bucket = new Map<string, number[]>();
  segs.forEach(([a, b], idx) => {
    for (const p of [a, b]) {
      const k = endpointKey(p, eps);
      const list = bucket.get(k);
      if (list) list.push(idx);
      else bucket.set(k, [idx]);
    }
  });

  const used = new Array(segs.length).fill(false);
  const contours: Contour[] = [];

  const takeNext = (p: Pt): number => {
    for (const idx of bucket.get(endpointKey(p, eps)) ?? []) {
      if (!used[idx]) return idx;
    }
    return -1;
  };

  const extend = (pts: Pt[]): void => {
    for (;;) {
      const nxt = takeNext(pts[pts.length - 1]);
      if (nxt < 0) return;
      used[nxt] = true;
      const [a, b] = segs[nxt];
      const tipKey = endpointKey(pts[pts.length - 1], eps);
      pts.push(endpointKey(a, eps) === tipKey ? b : a);
    }
  };

  for (let s = 0; s < segs.length; s++) {
    if (used[s]) continue;
    used[s] = true;
    const pts = [segs[s][0], segs[s][1]];
    extend(pts);
    pts.reverse(); // pick up the other direction from the original tail
    extend(pts);
    const closed =
      pts.length > 2 &&
      endpointKey(pts[0], eps) === endpointKey(pts[pts.length - 1], eps);
    contours.push({ points: closed ? pts.slice(0, -1) : pts, closed });
  }
  return contours;
}

export function levelContours(grid: Grid, level = 0): Contour[] {
  const span = Math.max(
    grid.xs[grid.xs.length - 1] - grid.xs[0],
    grid.ys[grid.ys.length - 1] - grid.ys[0],
    1e-12,
  );
  return chainSegments(contourSegments(grid, level), span * 1e-9);
}
