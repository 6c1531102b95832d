import fs from "fs";
import path from "path";
import { Pt } from "./marching";

export interface Window {
  x0: number;
  x1: number;
  y0: number;
  y1: number;
}

export interface StrokeOpts {
  stroke?: string;
  strokeWidth?: number;
  fill?: string;
  dash?: string;
  opacity?: number;
  closed?: boolean;
}

const fmt = (v: number): string => (Math.round(v * 100) / 100).toString();

/** Maps a world-coordinate window onto a screen rectangle, y up. */
export class Panel {
  constructor(
    readonly world: Window,
    readonly left: number,
    readonly top: number,
    readonly width: number,
    readonly height: number,
  ) {}

  sx(x: number): number {
    return this.left + ((x - this.world.x0) / (this.world.x1 - this.world.x0)) * this.width;
  }

  sy(y: number): number {
    return this.top + ((this.world.y1 - y) / (this.world.y1 - this.world.y0)) * this.height;
  }

  /** x-axis pixels per world unit; radii assume a square-aspect panel. */
  scale(): number {
    return this.width / (this.world.x1 - this.world.x0);
  }
}

export class SvgDoc {
  private parts: string[] = [];

  constructor(readonly width: number, readonly height: number) {
    this.parts.push(
      `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
        `viewBox="0 0 ${width} ${height}">`,
      `<rect width="${width}" height="${height}" fill="white"/>`,
    );
  }

  polyline(panel: Panel, pts: Pt[], opts: StrokeOpts = {}): void {
    if (pts.length === 0) return;
    const d = pts
      .map((p, i) => `${i === 0 ? "M" : "L"}${fmt(panel.sx(p.x))} ${fmt(panel.sy(p.y))}`)
      .join("");
    this.parts.push(
      `<path d="${d}${opts.closed ? "Z" : ""}" fill="${opts.fill ?? "none"}" ` +
        `stroke="${opts.stroke ?? "black"}" stroke-width="${opts.strokeWidth ?? 1}"` +
        (opts.dash ? ` stroke-dasharray="${opts.dash}"` : "") +
        (opts.opacity !== undefined ? ` opacity="${opts.opacity}"` : "") +
        `/>`,
    );
  }

  circle(panel: Panel, cx: number, cy: number, rWorld: number, opts: StrokeOpts = {}): void {
    this.parts.push(
      `<circle cx="${fmt(panel.sx(cx))}" cy="${fmt(panel.sy(cy))}" ` +
        `r="${fmt(rWorld * panel.scale())}" fill="${opts.fill ?? "none"}" ` +
        `stroke="${opts.stroke ?? "black"}" stroke-width="${opts.strokeWidth ?? 1}"` +
        (opts.dash ? ` stroke-dasharray="${opts.dash}"` : "") +
        `/>`,
    );
  }

  dot(panel: Panel, p: Pt, rPx: number, color: string, opacity = 1): void {
    this.parts.push(
      `<circle cx="${fmt(panel.sx(p.x))}" cy="${fmt(panel.sy(p.y))}" r="${rPx}" ` +
        `fill="${color}" opacity="${opacity}"/>`,
    );
  }

  frame(panel: Panel, label?: string): void {
    this.parts.push(
      `<rect x="${panel.left}" y="${panel.top}" width="${panel.width}" ` +
        `height="${panel.height}" fill="none" stroke="#999" stroke-width="0.5"/>`,
    );
    if (label) {
      this.parts.push(
        `<text x="${panel.left + panel.width / 2}" y="${panel.top + panel.height + 16}" ` +
          `font-family="sans-serif" font-size="12" text-anchor="middle">${label}</text>`,
      );
    }
  }

  legend(x: number, y: number, entries: [string, string][]): void {
    entries.forEach(([label, color], i) => {
      const yy = y + i * 16;
      this.parts.push(
        `<line x1="${x}" y1="${yy}" x2="${x + 22}" y2="${yy}" stroke="${color}" stroke-width="2"/>`,
        `<text x="${x + 28}" y="${yy + 4}" font-family="sans-serif" font-size="11">${label}</text>`,
      );
    });
  }

  toString(): string {
    return [...this.parts, "</svg>", ""].join("\n");
  }

  save(file: string): void {
    saveSvg(file, this.toString());
  }
}

export function saveSvg(file: string, svg: string): void {
  fs.mkdirSync(path.dirname(file), { recursive: true });
  fs.writeFileSync(file, svg, "utf-8");
}
