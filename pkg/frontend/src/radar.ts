// Radar-chart geometry. Must stay in lockstep with the service's area
// computation: vertex k sits at angle 2*pi*k/7 with radius = component k, so
// the polygon drawn on screen is the same polygon whose area the optimizer
// maximizes.

export const NUM_AXES = 7;
const SECTOR = (2 * Math.PI) / NUM_AXES;

export function radarArea(v: readonly number[]): number {
  if (v.length !== NUM_AXES) throw new Error(`expected 7 components, got ${v.length}`);
  let s = 0;
  for (let k = 0; k < NUM_AXES; k++) {
    const a = v[k]!;
    const b = v[(k + 1) % NUM_AXES]!;
    if (!(a >= 0 && a <= 1) || Number.isNaN(a)) {
      throw new Error(`component ${k} out of [0,1]: ${a}`);
    }
    s += a * b;
  }
  return 0.5 * Math.sin(SECTOR) * s;
}

export const MAX_AREA = radarArea(new Array(NUM_AXES).fill(1));

export interface Point {
  x: number;
  y: number;
}

/** Vertex positions for an effectiveness vector, radius in px. */
export function vertices(v: readonly number[], cx: number, cy: number, r: number): Point[] {
  // screen y grows downward; negate so axis 0 points right and winding is CCW
  return v.map((c, k) => ({
    x: cx + r * c * Math.cos(k * SECTOR),
    y: cy - r * c * Math.sin(k * SECTOR),
  }));
}

function pointsAttr(pts: Point[]): string {
  return pts.map((p) => `${p.x.toFixed(2)},${p.y.toFixed(2)}`).join(" ");
}

/**
 * Standalone SVG radar chart. `current` draws filled; `overlay` (the
 * with-candidate vector) draws as an outline on top so the delta is visible.
 */
export function radarSvg(
  current: readonly number[],
  overlay?: readonly number[],
  size = 120,
): string {
  const c = size / 2;
  const r = size / 2 - 8;
  const rings = [0.5, 1.0]
    .map(
      (f) =>
        `<polygon points="${pointsAttr(vertices(new Array(NUM_AXES).fill(f), c, c, r))}"` +
        ` fill="none" stroke="#ccc" stroke-width="0.5"/>`,
    )
    .join("");
  const spokes = vertices(new Array(NUM_AXES).fill(1), c, c, r)
    .map((p) => `<line x1="${c}" y1="${c}" x2="${p.x.toFixed(2)}" y2="${p.y.toFixed(2)}"` +
      ` stroke="#ccc" stroke-width="0.5"/>`)
    .join("");
  const cur = `<polygon points="${pointsAttr(vertices(current, c, c, r))}"` +
    ` fill="rgba(31,119,180,0.35)" stroke="#1f77b4" stroke-width="1.5"/>`;
  const over = overlay
    ? `<polygon points="${pointsAttr(vertices(overlay, c, c, r))}"` +
      ` fill="none" stroke="#d62728" stroke-width="1.5" stroke-dasharray="4 2"/>`
    : "";
  return (
    `<svg class="radar" viewBox="0 0 ${size} ${size}" width="${size}" height="${size}"` +
    ` role="img">${rings}${spokes}${cur}${over}</svg>`
  );
}

export function fmtArea(area: number): string {
  return area.toFixed(4);
}

export function fmtProbability(p: number | null): string {
  return p === null ? "n/a" : `${(100 * p).toFixed(1)}%`;
}
