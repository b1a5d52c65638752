import { describe, expect, it } from "vitest";
import {
  MAX_AREA,
  NUM_AXES,
  fmtArea,
  fmtProbability,
  radarArea,
  radarSvg,
  vertices,
} from "../src/radar.js";

// Independent oracle: place vertex k at angle 2*pi*k/7, then run the plain
// shoelace formula over the polygon. No shared code with radarArea.
function shoelace(v: readonly number[]): number {
  const pts = v.map((c, k) => {
    const ang = (2 * Math.PI * k) / v.length;
    return [c * Math.cos(ang), c * Math.sin(ang)] as const;
  });
  let twice = 0;
  for (let k = 0; k < pts.length; k++) {
    const [x1, y1] = pts[k]!;
    const [x2, y2] = pts[(k + 1) % pts.length]!;
    twice += x1 * y2 - x2 * y1;
  }
  return Math.abs(twice) / 2;
}

// small deterministic PRNG so failures are reproducible
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function randomVector(rand: () => number): number[] {
  return Array.from({ length: NUM_AXES }, () => rand());
}

describe("radarArea", () => {
  it("all-ones vector covers (7/2)sin(2pi/7)", () => {
    const area = radarArea(new Array(7).fill(1));
    expect(Math.abs(area - 3.5 * Math.sin((2 * Math.PI) / 7))).toBeLessThan(1e-9);
    expect(area).toBe(MAX_AREA);
  });

  it("matches an independent shoelace computation on random vectors", () => {
    const rand = mulberry32(42);
    for (let trial = 0; trial < 500; trial++) {
      const v = randomVector(rand);
      expect(Math.abs(radarArea(v) - shoelace(v))).toBeLessThan(1e-12);
    }
  });

  it("is invariant under cyclic shifts", () => {
    const rand = mulberry32(7);
    for (let trial = 0; trial < 100; trial++) {
      const v = randomVector(rand);
      const base = radarArea(v);
      for (let s = 1; s < NUM_AXES; s++) {
        const shifted = v.map((_, k) => v[(k + s) % NUM_AXES]!);
        expect(Math.abs(radarArea(shifted) - base)).toBeLessThan(1e-12);
      }
    }
  });

  it("scales quadratically", () => {
    const rand = mulberry32(99);
    for (let trial = 0; trial < 100; trial++) {
      const v = randomVector(rand);
      const t = rand();
      const scaled = v.map((c) => t * c);
      expect(Math.abs(radarArea(scaled) - t * t * radarArea(v))).toBeLessThan(1e-12);
    }
  });

  it("rejects wrong arity and out-of-range components", () => {
    expect(() => radarArea([0.5, 0.5, 0.5])).toThrow(/7 components/);
    expect(() => radarArea([1.5, 0, 0, 0, 0, 0, 0])).toThrow(/out of \[0,1\]/);
    expect(() => radarArea([-0.1, 0, 0, 0, 0, 0, 0])).toThrow(/out of \[0,1\]/);
    expect(() => radarArea([NaN, 0, 0, 0, 0, 0, 0])).toThrow(/out of \[0,1\]/);
  });
});

describe("vertices", () => {
  it("puts axis 0 on the +x axis and flips y for screen coordinates", () => {
    const pts = vertices([1, 1, 0, 0, 0, 0, 0], 60, 60, 50);
    // axis 0: straight right of center
    expect(pts[0]!.x).toBeCloseTo(110, 9);
    expect(pts[0]!.y).toBeCloseTo(60, 9);
    // axis 1 sits counter-clockwise in math coords, i.e. *above* center on screen
    expect(pts[1]!.y).toBeLessThan(60);
  });

  it("scales radius by the component value", () => {
    const pts = vertices([0.5, 0, 0, 0, 0, 0, 0], 0, 0, 100);
    expect(pts[0]!.x).toBeCloseTo(50, 9);
  });
});

describe("radarSvg", () => {
  it("is deterministic and draws the overlay only when given", () => {
    const cur = [0.2, 0.4, 0.6, 0.8, 0.5, 0.3, 0.1];
    const cand = [0.3, 0.5, 0.7, 0.9, 0.6, 0.4, 0.2];
    const plain = radarSvg(cur);
    expect(plain).toBe(radarSvg([...cur]));
    expect(plain).not.toContain("stroke-dasharray");
    const withOverlay = radarSvg(cur, cand);
    expect(withOverlay).toContain("stroke-dasharray");
    expect(withOverlay.startsWith("<svg")).toBe(true);
  });
});

describe("formatting", () => {
  it("fmtArea renders 4 decimal places", () => {
    expect(fmtArea(1.23456789)).toBe("1.2346");
    expect(fmtArea(0)).toBe("0.0000");
    expect(fmtArea(MAX_AREA)).toBe((3.5 * Math.sin((2 * Math.PI) / 7)).toFixed(4));
  });

  it("fmtProbability renders a percentage or n/a", () => {
    expect(fmtProbability(0.1234)).toBe("12.3%");
    expect(fmtProbability(1)).toBe("100.0%");
    expect(fmtProbability(null)).toBe("n/a");
  });
});
