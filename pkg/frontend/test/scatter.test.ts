import { describe, expect, it } from "vitest";

import { fitTransform, nearestPoint, pan, toScreen, zoom } from "../src/scatter.js";
import type { PlotPoint } from "../src/types.js";

const points: PlotPoint[] = [
  { word: "a", x: -10, y: -5, cluster: 0 },
  { word: "b", x: 10, y: 5, cluster: 1 },
  { word: "c", x: 0, y: 0, cluster: 2 },
];

describe("scatter transforms", () => {
  it("fits all points inside the viewport margin", () => {
    const t = fitTransform(points, 640, 480, 24);
    for (const p of points) {
      const [sx, sy] = toScreen(t, p.x, p.y);
      expect(sx).toBeGreaterThanOrEqual(24 - 1e-9);
      expect(sx).toBeLessThanOrEqual(640 - 24 + 1e-9);
      expect(sy).toBeGreaterThanOrEqual(24 - 1e-9);
      expect(sy).toBeLessThanOrEqual(480 - 24 + 1e-9);
    }
  });

  it("zoom keeps the anchor point fixed", () => {
    const t = fitTransform(points, 640, 480);
    const [ax, ay] = toScreen(t, points[1].x, points[1].y);
    const zoomed = zoom(t, 1.5, ax, ay);
    const [bx, by] = toScreen(zoomed, points[1].x, points[1].y);
    expect(bx).toBeCloseTo(ax, 9);
    expect(by).toBeCloseTo(ay, 9);
    expect(zoomed.scale).toBeCloseTo(t.scale * 1.5, 9);
  });

  it("pan shifts every point by the same offset", () => {
    const t = fitTransform(points, 640, 480);
    const moved = pan(t, 13, -7);
    for (const p of points) {
      const [sx, sy] = toScreen(t, p.x, p.y);
      const [mx, my] = toScreen(moved, p.x, p.y);
      expect(mx - sx).toBeCloseTo(13, 9);
      expect(my - sy).toBeCloseTo(-7, 9);
    }
  });

  it("nearestPoint finds the hovered point in screen space", () => {
    const t = fitTransform(points, 640, 480);
    const [sx, sy] = toScreen(t, points[2].x, points[2].y);
    expect(nearestPoint(points, t, sx + 3, sy - 2)).toBe(2);
    expect(nearestPoint(points, t, sx + 300, sy)).toBeNull();
  });
});
