/** Canvas scatter plot: world-to-screen transform, zoom + pan, and
 * nearest-point hover lookup in screen space.  The transform math is pure
 * so it can be tested without a canvas. */

import type { PlotPoint } from "./types.js";

export interface Transform {
  scale: number;
  offsetX: number;
  offsetY: number;
}

export const CLUSTER_COLORS = [
  "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
];

export function clusterColor(cluster: number): string {
  return CLUSTER_COLORS[((cluster % CLUSTER_COLORS.length) + CLUSTER_COLORS.length) % CLUSTER_COLORS.length];
}

/** Fit all points inside width x height with a margin, preserving aspect. */
export function fitTransform(
  points: readonly PlotPoint[],
  width: number,
  height: number,
  margin = 24,
): Transform {
  if (points.length === 0) return { scale: 1, offsetX: width / 2, offsetY: height / 2 };
  let minX = Infinity, maxX = -Infinity, minY = Infinity, maxY = -Infinity;
  for (const p of points) {
    minX = Math.min(minX, p.x);
    maxX = Math.max(maxX, p.x);
    minY = Math.min(minY, p.y);
    maxY = Math.max(maxY, p.y);
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const scale = Math.min((width - 2 * margin) / spanX, (height - 2 * margin) / spanY);
  const centerX = (minX + maxX) / 2;
  const centerY = (minY + maxY) / 2;
  return {
    scale,
    offsetX: width / 2 - centerX * scale,
    offsetY: height / 2 + centerY * scale,
  };
}

export function toScreen(t: Transform, x: number, y: number): [number, number] {
  // y grows upward in data space, downward on the canvas
  return [x * t.scale + t.offsetX, -y * t.scale + t.offsetY];
}

/** Zoom by `factor` keeping the screen point (cx, cy) fixed. */
export function zoom(t: Transform, factor: number, cx: number, cy: number): Transform {
  const scale = t.scale * factor;
  return {
    scale,
    offsetX: cx - (cx - t.offsetX) * factor,
    offsetY: cy - (cy - t.offsetY) * factor,
  };
}

export function pan(t: Transform, dx: number, dy: number): Transform {
  return { scale: t.scale, offsetX: t.offsetX + dx, offsetY: t.offsetY + dy };
}

/** Index of the point nearest to the screen position, within maxDist px. */
export function nearestPoint(
  points: readonly PlotPoint[],
  t: Transform,
  screenX: number,
  screenY: number,
  maxDist = 12,
): number | null {
  let best = -1;
  let bestD2 = maxDist * maxDist;
  for (let i = 0; i < points.length; i++) {
    const [sx, sy] = toScreen(t, points[i].x, points[i].y);
    const d2 = (sx - screenX) ** 2 + (sy - screenY) ** 2;
    if (d2 <= bestD2) {
      bestD2 = d2;
      best = i;
    }
  }
  return best >= 0 ? best : null;
}

export function drawScatter(
  canvas: HTMLCanvasElement,
  points: readonly PlotPoint[],
  t: Transform,
  hovered: number | null,
): void {
  const ctx = canvas.getContext && canvas.getContext("2d");
  if (!ctx) return; // test environments without a 2D context
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let i = 0; i < points.length; i++) {
    const p = points[i];
    const [sx, sy] = toScreen(t, p.x, p.y);
    ctx.beginPath();
    ctx.arc(sx, sy, i === 0 ? 6 : 4, 0, 2 * Math.PI);
    ctx.fillStyle = clusterColor(p.cluster);
    ctx.fill();
    if (i === 0 || i === hovered) {
      ctx.strokeStyle = "#222";
      ctx.lineWidth = 1.5;
      ctx.stroke();
    }
  }
  if (hovered !== null && points[hovered]) {
    const p = points[hovered];
    const [sx, sy] = toScreen(t, p.x, p.y);
    ctx.font = "12px sans-serif";
    ctx.fillStyle = "#111";
    ctx.fillText(p.word, sx + 8, sy - 8);
  }
}
