/** Deterministic DOM rendering of the view state.
 *
 * No number displayed here is computed client-side: scores, divergences and
 * timings are stringified straight off the server payload, so what the user
 * reads is the server JSON verbatim.
 */

import type { AppState, Tool } from "./state.js";
import type { ScoredWord } from "./types.js";
import { clusterColor } from "./scatter.js";

export const TOOLS: { id: Tool; label: string }[] = [
  { id: "analogy", label: "Analogy" },
  { id: "similarity", label: "Similarity" },
  { id: "neighbors", label: "Similar words" },
  { id: "visualize", label: "Clusters" },
];

export function formatScore(value: number): string {
  return String(value);
}

function el(doc: Document, tag: string, className?: string, text?: string): HTMLElement {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function errorBanner(doc: Document, message: string | null): HTMLElement | null {
  return message === null ? null : el(doc, "div", "error-banner", message);
}

function scoredTable(doc: Document, results: ScoredWord[]): HTMLElement {
  const table = el(doc, "table", "results");
  const head = el(doc, "tr");
  head.append(el(doc, "th", "", "#"), el(doc, "th", "", "word"), el(doc, "th", "", "score"));
  table.append(head);
  results.forEach((entry, i) => {
    const row = el(doc, "tr");
    const pivot = el(doc, "button", "pivot", entry.word) as HTMLButtonElement;
    pivot.dataset.word = entry.word;
    const wordCell = el(doc, "td", "word-cell");
    wordCell.append(pivot);
    row.append(el(doc, "td", "", String(i + 1)), wordCell, el(doc, "td", "score", formatScore(entry.score)));
    table.append(row);
  });
  return table;
}

function statusLine(doc: Document, model: string, elapsedMs: number): HTMLElement {
  return el(doc, "div", "status", `model ${model} · ${formatScore(elapsedMs)} ms`);
}

function analogyPane(doc: Document, state: AppState): HTMLElement {
  const pane = el(doc, "section", "pane pane-analogy");
  const banner = errorBanner(doc, state.analogy.error);
  if (banner) pane.append(banner);
  const { request, response } = state.analogy;
  if (response) {
    if (request) {
      pane.append(
        el(doc, "h3", "", `${request.a} : ${request.b} :: ${request.c} : ?`),
      );
    }
    pane.append(scoredTable(doc, response.results));
    pane.append(statusLine(doc, response.model, response.elapsedMs));
  }
  return pane;
}

function similarityPane(doc: Document, state: AppState): HTMLElement {
  const pane = el(doc, "section", "pane pane-similarity");
  const banner = errorBanner(doc, state.similarity.error);
  if (banner) pane.append(banner);
  const { request, response } = state.similarity;
  if (response) {
    if (request) pane.append(el(doc, "h3", "", `cosine(${request.w1}, ${request.w2})`));
    pane.append(el(doc, "div", "cosine-value", formatScore(response.cosine)));
    pane.append(statusLine(doc, response.model, response.elapsedMs));
  }
  return pane;
}

function neighborsPane(doc: Document, state: AppState): HTMLElement {
  const pane = el(doc, "section", "pane pane-neighbors");
  const banner = errorBanner(doc, state.neighbors.error);
  if (banner) pane.append(banner);
  const { request, response } = state.neighbors;
  if (response) {
    if (request) pane.append(el(doc, "h3", "", `closest to ${request.word}`));
    pane.append(scoredTable(doc, response.results));
    pane.append(statusLine(doc, response.model, response.elapsedMs));
  }
  return pane;
}

function visualizePane(doc: Document, state: AppState): HTMLElement {
  const pane = el(doc, "section", "pane pane-visualize");
  const banner = errorBanner(doc, state.visualize.error);
  if (banner) pane.append(banner);
  const { request, response } = state.visualize;
  if (!response) {
    if (!banner) pane.append(el(doc, "div", "empty-state", "no plot yet"));
    return pane;
  }
  if (request) {
    pane.append(
      el(doc, "h3", "", `top ${request.n} around ${response.word} in ${request.k} clusters`),
    );
  }
  const canvas = el(doc, "canvas", "scatter") as HTMLCanvasElement;
  canvas.width = 640;
  canvas.height = 480;
  pane.append(canvas);

  const clusters = [...new Set(response.points.map((p) => p.cluster))].sort((a, b) => a - b);
  const legend = el(doc, "ul", "legend");
  for (const cluster of clusters) {
    const item = el(doc, "li", "legend-item", `cluster ${cluster}`);
    item.setAttribute("data-cluster", String(cluster));
    item.setAttribute("style", `--swatch: ${clusterColor(cluster)}`);
    legend.append(item);
  }
  pane.append(legend);
  pane.append(
    el(
      doc,
      "div",
      "viz-stats",
      `kl ${formatScore(response.klInitial)} → ${formatScore(response.klFinal)}` +
        ` · inertia ${formatScore(response.inertia)}`,
    ),
  );
  pane.append(statusLine(doc, response.model, response.elapsedMs));
  return pane;
}

/** Render the full results area for the active tool (pure in state). */
export function renderResults(state: AppState, doc: Document): HTMLElement {
  const root = el(doc, "div", "results-area");
  root.dataset.activeTool = state.activeTool;
  const panes: Record<Tool, (d: Document, s: AppState) => HTMLElement> = {
    analogy: analogyPane,
    similarity: similarityPane,
    neighbors: neighborsPane,
    visualize: visualizePane,
  };
  root.append(panes[state.activeTool](doc, state));
  return root;
}
