/** Browser bootstrap: form chrome, event wiring, scatter interactivity. */

import { ApiClient } from "./api.js";
import { ExplorerApp } from "./app.js";
import { TOOLS } from "./render.js";
import { drawScatter, fitTransform, nearestPoint, pan, zoom, type Transform } from "./scatter.js";
import type { Tool } from "./state.js";

const FORM_HTML = `
  <header>
    <h1>motvec explorer</h1>
    <label>model
      <select id="model-select"></select>
    </label>
  </header>
  <nav id="tool-tabs"></nav>
  <form id="form-analogy" class="tool-form" data-tool="analogy">
    <input name="a" placeholder="a (homme)" required>
    <input name="b" placeholder="b (roi)" required>
    <input name="c" placeholder="c (femme)" required>
    <input name="k" type="number" value="10" min="1">
    <button type="submit">solve</button>
  </form>
  <form id="form-similarity" class="tool-form" data-tool="similarity" hidden>
    <input name="w1" placeholder="first word" required>
    <input name="w2" placeholder="second word" required>
    <button type="submit">compare</button>
  </form>
  <form id="form-neighbors" class="tool-form" data-tool="neighbors" hidden>
    <input name="word" placeholder="word" required>
    <input name="k" type="number" value="10" min="1">
    <button type="submit">find</button>
  </form>
  <form id="form-visualize" class="tool-form" data-tool="visualize" hidden>
    <input name="word" placeholder="word (paris)" required>
    <input name="n" type="number" value="200" min="3">
    <input name="k" type="number" value="8" min="2">
    <input name="seed" type="number" value="1">
    <button type="submit">plot</button>
  </form>
  <main id="results-root"></main>
`;

function field(form: HTMLFormElement, name: string): HTMLInputElement {
  return form.elements.namedItem(name) as HTMLInputElement;
}

function wireValidation(form: HTMLFormElement): void {
  const submit = form.querySelector("button[type=submit]") as HTMLButtonElement;
  const update = () => {
    submit.disabled = [...form.querySelectorAll("input[required]")].some(
      (input) => (input as HTMLInputElement).value.trim() === "",
    );
  };
  form.addEventListener("input", update);
  update();
}

export function boot(doc: Document, fetchFn: typeof fetch): ExplorerApp {
  const root = doc.getElementById("app");
  if (!root) throw new Error("missing #app element");
  root.innerHTML = FORM_HTML;

  const resultsRoot = doc.getElementById("results-root") as HTMLElement;
  const app = new ExplorerApp(new ApiClient(fetchFn), resultsRoot, doc, syncChrome);

  const tabs = doc.getElementById("tool-tabs") as HTMLElement;
  for (const tool of TOOLS) {
    const tab = doc.createElement("button");
    tab.textContent = tool.label;
    tab.dataset.tool = tool.id;
    tab.addEventListener("click", () => app.selectTool(tool.id));
    tabs.append(tab);
  }

  const modelSelect = doc.getElementById("model-select") as HTMLSelectElement;
  modelSelect.addEventListener("change", () => void app.selectModel(modelSelect.value));

  const forms: Record<Tool, HTMLFormElement> = {
    analogy: doc.getElementById("form-analogy") as HTMLFormElement,
    similarity: doc.getElementById("form-similarity") as HTMLFormElement,
    neighbors: doc.getElementById("form-neighbors") as HTMLFormElement,
    visualize: doc.getElementById("form-visualize") as HTMLFormElement,
  };
  Object.values(forms).forEach(wireValidation);

  forms.analogy.addEventListener("submit", (event) => {
    event.preventDefault();
    void app.submitAnalogy({
      a: field(forms.analogy, "a").value.trim(),
      b: field(forms.analogy, "b").value.trim(),
      c: field(forms.analogy, "c").value.trim(),
      k: Number(field(forms.analogy, "k").value) || 10,
    });
  });
  forms.similarity.addEventListener("submit", (event) => {
    event.preventDefault();
    void app.submitSimilarity({
      w1: field(forms.similarity, "w1").value.trim(),
      w2: field(forms.similarity, "w2").value.trim(),
    });
  });
  forms.neighbors.addEventListener("submit", (event) => {
    event.preventDefault();
    void app.submitNeighbors({
      word: field(forms.neighbors, "word").value.trim(),
      k: Number(field(forms.neighbors, "k").value) || 10,
    });
  });
  forms.visualize.addEventListener("submit", (event) => {
    event.preventDefault();
    void app.submitVisualize({
      word: field(forms.visualize, "word").value.trim(),
      n: Number(field(forms.visualize, "n").value) || 200,
      k: Number(field(forms.visualize, "k").value) || 8,
      seed: Number(field(forms.visualize, "seed").value) || 1,
    });
  });

  // result words pivot into the neighbors view; the neighbors box refills
  resultsRoot.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.matches("button.pivot") && target.dataset.word) {
      field(forms.neighbors, "word").value = target.dataset.word;
      forms.neighbors.dispatchEvent(new Event("input"));
      void app.pivotToNeighbors(target.dataset.word);
    }
  });

  // scatter interactivity: zoom on wheel, pan on drag, hover tooltip,
  // click pivots to neighbors
  let transform: Transform | null = null;
  let dragging: { x: number; y: number } | null = null;
  let moved = false;

  function canvasOf(eventTarget: EventTarget | null): HTMLCanvasElement | null {
    const node = eventTarget as HTMLElement | null;
    return node && node instanceof HTMLCanvasElement && node.matches("canvas.scatter")
      ? node
      : null;
  }

  function redraw(canvas: HTMLCanvasElement, hovered: number | null): void {
    const plot = app.state.visualize.response;
    if (!plot) return;
    transform ??= fitTransform(plot.points, canvas.width, canvas.height);
    drawScatter(canvas, plot.points, transform, hovered);
  }

  function syncChrome(): void {
    const state = app.state;
    transform = null; // refit on fresh results
    modelSelect.replaceChildren(
      ...state.models.map((m) => {
        const option = doc.createElement("option");
        option.value = m.name;
        option.textContent = `${m.name} (${m.vocabSize} × ${m.dim})`;
        option.selected = m.name === state.selectedModel;
        return option;
      }),
    );
    for (const tool of TOOLS) {
      forms[tool.id].hidden = tool.id !== state.activeTool;
    }
    tabs.querySelectorAll("button").forEach((tab) => {
      tab.classList.toggle("active", tab.dataset.tool === state.activeTool);
    });
  }

  resultsRoot.addEventListener("wheel", (event) => {
    const canvas = canvasOf(event.target);
    if (!canvas || !transform) return;
    event.preventDefault();
    const rect = canvas.getBoundingClientRect();
    const factor = (event as WheelEvent).deltaY < 0 ? 1.15 : 1 / 1.15;
    transform = zoom(transform, factor, event.clientX - rect.left, event.clientY - rect.top);
    redraw(canvas, null);
  });
  resultsRoot.addEventListener("mousedown", (event) => {
    if (canvasOf(event.target)) {
      dragging = { x: event.clientX, y: event.clientY };
      moved = false;
    }
  });
  resultsRoot.addEventListener("mousemove", (event) => {
    const canvas = canvasOf(event.target);
    if (!canvas) return;
    if (dragging && transform) {
      transform = pan(transform, event.clientX - dragging.x, event.clientY - dragging.y);
      dragging = { x: event.clientX, y: event.clientY };
      moved = true;
      redraw(canvas, null);
      return;
    }
    const plot = app.state.visualize.response;
    if (!plot || !transform) return;
    const rect = canvas.getBoundingClientRect();
    redraw(
      canvas,
      nearestPoint(plot.points, transform, event.clientX - rect.left, event.clientY - rect.top),
    );
  });
  resultsRoot.addEventListener("mouseup", (event) => {
    const canvas = canvasOf(event.target);
    dragging = null;
    if (!canvas || moved || !transform) return;
    const plot = app.state.visualize.response;
    if (!plot) return;
    const rect = canvas.getBoundingClientRect();
    const hit = nearestPoint(
      plot.points, transform, event.clientX - rect.left, event.clientY - rect.top,
    );
    if (hit !== null) void app.pivotToNeighbors(plot.points[hit].word);
  });

  return app;
}

declare global {
  interface Window {
    motvecApp?: ExplorerApp;
  }
}

if (typeof window !== "undefined" && typeof document !== "undefined" && document.getElementById("app")) {
  window.motvecApp = boot(document, window.fetch.bind(window));
  void window.motvecApp.start();
}
