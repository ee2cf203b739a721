/** Controller: the imperative shell binding ApiClient, the state machine
 * and the renderer.  Tests drive these methods directly; main.ts wires
 * them to the form chrome. */

import { ApiClient } from "./api.js";
import { renderResults } from "./render.js";
import { drawScatter, fitTransform } from "./scatter.js";
import { initialState, reduce, type AppEvent, type AppState, type Tool } from "./state.js";
import type {
  AnalogyRequest,
  NeighborsRequest,
  SimilarityRequest,
  VisualizeRequest,
} from "./types.js";

export class ExplorerApp {
  state: AppState = initialState();

  constructor(
    private readonly api: ApiClient,
    private readonly resultsRoot: HTMLElement,
    private readonly doc: Document,
    private readonly onRender: (state: AppState) => void = () => {},
  ) {}

  dispatch(event: AppEvent): void {
    this.state = reduce(this.state, event);
    this.render();
  }

  render(): void {
    this.resultsRoot.replaceChildren(renderResults(this.state, this.doc));
    const canvas = this.resultsRoot.querySelector<HTMLCanvasElement>("canvas.scatter");
    const plot = this.state.visualize.response;
    if (canvas && plot) {
      drawScatter(canvas, plot.points, fitTransform(plot.points, canvas.width, canvas.height), null);
    }
    this.onRender(this.state);
  }

  async start(): Promise<void> {
    const listing = await this.api.models();
    this.dispatch({
      kind: "models-loaded",
      models: listing.models,
      defaultModel: listing.default,
    });
  }

  selectTool(tool: Tool): void {
    this.dispatch({ kind: "tool-selected", tool });
  }

  private withModel<T extends { model?: string }>(request: T): T {
    return { ...request, model: request.model ?? this.state.selectedModel ?? undefined };
  }

  private async run(tool: Tool, request: unknown, call: () => Promise<unknown>): Promise<void> {
    const id = this.state.nextRequestId;
    this.dispatch({ kind: "request-started", tool, request, id });
    try {
      const response = await call();
      this.dispatch({ kind: "response-received", tool, id, response });
    } catch (error) {
      const message = error instanceof Error ? error.message : String(error);
      this.dispatch({ kind: "request-failed", tool, id, message });
    }
  }

  submitAnalogy(request: AnalogyRequest): Promise<void> {
    const body = this.withModel(request);
    return this.run("analogy", body, () => this.api.analogy(body));
  }

  submitSimilarity(request: SimilarityRequest): Promise<void> {
    const body = this.withModel(request);
    return this.run("similarity", body, () => this.api.similarity(body));
  }

  submitNeighbors(request: NeighborsRequest): Promise<void> {
    const body = this.withModel(request);
    return this.run("neighbors", body, () => this.api.neighbors(body));
  }

  submitVisualize(request: VisualizeRequest): Promise<void> {
    const body = this.withModel(request);
    return this.run("visualize", body, () => this.api.visualize(body));
  }

  /** The feedback loop: any result word pivots into the neighbors view. */
  pivotToNeighbors(word: string, k = 10): Promise<void> {
    this.selectTool("neighbors");
    return this.submitNeighbors({ word, k });
  }

  /** Switching models re-runs the active tool's last request. */
  async selectModel(model: string): Promise<void> {
    this.dispatch({ kind: "model-selected", model });
    const tool = this.state.activeTool;
    const last = this.state[tool].request;
    if (!last) return;
    const rerun = { ...last, model };
    switch (tool) {
      case "analogy":
        return this.submitAnalogy(rerun as AnalogyRequest);
      case "similarity":
        return this.submitSimilarity(rerun as SimilarityRequest);
      case "neighbors":
        return this.submitNeighbors(rerun as NeighborsRequest);
      case "visualize":
        return this.submitVisualize(rerun as VisualizeRequest);
    }
  }
}
