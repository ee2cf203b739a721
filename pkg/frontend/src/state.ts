/** Pure view-state machine.
 *
 * The rendered UI is a function of this state alone, and the state is a
 * fold over the event list, so replaying a recorded session reproduces the
 * identical screen.  Each tool holds at most one in-flight request;
 * responses carry the request id that produced them and stale ids are
 * dropped.  A request resolves to either a response or an error, never
 * both: success clears the error, failure raises the banner while the
 * prior results stay visible.
 */

import type {
  AnalogyRequest,
  AnalogyResponse,
  ModelInfo,
  NeighborsRequest,
  NeighborsResponse,
  SimilarityRequest,
  SimilarityResponse,
  VisualizeRequest,
  VisualizeResponse,
} from "./types.js";

export type Tool = "analogy" | "similarity" | "neighbors" | "visualize";

export interface ToolState<Req, Res> {
  request: Req | null;
  response: Res | null;
  error: string | null;
  inFlightId: number | null;
}

export interface AppState {
  activeTool: Tool;
  models: ModelInfo[];
  selectedModel: string | null;
  nextRequestId: number;
  analogy: ToolState<AnalogyRequest, AnalogyResponse>;
  similarity: ToolState<SimilarityRequest, SimilarityResponse>;
  neighbors: ToolState<NeighborsRequest, NeighborsResponse>;
  visualize: ToolState<VisualizeRequest, VisualizeResponse>;
}

export type AppEvent =
  | { kind: "models-loaded"; models: ModelInfo[]; defaultModel: string }
  | { kind: "tool-selected"; tool: Tool }
  | { kind: "model-selected"; model: string }
  | { kind: "request-started"; tool: Tool; request: unknown; id: number }
  | { kind: "response-received"; tool: Tool; id: number; response: unknown }
  | { kind: "request-failed"; tool: Tool; id: number; message: string };

function emptyTool<Req, Res>(): ToolState<Req, Res> {
  return { request: null, response: null, error: null, inFlightId: null };
}

export function initialState(): AppState {
  return {
    activeTool: "analogy",
    models: [],
    selectedModel: null,
    nextRequestId: 1,
    analogy: emptyTool(),
    similarity: emptyTool(),
    neighbors: emptyTool(),
    visualize: emptyTool(),
  };
}

function withTool(state: AppState, tool: Tool, next: ToolState<unknown, unknown>): AppState {
  return { ...state, [tool]: next } as AppState;
}

export function reduce(state: AppState, event: AppEvent): AppState {
  switch (event.kind) {
    case "models-loaded":
      return {
        ...state,
        models: event.models,
        selectedModel: state.selectedModel ?? event.defaultModel,
      };
    case "tool-selected":
      return { ...state, activeTool: event.tool };
    case "model-selected":
      return { ...state, selectedModel: event.model };
    case "request-started": {
      const current = state[event.tool] as ToolState<unknown, unknown>;
      // a new submission supersedes whatever was in flight
      return withTool(
        { ...state, nextRequestId: Math.max(state.nextRequestId, event.id + 1) },
        event.tool,
        { ...current, request: event.request, inFlightId: event.id },
      );
    }
    case "response-received": {
      const current = state[event.tool] as ToolState<unknown, unknown>;
      if (current.inFlightId !== event.id) return state; // stale response
      return withTool(state, event.tool, {
        ...current,
        response: event.response,
        error: null,
        inFlightId: null,
      });
    }
    case "request-failed": {
      const current = state[event.tool] as ToolState<unknown, unknown>;
      if (current.inFlightId !== event.id) return state; // stale failure
      // keep the previous results visible next to the error banner
      return withTool(state, event.tool, {
        ...current,
        error: event.message,
        inFlightId: null,
      });
    }
  }
}

/** Fold a recorded session; the basis of the replay tests. */
export function replay(events: AppEvent[], from?: AppState): AppState {
  let state = from ?? initialState();
  for (const event of events) state = reduce(state, event);
  return state;
}
