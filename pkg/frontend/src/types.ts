/** Wire types of the explorer API; field names match the server JSON. */

export interface ModelInfo {
  name: string;
  vocabSize: number;
  dim: number;
}

export interface ModelsResponse {
  models: ModelInfo[];
  default: string;
}

export interface ScoredWord {
  word: string;
  score: number;
}

export interface AnalogyRequest {
  model?: string;
  a: string;
  b: string;
  c: string;
  k: number;
}

export interface AnalogyResponse {
  model: string;
  elapsedMs: number;
  results: ScoredWord[];
}

export interface SimilarityRequest {
  model?: string;
  w1: string;
  w2: string;
}

export interface SimilarityResponse {
  model: string;
  elapsedMs: number;
  cosine: number;
}

export interface NeighborsRequest {
  model?: string;
  word: string;
  k: number;
}

export type NeighborsResponse = AnalogyResponse;

export interface VisualizeRequest {
  model?: string;
  word: string;
  n: number;
  k: number;
  seed: number;
}

export interface PlotPoint {
  word: string;
  x: number;
  y: number;
  cluster: number;
}

export interface VisualizeResponse {
  model: string;
  elapsedMs: number;
  word: string;
  points: PlotPoint[];
  klInitial: number;
  klFinal: number;
  inertia: number;
}

export interface ApiErrorBody {
  detail: unknown;
  token?: string;
}
