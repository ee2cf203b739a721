/** Thin typed client over the five API endpoints.
 *
 * The fetch function is injected so tests can back the client with
 * recorded fixtures instead of a live server.
 */

import type {
  AnalogyRequest,
  AnalogyResponse,
  ApiErrorBody,
  ModelsResponse,
  NeighborsRequest,
  NeighborsResponse,
  SimilarityRequest,
  SimilarityResponse,
  VisualizeRequest,
  VisualizeResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly status: number;
  readonly token?: string;

  constructor(status: number, body: ApiErrorBody | null) {
    const token = body?.token;
    const detail =
      typeof body?.detail === "string" ? body.detail : JSON.stringify(body?.detail ?? "");
    super(token ? `unknown word: ${token}` : detail || `request failed (${status})`);
    this.status = status;
    this.token = token;
  }
}

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike,
    private readonly baseUrl: string = "",
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      let parsed: ApiErrorBody | null = null;
      try {
        parsed = (await response.json()) as ApiErrorBody;
      } catch {
        parsed = null;
      }
      throw new ApiError(response.status, parsed);
    }
    return (await response.json()) as T;
  }

  async models(): Promise<ModelsResponse> {
    const response = await this.fetchFn(this.baseUrl + "/api/models");
    if (!response.ok) throw new ApiError(response.status, null);
    return (await response.json()) as ModelsResponse;
  }

  analogy(request: AnalogyRequest): Promise<AnalogyResponse> {
    return this.post("/api/analogy", request);
  }

  similarity(request: SimilarityRequest): Promise<SimilarityResponse> {
    return this.post("/api/similarity", request);
  }

  neighbors(request: NeighborsRequest): Promise<NeighborsResponse> {
    return this.post("/api/neighbors", request);
  }

  visualize(request: VisualizeRequest): Promise<VisualizeResponse> {
    return this.post("/api/visualize", request);
  }
}
