// Typed client for the service API. The fetch function is injected so
// tests can run against canned responses.

import {
  GraphResponse,
  SldResponse,
  StabilizersResponse,
  ThresholdsResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(public readonly status: number, detail: string) {
    super(detail);
  }

  /** Component above the auto limit: the UI offers a force button. */
  get needsForce(): boolean {
    return this.status === 422;
  }
}

export class ApiClient {
  constructor(
    private readonly base: string = "/api/v1",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.base + path, init);
    const text = await response.text();
    if (!response.ok) {
      let detail = text || response.statusText;
      try {
        detail = JSON.parse(text).detail ?? detail;
      } catch {
        // non-JSON error body; keep the raw text
      }
      throw new ApiError(response.status, detail);
    }
    return JSON.parse(text) as T;
  }

  getGraph(id: string): Promise<GraphResponse> {
    return this.request(`/graphs/${encodeURIComponent(id)}`);
  }

  getSld(id: string, force = false): Promise<SldResponse> {
    const query = force ? "?force=true" : "";
    return this.request(`/graphs/${encodeURIComponent(id)}/sld${query}`);
  }

  getThresholds(id: string, force = false): Promise<ThresholdsResponse> {
    const query = force ? "?force=true" : "";
    return this.request(`/graphs/${encodeURIComponent(id)}/thresholds${query}`);
  }

  getStabilizers(id: string, limit: number): Promise<StabilizersResponse> {
    return this.request(`/graphs/${encodeURIComponent(id)}/stabilizers?limit=${limit}`);
  }

  localComplement(id: string, vertex: number): Promise<{ id: string }> {
    return this.request(`/graphs/${encodeURIComponent(id)}/lc/${vertex}`, { method: "POST" });
  }

  randomGraph(n: number, p: number, seed: number): Promise<{ id: string }> {
    return this.request(`/random?n=${n}&p=${p}&seed=${seed}`);
  }

  predefinedKinds(): Promise<{ kinds: string[] }> {
    return this.request(`/predefined`);
  }
}
