// Single UI store. Every mutation round-trips through the service and
// re-renders from the authoritative response; stale in-flight responses
// are dropped (latest requested graph wins).

import { ApiClient, ApiError } from "./api.js";
import * as codec from "./graphId.js";
import {
  GraphDoc,
  GraphProperties,
  SldResponse,
  StabilizerDoc,
  ThresholdsResponse,
} from "./types.js";

export const STABILIZER_DISPLAY_LIMIT = 64;

export interface Toggles {
  forceLayoutLocked: boolean;
  parityColoring: boolean;
  distillationHighlight: boolean;
}

export interface UiState {
  graphId: string;
  graph: GraphDoc | null;
  properties: GraphProperties | null;
  sld: SldResponse | null;
  thresholds: ThresholdsResponse | null;
  stabilizers: StabilizerDoc[];
  stabilizerTotal: number;
  /** component above the auto limit: offer an explicit compute button */
  needsForce: boolean;
  noise: number;
  toggles: Toggles;
  loading: boolean;
  error: string | null;
}

type Listener = (state: UiState) => void;

function initialState(): UiState {
  return {
    graphId: "",
    graph: null,
    properties: null,
    sld: null,
    thresholds: null,
    stabilizers: [],
    stabilizerTotal: 0,
    needsForce: false,
    noise: 0,
    toggles: {
      forceLayoutLocked: false,
      parityColoring: false,
      distillationHighlight: false,
    },
    loading: false,
    error: null,
  };
}

export class Store {
  private state: UiState = initialState();
  private listeners: Listener[] = [];
  private generation = 0;

  constructor(private readonly api: ApiClient) {}

  getState(): UiState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private patch(partial: Partial<UiState>): void {
    this.state = { ...this.state, ...partial };
    for (const listener of this.listeners) listener(this.state);
  }

  /** Load a graph by ID; analysis panels follow, force-gated ones may defer. */
  async loadGraph(id: string): Promise<void> {
    const generation = ++this.generation;
    this.patch({ loading: true, error: null });
    try {
      const doc = await this.api.getGraph(id);
      if (generation !== this.generation) return;
      this.patch({
        graphId: doc.id,
        graph: doc.graph,
        properties: doc.properties,
        sld: null,
        thresholds: null,
        stabilizers: [],
        stabilizerTotal: 0,
        needsForce: false,
      });
      await this.loadAnalysis(doc.id, false, generation);
    } catch (err) {
      if (generation !== this.generation) return;
      this.patch({ error: describe(err) });
    } finally {
      if (generation === this.generation) this.patch({ loading: false });
    }
  }

  /** Explicit user consent to compute a component above the auto limit. */
  async forceCompute(): Promise<void> {
    const generation = this.generation;
    this.patch({ loading: true, error: null });
    try {
      await this.loadAnalysis(this.state.graphId, true, generation);
    } catch (err) {
      if (generation !== this.generation) return;
      this.patch({ error: describe(err) });
    } finally {
      if (generation === this.generation) this.patch({ loading: false });
    }
  }

  private async loadAnalysis(id: string, force: boolean, generation: number): Promise<void> {
    const sldPromise = this.api.getSld(id, force);
    const thresholdsPromise = this.api.getThresholds(id, force);
    const stabilizersPromise = this.api.getStabilizers(id, STABILIZER_DISPLAY_LIMIT);
    // the companions fail alongside the SLD request; never re-report them
    thresholdsPromise.catch(() => undefined);
    stabilizersPromise.catch(() => undefined);
    try {
      const sld = await sldPromise;
      const thresholds = await thresholdsPromise;
      if (generation !== this.generation) return;
      this.patch({ sld, thresholds, needsForce: false });
    } catch (err) {
      if (generation !== this.generation) return;
      if (err instanceof ApiError && err.needsForce) {
        this.patch({ sld: null, thresholds: null, needsForce: true });
      } else {
        throw err;
      }
    }
    try {
      const stabilizers = await stabilizersPromise;
      if (generation !== this.generation) return;
      this.patch({
        stabilizers: stabilizers.stabilizers,
        stabilizerTotal: stabilizers.total,
      });
    } catch {
      // enumeration refused (cap) is non-fatal; the panel just stays empty
    }
  }

  setNoise(p: number): void {
    this.patch({ noise: Math.min(1, Math.max(0, p)) });
  }

  setToggle(name: keyof Toggles, value: boolean): void {
    this.patch({ toggles: { ...this.state.toggles, [name]: value } });
  }

  async loadRandom(n: number, p: number, seed: number): Promise<void> {
    try {
      const { id } = await this.api.randomGraph(n, p, seed);
      await this.loadGraph(id);
    } catch (err) {
      this.patch({ error: describe(err) });
    }
  }

  // -- edits: recode client-side, reload from the service --

  async toggleEdge(i: number, j: number): Promise<void> {
    if (!this.state.graph) return;
    try {
      await this.loadGraph(codec.encodeGraphId(codec.toggleEdge(this.state.graph, i, j)));
    } catch (err) {
      this.patch({ error: describe(err) });
    }
  }

  async addVertex(): Promise<void> {
    if (!this.state.graph) return;
    try {
      await this.loadGraph(codec.encodeGraphId(codec.addVertex(this.state.graph)));
    } catch (err) {
      this.patch({ error: describe(err) });
    }
  }

  async deleteVertex(v: number): Promise<void> {
    if (!this.state.graph) return;
    try {
      await this.loadGraph(codec.encodeGraphId(codec.deleteVertex(this.state.graph, v)));
    } catch (err) {
      this.patch({ error: describe(err) });
    }
  }

  async localComplement(v: number): Promise<void> {
    try {
      const { id } = await this.api.localComplement(this.state.graphId, v);
      await this.loadGraph(id);
    } catch (err) {
      this.patch({ error: describe(err) });
    }
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) return `${err.message} (HTTP ${err.status})`;
  return err instanceof Error ? err.message : String(err);
}

/** Shareable URL that reopens the current graph. */
export function shareUrl(base: string, graphId: string): string {
  const url = new URL(base);
  url.searchParams.set("graph", graphId);
  return url.toString();
}

/** Graph ID from a page URL, or null. */
export function graphIdFromUrl(href: string): string | null {
  return new URL(href).searchParams.get("graph");
}
