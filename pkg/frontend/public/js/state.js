// Single UI store. Every mutation round-trips through the service and
// re-renders from the authoritative response; stale in-flight responses
// are dropped (latest requested graph wins).
import { ApiError } from "./api.js";
import * as codec from "./graphId.js";
export const STABILIZER_DISPLAY_LIMIT = 64;
function initialState() {
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
    constructor(api) {
        this.api = api;
        this.state = initialState();
        this.listeners = [];
        this.generation = 0;
    }
    getState() {
        return this.state;
    }
    subscribe(listener) {
        this.listeners.push(listener);
        return () => {
            this.listeners = this.listeners.filter((l) => l !== listener);
        };
    }
    patch(partial) {
        this.state = { ...this.state, ...partial };
        for (const listener of this.listeners)
            listener(this.state);
    }
    /** Load a graph by ID; analysis panels follow, force-gated ones may defer. */
    async loadGraph(id) {
        const generation = ++this.generation;
        this.patch({ loading: true, error: null });
        try {
            const doc = await this.api.getGraph(id);
            if (generation !== this.generation)
                return;
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
        }
        catch (err) {
            if (generation !== this.generation)
                return;
            this.patch({ error: describe(err) });
        }
        finally {
            if (generation === this.generation)
                this.patch({ loading: false });
        }
    }
    /** Explicit user consent to compute a component above the auto limit. */
    async forceCompute() {
        const generation = this.generation;
        this.patch({ loading: true, error: null });
        try {
            await this.loadAnalysis(this.state.graphId, true, generation);
        }
        catch (err) {
            if (generation !== this.generation)
                return;
            this.patch({ error: describe(err) });
        }
        finally {
            if (generation === this.generation)
                this.patch({ loading: false });
        }
    }
    async loadAnalysis(id, force, generation) {
        const sldPromise = this.api.getSld(id, force);
        const thresholdsPromise = this.api.getThresholds(id, force);
        const stabilizersPromise = this.api.getStabilizers(id, STABILIZER_DISPLAY_LIMIT);
        // the companions fail alongside the SLD request; never re-report them
        thresholdsPromise.catch(() => undefined);
        stabilizersPromise.catch(() => undefined);
        try {
            const sld = await sldPromise;
            const thresholds = await thresholdsPromise;
            if (generation !== this.generation)
                return;
            this.patch({ sld, thresholds, needsForce: false });
        }
        catch (err) {
            if (generation !== this.generation)
                return;
            if (err instanceof ApiError && err.needsForce) {
                this.patch({ sld: null, thresholds: null, needsForce: true });
            }
            else {
                throw err;
            }
        }
        try {
            const stabilizers = await stabilizersPromise;
            if (generation !== this.generation)
                return;
            this.patch({
                stabilizers: stabilizers.stabilizers,
                stabilizerTotal: stabilizers.total,
            });
        }
        catch {
            // enumeration refused (cap) is non-fatal; the panel just stays empty
        }
    }
    setNoise(p) {
        this.patch({ noise: Math.min(1, Math.max(0, p)) });
    }
    setToggle(name, value) {
        this.patch({ toggles: { ...this.state.toggles, [name]: value } });
    }
    async loadRandom(n, p, seed) {
        try {
            const { id } = await this.api.randomGraph(n, p, seed);
            await this.loadGraph(id);
        }
        catch (err) {
            this.patch({ error: describe(err) });
        }
    }
    // -- edits: recode client-side, reload from the service --
    async toggleEdge(i, j) {
        if (!this.state.graph)
            return;
        try {
            await this.loadGraph(codec.encodeGraphId(codec.toggleEdge(this.state.graph, i, j)));
        }
        catch (err) {
            this.patch({ error: describe(err) });
        }
    }
    async addVertex() {
        if (!this.state.graph)
            return;
        try {
            await this.loadGraph(codec.encodeGraphId(codec.addVertex(this.state.graph)));
        }
        catch (err) {
            this.patch({ error: describe(err) });
        }
    }
    async deleteVertex(v) {
        if (!this.state.graph)
            return;
        try {
            await this.loadGraph(codec.encodeGraphId(codec.deleteVertex(this.state.graph, v)));
        }
        catch (err) {
            this.patch({ error: describe(err) });
        }
    }
    async localComplement(v) {
        try {
            const { id } = await this.api.localComplement(this.state.graphId, v);
            await this.loadGraph(id);
        }
        catch (err) {
            this.patch({ error: describe(err) });
        }
    }
}
function describe(err) {
    if (err instanceof ApiError)
        return `${err.message} (HTTP ${err.status})`;
    return err instanceof Error ? err.message : String(err);
}
/** Shareable URL that reopens the current graph. */
export function shareUrl(base, graphId) {
    const url = new URL(base);
    url.searchParams.set("graph", graphId);
    return url.toString();
}
/** Graph ID from a page URL, or null. */
export function graphIdFromUrl(href) {
    return new URL(href).searchParams.get("graph");
}
