// Typed client for the service API. The fetch function is injected so
// tests can run against canned responses.
export class ApiError extends Error {
    constructor(status, detail) {
        super(detail);
        this.status = status;
    }
    /** Component above the auto limit: the UI offers a force button. */
    get needsForce() {
        return this.status === 422;
    }
}
export class ApiClient {
    constructor(base = "/api/v1", fetchFn = (url, init) => fetch(url, init)) {
        this.base = base;
        this.fetchFn = fetchFn;
    }
    async request(path, init) {
        const response = await this.fetchFn(this.base + path, init);
        const text = await response.text();
        if (!response.ok) {
            let detail = text || response.statusText;
            try {
                detail = JSON.parse(text).detail ?? detail;
            }
            catch {
                // non-JSON error body; keep the raw text
            }
            throw new ApiError(response.status, detail);
        }
        return JSON.parse(text);
    }
    getGraph(id) {
        return this.request(`/graphs/${encodeURIComponent(id)}`);
    }
    getSld(id, force = false) {
        const query = force ? "?force=true" : "";
        return this.request(`/graphs/${encodeURIComponent(id)}/sld${query}`);
    }
    getThresholds(id, force = false) {
        const query = force ? "?force=true" : "";
        return this.request(`/graphs/${encodeURIComponent(id)}/thresholds${query}`);
    }
    getStabilizers(id, limit) {
        return this.request(`/graphs/${encodeURIComponent(id)}/stabilizers?limit=${limit}`);
    }
    localComplement(id, vertex) {
        return this.request(`/graphs/${encodeURIComponent(id)}/lc/${vertex}`, { method: "POST" });
    }
    randomGraph(n, p, seed) {
        return this.request(`/random?n=${n}&p=${p}&seed=${seed}`);
    }
    predefinedKinds() {
        return this.request(`/predefined`);
    }
}
