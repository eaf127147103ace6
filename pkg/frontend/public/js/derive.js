// Client-side derivations from the wire documents: degree parities for
// vertex coloring, the preferred distillation edge, and the predefined
// graph families (built locally, then loaded by ID like any other edit).
import { sortEdges } from "./graphId.js";
export function vertexParities(degreeSequence) {
    return degreeSequence.map((d) => (d % 2 === 0 ? "even" : "odd"));
}
/**
 * Edge {i,j} maximizing deg(i)+deg(j), lexicographically first among
 * ties; null for an edgeless graph.
 */
export function distillationPair(graph, degreeSequence) {
    let best = null;
    let bestSum = -1;
    for (const [i, j] of sortEdges(graph.edges)) {
        const s = degreeSequence[i - 1] + degreeSequence[j - 1];
        if (s > bestSum) {
            best = [i, j];
            bestSum = s;
        }
    }
    return best;
}
export const PREDEFINED_KINDS = ["edgeless", "complete", "ring", "path", "star"];
export function predefinedGraph(kind, n) {
    const edges = [];
    switch (kind) {
        case "edgeless":
            break;
        case "complete":
            for (let i = 1; i <= n; i++) {
                for (let j = i + 1; j <= n; j++)
                    edges.push([i, j]);
            }
            break;
        case "path":
            for (let i = 1; i < n; i++)
                edges.push([i, i + 1]);
            break;
        case "ring":
            for (let i = 1; i < n; i++)
                edges.push([i, i + 1]);
            if (n >= 3)
                edges.push([1, n]);
            break;
        case "star":
            for (let j = 2; j <= n; j++)
                edges.push([1, j]);
            break;
    }
    return { n, edges: sortEdges(edges) };
}
