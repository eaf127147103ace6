// Client-side graph-ID codec and pure graph edits.
//
// The service is the authority on graph state, but edits (toggle an
// edge, add or delete a vertex) are plain recodings of the adjacency
// matrix, so the client computes the target ID itself and then loads
// it back from the service. The layout mirrors the engine: "<n>:<hex>"
// with the strict upper triangle row by row, most significant bit
// first, zero-padded to whole hex digits.

import { GraphDoc } from "./types.js";

export const N_MAX = 32;

export function hexLength(n: number): number {
  return Math.ceil((n * (n - 1)) / 2 / 4);
}

function pairIndex(n: number, i: number, j: number): number {
  // rank of the pair (i, j), i < j, in row-major upper-triangle order
  const before = ((i - 1) * (2 * n - i)) / 2;
  return before + (j - i - 1);
}

export function encodeGraphId(g: GraphDoc): string {
  const nBits = (g.n * (g.n - 1)) / 2;
  const bits = new Uint8Array(nBits);
  for (const [i, j] of g.edges) {
    const [a, b] = i < j ? [i, j] : [j, i];
    bits[pairIndex(g.n, a, b)] = 1;
  }
  let body = "";
  for (let pos = 0; pos < hexLength(g.n) * 4; pos += 4) {
    let nibble = 0;
    for (let k = 0; k < 4; k++) {
      nibble = (nibble << 1) | (bits[pos + k] ?? 0);
    }
    body += nibble.toString(16);
  }
  return `${g.n}:${body}`;
}

export function decodeGraphId(id: string): GraphDoc {
  const match = /^([1-9][0-9]*):([0-9a-fA-F]*)$/.exec(id);
  if (!match) throw new Error(`malformed graph ID ${JSON.stringify(id)}`);
  const n = parseInt(match[1], 10);
  if (n < 1 || n > N_MAX) throw new Error(`vertex count ${n} out of range 1..${N_MAX}`);
  const body = match[2];
  if (body.length !== hexLength(n)) {
    throw new Error(`graph ID body must be ${hexLength(n)} hex digits, got ${body.length}`);
  }
  const edges: [number, number][] = [];
  let pos = 0;
  for (let i = 1; i <= n; i++) {
    for (let j = i + 1; j <= n; j++, pos++) {
      const nibble = parseInt(body[pos >> 2], 16);
      if ((nibble >> (3 - (pos & 3))) & 1) edges.push([i, j]);
    }
  }
  // everything after the last pair must be zero padding
  for (let tail = pos; tail < body.length * 4; tail++) {
    const nibble = parseInt(body[tail >> 2], 16);
    if ((nibble >> (3 - (tail & 3))) & 1) throw new Error(`graph ID ${id} has nonzero padding`);
  }
  return { n, edges };
}

// -- pure edits (the new graph's ID is what gets loaded) --

export function toggleEdge(g: GraphDoc, i: number, j: number): GraphDoc {
  if (i === j) throw new Error("loop edges are not allowed");
  const [a, b] = i < j ? [i, j] : [j, i];
  const kept = g.edges.filter(([x, y]) => !(x === a && y === b));
  if (kept.length === g.edges.length) kept.push([a, b]);
  return { n: g.n, edges: sortEdges(kept) };
}

export function addVertex(g: GraphDoc): GraphDoc {
  if (g.n >= N_MAX) throw new Error(`at most ${N_MAX} vertices`);
  return { n: g.n + 1, edges: g.edges.slice() };
}

export function deleteVertex(g: GraphDoc, v: number): GraphDoc {
  if (g.n <= 1) throw new Error("cannot delete the last vertex");
  const shift = (x: number) => (x > v ? x - 1 : x);
  const edges = g.edges
    .filter(([i, j]) => i !== v && j !== v)
    .map(([i, j]) => [shift(i), shift(j)] as [number, number]);
  return { n: g.n - 1, edges: sortEdges(edges) };
}

export function hasEdge(g: GraphDoc, i: number, j: number): boolean {
  const [a, b] = i < j ? [i, j] : [j, i];
  return g.edges.some(([x, y]) => x === a && y === b);
}

export function sortEdges(edges: [number, number][]): [number, number][] {
  return edges.slice().sort((p, q) => (p[0] - q[0]) || (p[1] - q[1]));
}
