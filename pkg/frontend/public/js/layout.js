// Small force-directed layout: pairwise repulsion, springs on edges,
// a weak pull to the center, velocity damping. Deterministic given the
// initial placement, which puts vertices on a circle.
export const DEFAULT_OPTIONS = {
    width: 640,
    height: 480,
    springLength: 110,
    springStrength: 0.02,
    repulsion: 12000,
    centering: 0.005,
    damping: 0.85,
};
export function circleLayout(n, options = DEFAULT_OPTIONS) {
    const cx = options.width / 2;
    const cy = options.height / 2;
    const radius = Math.min(options.width, options.height) / 3;
    const nodes = [];
    for (let v = 1; v <= n; v++) {
        const angle = (2 * Math.PI * (v - 1)) / n - Math.PI / 2;
        nodes.push({
            v,
            x: cx + radius * Math.cos(angle),
            y: cy + radius * Math.sin(angle),
            vx: 0,
            vy: 0,
            pinned: false,
        });
    }
    return nodes;
}
/** Advance the simulation one tick, in place. No-op on a single node. */
export function step(nodes, edges, options = DEFAULT_OPTIONS) {
    const byVertex = new Map(nodes.map((node) => [node.v, node]));
    for (let a = 0; a < nodes.length; a++) {
        for (let b = a + 1; b < nodes.length; b++) {
            const p = nodes[a];
            const q = nodes[b];
            let dx = q.x - p.x;
            let dy = q.y - p.y;
            let d2 = dx * dx + dy * dy;
            if (d2 < 1) {
                // coincident nodes: nudge apart deterministically
                dx = 0.5 * (a + 1);
                dy = 0.5 * (b + 1);
                d2 = dx * dx + dy * dy;
            }
            const push = options.repulsion / d2;
            const d = Math.sqrt(d2);
            p.vx -= (push * dx) / d;
            p.vy -= (push * dy) / d;
            q.vx += (push * dx) / d;
            q.vy += (push * dy) / d;
        }
    }
    for (const [i, j] of edges) {
        const p = byVertex.get(i);
        const q = byVertex.get(j);
        if (!p || !q)
            continue;
        const dx = q.x - p.x;
        const dy = q.y - p.y;
        const d = Math.max(1, Math.hypot(dx, dy));
        const pull = options.springStrength * (d - options.springLength);
        p.vx += (pull * dx) / d;
        p.vy += (pull * dy) / d;
        q.vx -= (pull * dx) / d;
        q.vy -= (pull * dy) / d;
    }
    const cx = options.width / 2;
    const cy = options.height / 2;
    for (const node of nodes) {
        node.vx += (cx - node.x) * options.centering;
        node.vy += (cy - node.y) * options.centering;
        node.vx *= options.damping;
        node.vy *= options.damping;
        if (!node.pinned) {
            node.x += node.vx;
            node.y += node.vy;
        }
    }
}
export const IDENTITY_VIEW = { scale: 1, tx: 0, ty: 0 };
/** Transform that fits all nodes inside width x height with padding. */
export function zoomToFit(nodes, width, height, padding = 40) {
    if (nodes.length === 0)
        return IDENTITY_VIEW;
    const xs = nodes.map((n) => n.x);
    const ys = nodes.map((n) => n.y);
    const minX = Math.min(...xs);
    const maxX = Math.max(...xs);
    const minY = Math.min(...ys);
    const maxY = Math.max(...ys);
    const spanX = Math.max(maxX - minX, 1);
    const spanY = Math.max(maxY - minY, 1);
    const scale = Math.min((width - 2 * padding) / spanX, (height - 2 * padding) / spanY, 4);
    const tx = width / 2 - scale * (minX + maxX) / 2;
    const ty = height / 2 - scale * (minY + maxY) / 2;
    return { scale, tx, ty };
}
export function applyView(view, x, y) {
    return [view.scale * x + view.tx, view.scale * y + view.ty];
}
export function invertView(view, x, y) {
    return [(x - view.tx) / view.scale, (y - view.ty) / view.scale];
}
