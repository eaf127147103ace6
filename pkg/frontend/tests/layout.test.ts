import { expect, test } from "vitest";

import {
  DEFAULT_OPTIONS,
  applyView,
  circleLayout,
  invertView,
  step,
  zoomToFit,
} from "../src/layout.js";

test("initial placement is a centered circle of distinct points", () => {
  const nodes = circleLayout(8);
  expect(nodes.map((n) => n.v)).toEqual([1, 2, 3, 4, 5, 6, 7, 8]);
  const seen = new Set(nodes.map((n) => `${n.x.toFixed(3)},${n.y.toFixed(3)}`));
  expect(seen.size).toBe(8);
  const cx = nodes.reduce((s, n) => s + n.x, 0) / 8;
  const cy = nodes.reduce((s, n) => s + n.y, 0) / 8;
  expect(cx).toBeCloseTo(DEFAULT_OPTIONS.width / 2, 6);
  expect(cy).toBeCloseTo(DEFAULT_OPTIONS.height / 2, 6);
});

test("springs pull an edge's endpoints together", () => {
  const nodes = circleLayout(2);
  nodes[0].x = 100;
  nodes[0].y = 240;
  nodes[1].x = 560;
  nodes[1].y = 240;
  const before = Math.hypot(nodes[1].x - nodes[0].x, nodes[1].y - nodes[0].y);
  for (let i = 0; i < 120; i++) step(nodes, [[1, 2]]);
  const after = Math.hypot(nodes[1].x - nodes[0].x, nodes[1].y - nodes[0].y);
  expect(after).toBeLessThan(before);
});

test("repulsion separates unlinked nodes", () => {
  const nodes = circleLayout(2);
  nodes[0].x = 319;
  nodes[1].x = 321;
  nodes[0].y = nodes[1].y = 240;
  for (let i = 0; i < 60; i++) step(nodes, []);
  const distance = Math.hypot(nodes[1].x - nodes[0].x, nodes[1].y - nodes[0].y);
  expect(distance).toBeGreaterThan(30);
});

test("a pinned node does not move", () => {
  const nodes = circleLayout(3);
  nodes[0].pinned = true;
  const { x, y } = nodes[0];
  for (let i = 0; i < 50; i++) step(nodes, [[1, 2], [2, 3], [1, 3]]);
  expect(nodes[0].x).toBe(x);
  expect(nodes[0].y).toBe(y);
});

test("simulation settles instead of exploding", () => {
  const nodes = circleLayout(7);
  const edges = [[1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [6, 7], [1, 7]] as [number, number][];
  for (let i = 0; i < 600; i++) step(nodes, edges);
  for (const node of nodes) {
    expect(Math.hypot(node.vx, node.vy)).toBeLessThan(0.5);
    expect(Math.abs(node.x)).toBeLessThan(5000);
    expect(Math.abs(node.y)).toBeLessThan(5000);
  }
});

test("zoom-to-fit brings every node inside the padded frame", () => {
  const nodes = [
    { x: -200, y: 90 },
    { x: 1500, y: 700 },
    { x: 300, y: -40 },
  ];
  const view = zoomToFit(nodes, 640, 480, 40);
  for (const node of nodes) {
    const [x, y] = applyView(view, node.x, node.y);
    expect(x).toBeGreaterThanOrEqual(40 - 1e-9);
    expect(x).toBeLessThanOrEqual(600 + 1e-9);
    expect(y).toBeGreaterThanOrEqual(40 - 1e-9);
    expect(y).toBeLessThanOrEqual(440 + 1e-9);
  }
});

test("zoom-to-fit never magnifies beyond 4x", () => {
  const nodes = [
    { x: 0, y: 0 },
    { x: 2, y: 2 },
  ];
  expect(zoomToFit(nodes, 640, 480).scale).toBeLessThanOrEqual(4);
});

test("view transform round-trips", () => {
  const view = { scale: 2.5, tx: -31, ty: 12 };
  const [x, y] = applyView(view, 17, -4);
  const [backX, backY] = invertView(view, x, y);
  expect(backX).toBeCloseTo(17, 9);
  expect(backY).toBeCloseTo(-4, 9);
});
