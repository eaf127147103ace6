// DOM layer. All the math lives in the imported modules; this file turns
// store state into elements and user gestures back into store calls.

import { histogramBars } from "./decay.js";
import {
  PREDEFINED_KINDS,
  PredefinedKind,
  distillationPair,
  predefinedGraph,
  vertexParities,
} from "./derive.js";
import { N_MAX, encodeGraphId, hasEdge } from "./graphId.js";
import {
  DEFAULT_OPTIONS,
  LayoutNode,
  Viewport,
  applyView,
  circleLayout,
  invertView,
  step,
  zoomToFit,
} from "./layout.js";
import { Store, UiState } from "./state.js";
import { GraphDoc } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const VIEW_W = 640;
const VIEW_H = 480;
const NODE_RADIUS = 14;

// Vertex parity colors (even red, odd blue) are deliberately the inverse
// of the histogram bar colors: a vertex of odd degree contributes to the
// even sectors and vice versa.
const VERTEX_EVEN_COLOR = "#c0392b";
const VERTEX_ODD_COLOR = "#3572b0";
const VERTEX_PLAIN_COLOR = "#5c6b7a";
const PAIR_HIGHLIGHT_COLOR = "#f1c40f";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = "",
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

function svgEl(tag: string): SVGElement {
  return document.createElementNS(SVG_NS, tag);
}

function button(label: string, onClick: () => void, className = ""): HTMLButtonElement {
  const b = el("button", className, label);
  b.type = "button";
  b.addEventListener("click", onClick);
  return b;
}

function checkbox(label: string, onChange: (value: boolean) => void): {
  wrap: HTMLLabelElement;
  input: HTMLInputElement;
} {
  const wrap = el("label", "check");
  const input = el("input");
  input.type = "checkbox";
  input.addEventListener("change", () => onChange(input.checked));
  wrap.append(input, document.createTextNode(" " + label));
  return { wrap, input };
}

function numberInput(value: number, min: number, max: number, stepSize: number): HTMLInputElement {
  const input = el("input");
  input.type = "number";
  input.min = String(min);
  input.max = String(max);
  input.step = String(stepSize);
  input.value = String(value);
  return input;
}

function formatBarValue(v: number): string {
  if (Number.isInteger(v)) return String(v);
  if (v >= 100) return v.toFixed(0);
  return Number(v.toPrecision(3)).toString();
}

function copyText(text: string): void {
  if (navigator.clipboard && window.isSecureContext) {
    void navigator.clipboard.writeText(text);
  } else {
    window.prompt("copy with Ctrl+C:", text);
  }
}

// -- one shared context menu ------------------------------------------------

interface MenuItem {
  label: string;
  action: () => void;
}

let openMenuEl: HTMLDivElement | null = null;

function closeMenu(): void {
  if (openMenuEl) {
    openMenuEl.remove();
    openMenuEl = null;
  }
}

function openMenu(items: MenuItem[], x: number, y: number): void {
  closeMenu();
  const menu = el("div", "context-menu");
  for (const item of items) {
    const row = button(item.label, () => {
      closeMenu();
      item.action();
    }, "context-menu-item");
    menu.append(row);
  }
  menu.style.left = `${x}px`;
  menu.style.top = `${y}px`;
  document.body.append(menu);
  openMenuEl = menu;
}

document.addEventListener("pointerdown", (event) => {
  if (openMenuEl && !(event.target instanceof Node && openMenuEl.contains(event.target))) {
    closeMenu();
  }
});
document.addEventListener("keydown", (event) => {
  if (event.key === "Escape") closeMenu();
});

// -- the app ------------------------------------------------------------------

export function buildApp(root: HTMLElement, store: Store): void {
  // ---- toolbar
  const toolbar = el("header", "toolbar");

  const kindSelect = el("select");
  for (const kind of PREDEFINED_KINDS) {
    const option = el("option", "", kind);
    option.value = kind;
    kindSelect.append(option);
  }
  kindSelect.value = "star";
  const kindN = numberInput(8, 1, N_MAX, 1);
  const loadKind = button("load", () => {
    const n = clampInt(kindN, 1, N_MAX);
    const doc = predefinedGraph(kindSelect.value as PredefinedKind, n);
    void store.loadGraph(encodeGraphId(doc));
  });
  const kindGroup = el("span", "group");
  kindGroup.append(el("span", "group-label", "predefined"), kindSelect, kindN, loadKind);

  const randomN = numberInput(7, 1, N_MAX, 1);
  const randomP = numberInput(0.5, 0, 1, 0.05);
  const randomSeed = numberInput(1, 0, 2 ** 31 - 1, 1);
  const loadRandom = button("random", () => {
    void store.loadRandom(
      clampInt(randomN, 1, N_MAX),
      Number(randomP.value),
      clampInt(randomSeed, 0, 2 ** 31 - 1),
    );
    randomSeed.value = String(clampInt(randomSeed, 0, 2 ** 31 - 1) + 1);
  });
  const randomGroup = el("span", "group");
  randomGroup.append(
    el("span", "group-label", "random n/p/seed"),
    randomN,
    randomP,
    randomSeed,
    loadRandom,
  );

  const idInput = el("input", "id-input");
  idInput.type = "text";
  idInput.spellcheck = false;
  idInput.placeholder = "graph ID";
  const loadId = button("open", () => void store.loadGraph(idInput.value.trim()));
  idInput.addEventListener("keydown", (event) => {
    if (event.key === "Enter") void store.loadGraph(idInput.value.trim());
  });
  const copyId = button("copy ID", () => copyText(store.getState().graphId));
  const copyLink = button("copy link", () => {
    const url = new URL(window.location.href);
    url.searchParams.set("graph", store.getState().graphId);
    copyText(url.toString());
  });
  const idGroup = el("span", "group");
  idGroup.append(el("span", "group-label", "graph ID"), idInput, loadId, copyId, copyLink);

  toolbar.append(kindGroup, randomGroup, idGroup);

  // ---- banner (errors / loading)
  const banner = el("div", "banner");

  // ---- graph panel
  const graphPanel = el("section", "panel graph-panel");
  const graphControls = el("div", "panel-controls");
  const lock = checkbox("freeze layout", (value) => store.setToggle("forceLayoutLocked", value));
  const parity = checkbox("degree parity colors", (value) =>
    store.setToggle("parityColoring", value),
  );
  const pairBox = checkbox("distillation pair", (value) =>
    store.setToggle("distillationHighlight", value),
  );
  const fit = button("zoom to fit", () => {
    view = zoomToFit(positions(), VIEW_W, VIEW_H);
  });
  const addVertexBtn = button("add vertex", () => void store.addVertex());
  graphControls.append(lock.wrap, parity.wrap, pairBox.wrap, fit, addVertexBtn);

  const svg = svgEl("svg") as SVGSVGElement;
  svg.setAttribute("viewBox", `0 0 ${VIEW_W} ${VIEW_H}`);
  svg.classList.add("graph-svg");
  const edgeLayer = svgEl("g");
  const nodeLayer = svgEl("g");
  svg.append(edgeLayer, nodeLayer);

  const hint = el("div", "hint");
  graphPanel.append(graphControls, svg, hint);

  // ---- matrix panel
  const matrixPanel = el("section", "panel matrix-panel");
  matrixPanel.append(el("h2", "", "adjacency matrix"));
  const matrixHolder = el("div", "matrix-holder");
  matrixPanel.append(matrixHolder);

  // ---- properties panel
  const propsPanel = el("section", "panel props-panel");
  propsPanel.append(el("h2", "", "graph"));
  const propsBody = el("dl", "props");
  propsPanel.append(propsBody);

  // ---- histogram panel
  const sldPanel = el("section", "panel sld-panel");
  sldPanel.append(el("h2", "", "sector length distribution"));
  const bars = el("div", "bars");
  const noiseRow = el("div", "noise-row");
  const noiseSlider = el("input");
  noiseSlider.type = "range";
  noiseSlider.min = "0";
  noiseSlider.max = "1";
  noiseSlider.step = "0.001";
  noiseSlider.value = "0";
  noiseSlider.addEventListener("input", () => store.setNoise(Number(noiseSlider.value)));
  const noiseReadout = el("span", "noise-readout", "p = 0.000");
  noiseRow.append(el("span", "", "local depolarizing noise"), noiseSlider, noiseReadout);
  const forceBox = el("div", "force-box");
  sldPanel.append(bars, noiseRow, forceBox);

  // ---- thresholds panel
  const thresholdsPanel = el("section", "panel thresholds-panel");
  thresholdsPanel.append(el("h2", "", "entanglement thresholds"));
  const thresholdsBody = el("dl", "props");
  thresholdsPanel.append(thresholdsBody);

  // ---- stabilizers panel
  const stabilizersPanel = el("section", "panel stabilizers-panel");
  stabilizersPanel.append(el("h2", "", "stabilizer group"));
  const stabilizersNote = el("div", "muted");
  const stabilizersList = el("pre", "stabilizers");
  stabilizersPanel.append(stabilizersNote, stabilizersList);

  const main = el("main", "layout");
  const left = el("div", "column");
  left.append(graphPanel, matrixPanel);
  const right = el("div", "column side");
  right.append(propsPanel, sldPanel, thresholdsPanel, stabilizersPanel);
  main.append(left, right);
  root.append(toolbar, banner, main);

  // ---- scene state (positions live here, not in the store)
  let nodes: LayoutNode[] = [];
  let view: Viewport = { scale: 1, tx: 0, ty: 0 };
  let edgeSource: number | null = null;
  let dragging = false;
  let sceneKey = "";
  let lines: { shape: SVGLineElement; i: number; j: number }[] = [];
  const dots = new Map<number, { group: SVGGElement; circle: SVGCircleElement; label: SVGTextElement }>();

  function positions(): { x: number; y: number }[] {
    return nodes;
  }

  function svgPoint(event: MouseEvent): [number, number] {
    const rect = svg.getBoundingClientRect();
    const x = ((event.clientX - rect.left) * VIEW_W) / rect.width;
    const y = ((event.clientY - rect.top) * VIEW_H) / rect.height;
    return invertView(view, x, y);
  }

  function syncNodes(graph: GraphDoc): void {
    const prev = new Map(nodes.map((node) => [node.v, node]));
    nodes = circleLayout(graph.n).map((fresh) => prev.get(fresh.v) ?? fresh);
  }

  function setEdgeSource(v: number | null): void {
    edgeSource = v;
    hint.textContent =
      v === null ? "" : `edge mode: click another vertex to toggle the edge with ${v} (Esc cancels)`;
    for (const [vertex, dot] of dots) {
      dot.group.classList.toggle("edge-source", vertex === v);
    }
  }

  document.addEventListener("keydown", (event) => {
    if (event.key === "Escape") setEdgeSource(null);
  });

  function vertexMenu(v: number, x: number, y: number): void {
    openMenu(
      [
        { label: `local complementation at ${v}`, action: () => void store.localComplement(v) },
        { label: `toggle edge from ${v}…`, action: () => setEdgeSource(v) },
        { label: `delete vertex ${v}`, action: () => void store.deleteVertex(v) },
      ],
      x,
      y,
    );
  }

  function rebuildScene(state: UiState): void {
    const graph = state.graph;
    edgeLayer.textContent = "";
    nodeLayer.textContent = "";
    lines = [];
    dots.clear();
    if (!graph) return;

    const parities = vertexParities(state.properties?.degreeSequence ?? []);
    const pair = state.toggles.distillationHighlight
      ? distillationPair(graph, state.properties?.degreeSequence ?? [])
      : null;

    for (const [i, j] of graph.edges) {
      const shape = svgEl("line") as SVGLineElement;
      const inPair = pair !== null && pair[0] === i && pair[1] === j;
      shape.setAttribute("stroke", inPair ? PAIR_HIGHLIGHT_COLOR : "#99a3ad");
      shape.setAttribute("stroke-width", inPair ? "5" : "2.5");
      edgeLayer.append(shape);
      lines.push({ shape, i, j });
    }

    for (let v = 1; v <= graph.n; v++) {
      const group = svgEl("g") as SVGGElement;
      group.classList.add("vertex");
      const circle = svgEl("circle") as SVGCircleElement;
      circle.setAttribute("r", String(NODE_RADIUS));
      let fill = VERTEX_PLAIN_COLOR;
      if (state.toggles.parityColoring && parities[v - 1]) {
        fill = parities[v - 1] === "even" ? VERTEX_EVEN_COLOR : VERTEX_ODD_COLOR;
      }
      circle.setAttribute("fill", fill);
      if (pair !== null && (pair[0] === v || pair[1] === v)) {
        circle.setAttribute("stroke", PAIR_HIGHLIGHT_COLOR);
        circle.setAttribute("stroke-width", "4");
      }
      const label = svgEl("text") as SVGTextElement;
      label.textContent = String(v);
      label.setAttribute("text-anchor", "middle");
      label.setAttribute("dy", "0.35em");
      group.append(circle, label);
      nodeLayer.append(group);
      dots.set(v, { group, circle, label });
      wireVertex(group, v);
    }
  }

  function wireVertex(group: SVGGElement, v: number): void {
    group.addEventListener("contextmenu", (event) => {
      event.preventDefault();
      event.stopPropagation();
      vertexMenu(v, event.clientX, event.clientY);
    });
    group.addEventListener("click", (event) => {
      event.stopPropagation();
      if (edgeSource !== null && edgeSource !== v) {
        const source = edgeSource;
        setEdgeSource(null);
        void store.toggleEdge(source, v);
      } else if (edgeSource === v) {
        setEdgeSource(null);
      }
    });
    group.addEventListener("pointerdown", (event) => {
      if (event.button !== 0) return;
      const node = nodes.find((candidate) => candidate.v === v);
      if (!node) return;
      event.stopPropagation();
      group.setPointerCapture(event.pointerId);
      node.pinned = true;
      dragging = true;
      let moved = false;
      const onMove = (moveEvent: PointerEvent) => {
        const [x, y] = svgPoint(moveEvent);
        if (Math.hypot(x - node.x, y - node.y) > 2) moved = true;
        node.x = x;
        node.y = y;
        node.vx = 0;
        node.vy = 0;
      };
      const onUp = (upEvent: PointerEvent) => {
        group.removeEventListener("pointermove", onMove);
        group.removeEventListener("pointerup", onUp);
        group.releasePointerCapture(upEvent.pointerId);
        node.pinned = false;
        dragging = false;
        // a drag should not count as an edge-mode click
        if (moved) upEvent.preventDefault();
      };
      group.addEventListener("pointermove", onMove);
      group.addEventListener("pointerup", onUp);
    });
  }

  svg.addEventListener("contextmenu", (event) => {
    event.preventDefault();
    openMenu([{ label: "add vertex", action: () => void store.addVertex() }], event.clientX, event.clientY);
  });
  svg.addEventListener("click", () => setEdgeSource(null));

  function renderFrame(): void {
    const state = store.getState();
    if (state.graph && !state.toggles.forceLayoutLocked && !dragging) {
      step(nodes, state.graph.edges, DEFAULT_OPTIONS);
    }
    if (!dragging && nodes.length > 0) {
      const target = zoomToFit(positions(), VIEW_W, VIEW_H);
      view = {
        scale: view.scale + 0.15 * (target.scale - view.scale),
        tx: view.tx + 0.15 * (target.tx - view.tx),
        ty: view.ty + 0.15 * (target.ty - view.ty),
      };
    }
    const at = new Map(nodes.map((node) => [node.v, applyView(view, node.x, node.y)]));
    for (const { shape, i, j } of lines) {
      const p = at.get(i);
      const q = at.get(j);
      if (!p || !q) continue;
      shape.setAttribute("x1", String(p[0]));
      shape.setAttribute("y1", String(p[1]));
      shape.setAttribute("x2", String(q[0]));
      shape.setAttribute("y2", String(q[1]));
    }
    for (const [v, dot] of dots) {
      const p = at.get(v);
      if (!p) continue;
      dot.circle.setAttribute("cx", String(p[0]));
      dot.circle.setAttribute("cy", String(p[1]));
      dot.label.setAttribute("x", String(p[0]));
      dot.label.setAttribute("y", String(p[1]));
    }
    window.requestAnimationFrame(renderFrame);
  }
  window.requestAnimationFrame(renderFrame);

  // ---- panels ---------------------------------------------------------------

  function renderMatrix(state: UiState): void {
    matrixHolder.textContent = "";
    const graph = state.graph;
    if (!graph) return;
    const table = el("table", "matrix");
    const head = el("tr");
    head.append(el("th"));
    for (let j = 1; j <= graph.n; j++) head.append(el("th", "", String(j)));
    table.append(head);
    for (let i = 1; i <= graph.n; i++) {
      const row = el("tr");
      row.append(el("th", "", String(i)));
      for (let j = 1; j <= graph.n; j++) {
        const set = i !== j && hasEdge(graph, i, j);
        const cell = el("td", set ? "cell set" : "cell", i === j ? "·" : set ? "1" : "0");
        if (i !== j) {
          cell.addEventListener("click", () => void store.toggleEdge(i, j));
          cell.title = `toggle edge {${Math.min(i, j)}, ${Math.max(i, j)}}`;
        }
        row.append(cell);
      }
      table.append(row);
    }
    matrixHolder.append(table);
  }

  function propRow(body: HTMLDListElement, name: string, value: string): void {
    body.append(el("dt", "", name), el("dd", "", value));
  }

  function renderProps(state: UiState): void {
    propsBody.textContent = "";
    const props = state.properties;
    if (!props) return;
    propRow(propsBody, "graph ID", state.graphId);
    propRow(propsBody, "vertices", String(props.vertexCount));
    propRow(propsBody, "edges", String(props.edgeCount));
    propRow(
      propsBody,
      "components",
      `${props.componentCount}${props.connected ? " (connected)" : ""}`,
    );
    propRow(propsBody, "isolated vertices", String(props.isolatedVertexCount));
    propRow(propsBody, "degrees", props.degreeSequence.join(", "));
    propRow(propsBody, "SLD type", props.sldType);
  }

  function renderHistogram(state: UiState): void {
    bars.textContent = "";
    forceBox.textContent = "";
    noiseReadout.textContent = `p = ${state.noise.toFixed(3)}`;
    if (state.needsForce) {
      forceBox.append(
        el(
          "div",
          "muted",
          "this graph has a component above the automatic size limit; computing may take a while",
        ),
        button("compute anyway", () => void store.forceCompute(), "force-button"),
      );
      return;
    }
    const sld = state.sld;
    if (!sld) {
      bars.append(el("div", "muted", state.loading ? "computing…" : "no distribution yet"));
      return;
    }
    const chart = histogramBars(sld.A, state.noise);
    const showLabels = chart.length <= 17;
    for (const bar of chart) {
      const cellWrap = el("div", "bar-slot");
      const value = el("div", "bar-value", showLabels ? formatBarValue(bar.value) : "");
      const fill = el("div", "bar-fill");
      fill.style.height = `${Math.round(bar.height * 180)}px`;
      fill.style.background = bar.color;
      fill.title = `A_${bar.k} = ${formatBarValue(bar.value)}`;
      const tick = el("div", "bar-tick", String(bar.k));
      cellWrap.append(value, fill, tick);
      bars.append(cellWrap);
    }
  }

  function renderThresholds(state: UiState): void {
    thresholdsBody.textContent = "";
    const report = state.thresholds;
    if (!report) {
      thresholdsBody.append(el("dd", "muted", state.needsForce ? "awaiting compute" : "–"));
      return;
    }
    propRow(thresholdsBody, "n-sector", report.nSector.toFixed(4));
    propRow(thresholdsBody, "majorization", report.majorization.toFixed(4));
    propRow(thresholdsBody, "distillation", report.distillation.toFixed(4));
  }

  function renderStabilizers(state: UiState): void {
    stabilizersList.textContent = "";
    if (state.stabilizers.length === 0) {
      stabilizersNote.textContent = "not enumerated for this graph";
      return;
    }
    stabilizersNote.textContent =
      state.stabilizerTotal > state.stabilizers.length
        ? `first ${state.stabilizers.length} of ${state.stabilizerTotal}`
        : `all ${state.stabilizerTotal}`;
    stabilizersList.textContent = state.stabilizers
      .map((s) => `${s.sign < 0 ? "-" : " "}${s.paulis}`)
      .join("\n");
  }

  function renderBanner(state: UiState): void {
    banner.textContent = state.error ?? (state.loading ? "computing…" : "");
    banner.classList.toggle("error", state.error !== null);
    banner.classList.toggle("shown", state.error !== null || state.loading);
  }

  // ---- subscription ----------------------------------------------------------

  store.subscribe((state) => {
    const key = `${state.graphId}|${JSON.stringify(state.toggles)}`;
    if (key !== sceneKey) {
      sceneKey = key;
      if (state.graph) syncNodes(state.graph);
      rebuildScene(state);
      renderMatrix(state);
      setEdgeSource(null);
    }
    if (document.activeElement !== idInput) idInput.value = state.graphId;
    lock.input.checked = state.toggles.forceLayoutLocked;
    parity.input.checked = state.toggles.parityColoring;
    pairBox.input.checked = state.toggles.distillationHighlight;
    renderBanner(state);
    renderProps(state);
    renderHistogram(state);
    renderThresholds(state);
    renderStabilizers(state);
  });
}

function clampInt(input: HTMLInputElement, min: number, max: number): number {
  const value = Math.round(Number(input.value) || min);
  return Math.min(max, Math.max(min, value));
}
