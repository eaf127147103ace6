import { ApiClient } from "./api.js";
import { predefinedGraph } from "./derive.js";
import { encodeGraphId } from "./graphId.js";
import { Store, graphIdFromUrl } from "./state.js";
import { buildApp } from "./ui.js";

const DEFAULT_GRAPH_ID = encodeGraphId(predefinedGraph("star", 8));

const store = new Store(new ApiClient());
const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");
buildApp(root, store);

// keep ?graph= in the address bar pointing at what is on screen
let shownId = "";
store.subscribe((state) => {
  if (state.graphId && state.graphId !== shownId) {
    shownId = state.graphId;
    const url = new URL(window.location.href);
    url.searchParams.set("graph", state.graphId);
    window.history.replaceState(null, "", url.toString());
  }
});

void store.loadGraph(graphIdFromUrl(window.location.href) ?? DEFAULT_GRAPH_ID);
