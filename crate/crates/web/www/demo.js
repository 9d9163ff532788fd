import init, { classifyLabeling, constructLabeling, productSet } from "./pkg/psl_web.js";

const $ = (id) => document.getElementById(id);
const SVG_NS = "http://www.w3.org/2000/svg";

function family(kind, n) {
  const v = Array.from({ length: n }, (_, i) => String.fromCharCode(97 + i));
  const edges = [];
  if (kind === "path" || kind === "cycle") {
    for (let i = 0; i + 1 < n; i++) edges.push([v[i], v[i + 1]]);
    if (kind === "cycle" && n > 2) edges.push([v[0], v[n - 1]]);
  } else if (kind === "complete") {
    for (let i = 0; i < n; i++) for (let j = i + 1; j < n; j++) edges.push([v[i], v[j]]);
  } else {
    for (let i = 1; i < n; i++) edges.push([v[0], v[i]]);
  }
  return { vertices: v, edges };
}

function fmtSet(items) {
  return "{" + items.join(",") + "}";
}

function svgEl(name, attrs, text) {
  const el = document.createElementNS(SVG_NS, name);
  for (const [k, val] of Object.entries(attrs)) el.setAttribute(k, val);
  if (text !== undefined) el.textContent = text;
  return el;
}

// Vertices on a circle; labels outside it, edge labels at midpoints.
function draw(graph, result) {
  const svg = $("drawing");
  svg.replaceChildren();
  const cx = 230, cy = 210, r = 140;
  const pos = {};
  graph.vertices.forEach((v, i) => {
    const t = (2 * Math.PI * i) / graph.vertices.length - Math.PI / 2;
    pos[v] = [cx + r * Math.cos(t), cy + r * Math.sin(t), t];
  });
  const cycle = new Set(result?.odd_cycle ?? []);
  for (const [u, v] of graph.edges) {
    const hot = cycle.has(u) && cycle.has(v);
    svg.append(svgEl("line", {
      x1: pos[u][0], y1: pos[u][1], x2: pos[v][0], y2: pos[v][1],
      stroke: hot ? "#b00020" : "#888", "stroke-width": hot ? 3 : 1.5,
    }));
    const key = u < v ? `${u}-${v}` : `${v}-${u}`;
    const label = result?.edge_labels?.[key];
    if (label) {
      const text = svgEl("text", {
        x: (pos[u][0] + pos[v][0]) / 2, y: (pos[u][1] + pos[v][1]) / 2,
        class: "edge-label", "text-anchor": "middle",
      }, `|${label.length}|`);
      text.append(svgEl("title", {}, fmtSet(label)));
      svg.append(text);
    }
  }
  for (const v of graph.vertices) {
    const [x, y, t] = pos[v];
    svg.append(svgEl("circle", { cx: x, cy: y, r: 14, fill: cycle.has(v) ? "#fdd" : "#fff", stroke: "#333" }));
    svg.append(svgEl("text", { x, y: y + 4, "text-anchor": "middle" }, v));
    const assigned = result?.labeling?.assignments?.[v];
    if (assigned) {
      svg.append(svgEl("text", {
        x: x + 34 * Math.cos(t), y: y + 34 * Math.sin(t) + 4,
        "text-anchor": Math.cos(t) > 0.3 ? "start" : Math.cos(t) < -0.3 ? "end" : "middle",
      }, fmtSet(assigned)));
    }
  }
}

function showReport(report) {
  const rows = [
    ["set-indexer", report.set_indexer],
    ["uniform", report.uniform],
    ["strong", report.strong],
    ["geometric", report.geometric],
    ["isogeometric", report.isogeometric],
    ["like-geometric", report.like_geometric],
  ];
  $("flags").replaceChildren(...rows.map(([name, value]) => {
    const tr = document.createElement("tr");
    const on = value !== null && value !== false;
    tr.innerHTML = `<td>${name}</td><td class="${on ? "yes" : "no"}">${value === true ? "yes" : on ? value : "no"}</td>`;
    return tr;
  }));
}

function currentGraph() {
  return JSON.parse($("graph").value);
}

function render(result) {
  $("message").textContent = "";
  const graph = currentGraph();
  if (result.odd_cycle) {
    $("message").textContent = `Not bipartite: odd cycle ${fmtSet(result.odd_cycle)}`;
    $("flags").replaceChildren();
    draw(graph, result);
    return;
  }
  $("labeling").value = JSON.stringify(result.labeling, null, 1);
  showReport(result.report);
  draw(graph, result);
}

function guarded(fn) {
  return () => {
    try {
      fn();
    } catch (e) {
      $("message").textContent = e.message ?? String(e);
    }
  };
}

function loadGraph() {
  const g = family($("family").value, Number($("order").value));
  $("graph").value = JSON.stringify(g);
  construct();
}

function construct() {
  const sizeY = $("size-y").value === "" ? undefined : Number($("size-y").value);
  const out = constructLabeling($("graph").value, $("scheme").value,
    Number($("ratio").value), Number($("size").value), sizeY);
  render(JSON.parse(out));
}

function classify() {
  render(JSON.parse(classifyLabeling($("graph").value, $("labeling").value)));
}

function product() {
  const r = JSON.parse(productSet($("set-a").value, $("set-b").value));
  const ratio = (x) => x ?? "not a progression";
  $("product-out").textContent =
    `A * B = ${fmtSet(r.product)}\n` +
    `|A * B| = ${r.size}, bounds ${r.lower_bound}..${r.upper_bound}\n` +
    `ratio of A: ${ratio(r.a_ratio)}, ratio of B: ${ratio(r.b_ratio)}\n` +
    `quotient sets disjoint: ${r.quotients_disjoint}`;
}

await init();
$("make-graph").onclick = guarded(loadGraph);
$("construct").onclick = guarded(construct);
$("classify").onclick = guarded(classify);
$("product").onclick = () => {
  try { product(); } catch (e) { $("product-out").textContent = e.message; }
};
guarded(loadGraph)();
guarded(product)();
