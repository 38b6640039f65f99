/** DOM construction. The whole view is rebuilt from the model on every
 * change, so rendered state is a pure function of (result, selection).
 */

import { layoutGraph, NODE_H, NODE_W } from "./layout.js";
import { EDGE_RAMP, legendStops, linearScale, NODE_RAMP } from "./scales.js";
import type { PaperInfo, QueryResult } from "./types.js";
import type { ViewModel } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
export const SELECTED_COLOR = "#d62728";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  cls?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderBanner(container: HTMLElement, model: ViewModel): void {
  container.textContent = "";
  container.hidden = !model.error && !model.pending;
  if (model.pending) {
    container.appendChild(el("span", "banner-info", "searching..."));
  } else if (model.error) {
    const cls = model.noResults ? "banner-info" : "banner-error";
    const text = model.noResults ? `no results: ${model.error}` : model.error;
    container.appendChild(el("span", cls, text));
  }
}

/** Navigation bar: the reading order as a numbered list of papers. */
export function renderNav(container: HTMLElement, model: ViewModel): void {
  container.textContent = "";
  const result = model.result;
  if (!result) return;
  const byId = new Map(result.nodes.map((n) => [n.id, n]));
  const list = el("ol", "nav-list");
  for (const id of result.reading_order) {
    const node = byId.get(id);
    if (!node) continue;
    const item = el("li", "nav-item");
    item.dataset.id = id;
    if (id === model.selection) item.classList.add("selected");
    item.appendChild(el("span", "nav-title", node.title));
    item.appendChild(el("span", "nav-meta", `${node.authors.join(", ")} (${node.year})`));
    list.appendChild(item);
  }
  container.appendChild(list);
}

function arrowMarker(): SVGMarkerElement {
  const marker = document.createElementNS(SVG_NS, "marker");
  marker.setAttribute("id", "arrowhead");
  marker.setAttribute("viewBox", "0 0 10 10");
  marker.setAttribute("refX", "9");
  marker.setAttribute("refY", "5");
  marker.setAttribute("markerWidth", "7");
  marker.setAttribute("markerHeight", "7");
  marker.setAttribute("orient", "auto-start-reverse");
  const tip = document.createElementNS(SVG_NS, "path");
  tip.setAttribute("d", "M 0 0 L 10 5 L 0 10 z");
  tip.setAttribute("fill", "context-stroke");
  marker.appendChild(tip);
  return marker;
}

/** The path panel: arrows point from prerequisite to dependent work. */
export function renderGraph(svg: SVGSVGElement, model: ViewModel): void {
  svg.textContent = "";
  const result = model.result;
  if (!result) return;

  const ids = result.nodes.map((n) => n.id);
  const layout = layoutGraph(ids, result.edges, result.reading_order);
  svg.setAttribute("viewBox", `0 0 ${layout.width} ${layout.height}`);
  svg.setAttribute("width", String(layout.width));
  svg.setAttribute("height", String(layout.height));

  const defs = document.createElementNS(SVG_NS, "defs");
  defs.appendChild(arrowMarker());
  svg.appendChild(defs);

  const nodeScale = linearScale(result.nodes.map((n) => n.score), NODE_RAMP.low, NODE_RAMP.high);
  const edgeScale = linearScale(result.edges.map((e) => e.relevance), EDGE_RAMP.low, EDGE_RAMP.high);

  const edgeGroup = document.createElementNS(SVG_NS, "g");
  edgeGroup.setAttribute("class", "edges");
  for (const edge of result.edges) {
    const from = layout.positions.get(edge.from);
    const to = layout.positions.get(edge.to);
    if (!from || !to) continue;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("class", "edge");
    line.dataset.from = edge.from;
    line.dataset.to = edge.to;
    line.setAttribute("x1", String(from.x + NODE_W));
    line.setAttribute("y1", String(from.y + NODE_H / 2));
    line.setAttribute("x2", String(to.x));
    line.setAttribute("y2", String(to.y + NODE_H / 2));
    line.setAttribute("stroke", edgeScale(edge.relevance));
    line.setAttribute("stroke-width", "2");
    line.setAttribute("marker-end", "url(#arrowhead)");
    edgeGroup.appendChild(line);
  }
  svg.appendChild(edgeGroup);

  const nodeGroup = document.createElementNS(SVG_NS, "g");
  nodeGroup.setAttribute("class", "nodes");
  const byId = new Map(result.nodes.map((n) => [n.id, n]));
  for (const id of ids) {
    const pos = layout.positions.get(id);
    const node = byId.get(id);
    if (!pos || !node) continue;
    const g = document.createElementNS(SVG_NS, "g");
    g.setAttribute("class", id === model.selection ? "node selected" : "node");
    g.dataset.id = id;
    const rect = document.createElementNS(SVG_NS, "rect");
    rect.setAttribute("x", String(pos.x));
    rect.setAttribute("y", String(pos.y));
    rect.setAttribute("width", String(NODE_W));
    rect.setAttribute("height", String(NODE_H));
    rect.setAttribute("rx", "6");
    rect.setAttribute("fill", id === model.selection ? SELECTED_COLOR : nodeScale(node.score));
    g.appendChild(rect);

    const title = document.createElementNS(SVG_NS, "text");
    title.setAttribute("class", "node-title");
    title.setAttribute("x", String(pos.x + 8));
    title.setAttribute("y", String(pos.y + 22));
    title.textContent =
      node.title.length > 22 ? `${node.title.slice(0, 21)}…` : node.title;
    g.appendChild(title);

    const year = document.createElementNS(SVG_NS, "text");
    year.setAttribute("class", "node-year");
    year.setAttribute("x", String(pos.x + 8));
    year.setAttribute("y", String(pos.y + 42));
    year.textContent = String(node.year);
    g.appendChild(year);

    nodeGroup.appendChild(g);
  }
  svg.appendChild(nodeGroup);
}

function legendBlock(idBase: string, label: string, stops: string[], min: number, max: number) {
  const block = el("div", "legend");
  block.id = idBase;
  block.appendChild(el("span", "legend-label", label));
  const bar = el("div", "legend-bar");
  for (const color of stops) {
    const stop = el("span", "legend-stop");
    stop.style.backgroundColor = color;
    bar.appendChild(stop);
  }
  block.appendChild(bar);
  const ends = el("div", "legend-ends");
  ends.appendChild(el("span", "legend-low", `low (${min.toPrecision(3)})`));
  ends.appendChild(el("span", "legend-high", `high (${max.toPrecision(3)})`));
  block.appendChild(ends);
  return block;
}

/** Weight legends, gradient running low -> high left to right. */
export function renderLegends(container: HTMLElement, model: ViewModel): void {
  container.textContent = "";
  const result = model.result;
  if (!result) return;
  const nodeScale = linearScale(result.nodes.map((n) => n.score), NODE_RAMP.low, NODE_RAMP.high);
  const edgeScale = linearScale(result.edges.map((e) => e.relevance), EDGE_RAMP.low, EDGE_RAMP.high);
  container.appendChild(
    legendBlock("node-legend", "paper importance", legendStops(nodeScale), nodeScale.min, nodeScale.max),
  );
  container.appendChild(
    legendBlock("edge-legend", "edge relevance", legendStops(edgeScale), edgeScale.min, edgeScale.max),
  );
}

export function renderDetail(
  container: HTMLElement,
  info: PaperInfo | null,
  error?: string,
): void {
  container.textContent = "";
  if (error) {
    container.appendChild(el("p", "detail-error", error));
    return;
  }
  if (!info) {
    container.appendChild(el("p", "detail-hint", "Click a paper to see its details."));
    return;
  }
  container.appendChild(el("h3", "detail-title", info.title));
  container.appendChild(el("p", "detail-authors", info.authors.join(", ")));
  container.appendChild(
    el("p", "detail-meta", `${info.year}${info.venue ? ` · ${info.venue}` : ""}`),
  );
  if (info.abstract) container.appendChild(el("p", "detail-abstract", info.abstract));
  container.appendChild(
    el("p", "detail-counts", `cites ${info.n_references} · cited by ${info.n_cited_by}`),
  );
}

/** Summary line under the form: seeds, terminals, timing. */
export function renderSummary(container: HTMLElement, result: QueryResult | null): void {
  container.textContent = "";
  if (!result) return;
  const dropped = result.seeds.dropped_unresolved.length + result.seeds.dropped_filtered.length;
  container.appendChild(
    el(
      "span",
      "summary-line",
      `${result.nodes.length} papers on the path · ` +
        `${result.seeds.ids.length} seeds (${dropped} dropped) · ` +
        `${result.terminals.ids.length} terminals (${result.terminals.mode}` +
        `${result.terminals.fell_back ? ", fell back" : ""}) · ` +
        `${result.timing.seconds.toFixed(2)}s`,
    ),
  );
}
