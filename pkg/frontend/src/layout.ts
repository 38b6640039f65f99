/** Layered graph layout.
 *
 * Layers follow topological depth (longest path from a root), so arrows
 * always point rightward and the path reads left to right. Force layouts
 * were ruled out because they scramble that direction. When the path is
 * a forest, components stack vertically, each laid out independently.
 */

import type { PathEdge } from "./types.js";

export const NODE_W = 150;
export const NODE_H = 54;
export const H_GAP = 70;
export const V_GAP = 18;
export const PAD = 16;
export const COMPONENT_GAP = 40;

export interface NodePos {
  x: number;
  y: number;
  layer: number;
}

export interface Layout {
  positions: Map<string, NodePos>;
  width: number;
  height: number;
}

/** Topological depth per node; edges must form a DAG over `ids`. */
export function layerByDepth(ids: string[], edges: PathEdge[]): Map<string, number> {
  const indegree = new Map<string, number>(ids.map((id) => [id, 0]));
  const out = new Map<string, string[]>(ids.map((id) => [id, []]));
  for (const e of edges) {
    out.get(e.from)?.push(e.to);
    if (indegree.has(e.to)) indegree.set(e.to, (indegree.get(e.to) ?? 0) + 1);
  }
  const layer = new Map<string, number>();
  const queue: string[] = [];
  for (const id of ids) {
    if (indegree.get(id) === 0) {
      layer.set(id, 0);
      queue.push(id);
    }
  }
  while (queue.length) {
    const current = queue.shift() as string;
    const base = layer.get(current) ?? 0;
    for (const next of out.get(current) ?? []) {
      layer.set(next, Math.max(layer.get(next) ?? 0, base + 1));
      const remaining = (indegree.get(next) ?? 0) - 1;
      indegree.set(next, remaining);
      if (remaining === 0) queue.push(next);
    }
  }
  // A cycle would leave nodes unvisited; the API never sends one, but a
  // defensive fallback keeps rendering alive.
  for (const id of ids) if (!layer.has(id)) layer.set(id, 0);
  return layer;
}

/** Weakly-connected components, each sorted by the given rank. */
export function components(
  ids: string[],
  edges: PathEdge[],
  rank: Map<string, number>,
): string[][] {
  const neighbors = new Map<string, string[]>(ids.map((id) => [id, []]));
  for (const e of edges) {
    neighbors.get(e.from)?.push(e.to);
    neighbors.get(e.to)?.push(e.from);
  }
  const seen = new Set<string>();
  const groups: string[][] = [];
  for (const start of ids) {
    if (seen.has(start)) continue;
    const group: string[] = [];
    const stack = [start];
    seen.add(start);
    while (stack.length) {
      const node = stack.pop() as string;
      group.push(node);
      for (const next of neighbors.get(node) ?? []) {
        if (!seen.has(next)) {
          seen.add(next);
          stack.push(next);
        }
      }
    }
    group.sort((a, b) => (rank.get(a) ?? 0) - (rank.get(b) ?? 0));
    groups.push(group);
  }
  // Components appear in the order their first paper is read.
  groups.sort((a, b) => (rank.get(a[0]) ?? 0) - (rank.get(b[0]) ?? 0));
  return groups;
}

/**
 * Positions for every node. `order` (the reading order) breaks ties so
 * the same response always produces the same picture.
 */
export function layoutGraph(ids: string[], edges: PathEdge[], order: string[]): Layout {
  const rank = new Map<string, number>(order.map((id, i) => [id, i]));
  const layer = layerByDepth(ids, edges);
  const positions = new Map<string, NodePos>();
  let yOffset = PAD;
  let width = 0;

  for (const group of components(ids, edges, rank)) {
    const byLayer = new Map<number, string[]>();
    for (const id of group) {
      const l = layer.get(id) ?? 0;
      if (!byLayer.has(l)) byLayer.set(l, []);
      (byLayer.get(l) as string[]).push(id);
    }
    let tallest = 0;
    for (const [l, members] of byLayer) {
      members.forEach((id, slot) => {
        positions.set(id, {
          x: PAD + l * (NODE_W + H_GAP),
          y: yOffset + slot * (NODE_H + V_GAP),
          layer: l,
        });
      });
      tallest = Math.max(tallest, members.length);
      width = Math.max(width, PAD + l * (NODE_W + H_GAP) + NODE_W + PAD);
    }
    yOffset += tallest * (NODE_H + V_GAP) - V_GAP + COMPONENT_GAP;
  }

  const height = Math.max(yOffset - COMPONENT_GAP + PAD, PAD * 2 + NODE_H);
  return { positions, width: Math.max(width, NODE_W + 2 * PAD), height };
}
