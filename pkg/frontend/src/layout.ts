/** Layered DAG auto-layout.
 *
 * Columns come from longest-path depth over flow edges, rows from the
 * node's component frame (upper frames above lower ones, buffers
 * between the frames they connect).  Hints from the document's layout
 * section and manual drags both override the computed position. */

import type { Graph, GraphNode } from './graph';

export interface Point {
  x: number;
  y: number;
}

export interface Layout {
  positions: Map<string, Point>;
  /** Bounding frames per cluster, for the dashed component rectangles. */
  frames: Map<string, { x: number; y: number; w: number; h: number }>;
  width: number;
  height: number;
}

export const COLUMN = 110;
export const ROW = 70;
export const MARGIN = 50;

/** Longest-path layering over flow edges; β edges never constrain
 * columns.  The flow relation is acyclic per document validation, but a
 * hand-edited file may not be — visit states guard the recursion. */
export function layerOf(graph: Graph): Map<string, number> {
  const incoming = new Map<string, string[]>();
  for (const node of graph.nodes) incoming.set(node.id, []);
  for (const edge of graph.edges) {
    if (edge.kind === 'flow') incoming.get(edge.to)?.push(edge.from);
  }
  const layer = new Map<string, number>();
  const visiting = new Set<string>();
  const visit = (id: string): number => {
    const known = layer.get(id);
    if (known !== undefined) return known;
    if (visiting.has(id)) return 0;
    visiting.add(id);
    const preds = incoming.get(id) ?? [];
    const depth = preds.length === 0
      ? 0 : Math.max(...preds.map(visit)) + 1;
    visiting.delete(id);
    layer.set(id, depth);
    return depth;
  };
  for (const node of graph.nodes) visit(node.id);
  return layer;
}

function bandOrder(graph: Graph): Map<string | null, number> {
  const order = new Map<string | null, number>();
  graph.clusters.forEach((cluster, i) => order.set(cluster, i));
  if (order.size === 0) {
    order.set(null, 0);
    return order;
  }
  // buffers sit in a band of their own after the component bands
  order.set(null, order.size);
  return order;
}

export function autoLayout(
  graph: Graph,
  hints: Record<string, [number, number]> = {},
): Layout {
  const layers = layerOf(graph);
  const bands = bandOrder(graph);
  // stable row assignment: nodes of one band and column stack up in
  // alphabetical order, so layouts are reproducible
  const byCell = new Map<string, GraphNode[]>();
  let rowsPerBand = new Map<number, number>();
  for (const node of [...graph.nodes].sort((a, b) =>
    a.id.localeCompare(b.id))) {
    const band = bands.get(node.cluster) ?? 0;
    const key = `${band}:${layers.get(node.id) ?? 0}`;
    const cell = byCell.get(key) ?? [];
    cell.push(node);
    byCell.set(key, cell);
    rowsPerBand.set(band, Math.max(rowsPerBand.get(band) ?? 1, cell.length));
  }

  const bandTop = new Map<number, number>();
  let y = MARGIN;
  for (const band of [...rowsPerBand.keys()].sort((a, b) => a - b)) {
    bandTop.set(band, y);
    y += (rowsPerBand.get(band) ?? 1) * ROW + ROW / 2;
  }

  const positions = new Map<string, Point>();
  for (const [key, cell] of byCell) {
    const parts = key.split(':').map(Number);
    const band = parts[0] ?? 0;
    const column = parts[1] ?? 0;
    cell.forEach((node, i) => {
      positions.set(node.id, {
        x: MARGIN + column * COLUMN,
        y: (bandTop.get(band) ?? MARGIN) + i * ROW,
      });
    });
  }
  for (const [id, [hx, hy]] of Object.entries(hints)) {
    if (positions.has(id)) positions.set(id, { x: hx, y: hy });
  }
  return withFrames(graph, positions);
}

function withFrames(graph: Graph, positions: Map<string, Point>): Layout {
  const frames = new Map<string, { x: number; y: number; w: number; h: number }>();
  for (const cluster of graph.clusters) {
    const members = graph.nodes.filter((n) => n.cluster === cluster);
    const xs = members.map((n) => positions.get(n.id)?.x ?? 0);
    const ys = members.map((n) => positions.get(n.id)?.y ?? 0);
    if (xs.length === 0) continue;
    const pad = 28;
    frames.set(cluster, {
      x: Math.min(...xs) - pad,
      y: Math.min(...ys) - pad,
      w: Math.max(...xs) - Math.min(...xs) + 2 * pad,
      h: Math.max(...ys) - Math.min(...ys) + 2 * pad,
    });
  }
  let width = 2 * MARGIN;
  let height = 2 * MARGIN;
  for (const p of positions.values()) {
    width = Math.max(width, p.x + MARGIN);
    height = Math.max(height, p.y + MARGIN);
  }
  return { positions, frames, width, height };
}

/** Manual drag override: pin one node and recompute the frames. */
export function moveNode(graph: Graph, layout: Layout, id: string,
                         to: Point): Layout {
  const positions = new Map(layout.positions);
  positions.set(id, to);
  return withFrames(graph, positions);
}
