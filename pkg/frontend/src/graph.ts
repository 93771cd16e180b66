/** View of a net document as a tagged graph.  Tags drive rendering:
 * places are circles, transitions boxes, buffers dashed circles between
 * component frames, β edges dotted lines between the two levels. */

import type { AcyclicBody, CsaBody, NetDocument } from './model';

export type NodeKind = 'place' | 'transition' | 'buffer';
export type EdgeKind = 'flow' | 'beta';

export interface GraphNode {
  id: string;
  kind: NodeKind;
  /** Component frame the node belongs to; buffers and plain acyclic
   * nets have none. */
  cluster: string | null;
}

export interface GraphEdge {
  from: string;
  to: string;
  kind: EdgeKind;
}

export interface Graph {
  nodes: GraphNode[];
  edges: GraphEdge[];
  /** Frame ids in drawing order (upper level first for two-level nets). */
  clusters: string[];
}

function addComponent(graph: Graph, body: AcyclicBody, cluster: string): void {
  for (const p of body.places) {
    graph.nodes.push({ id: p, kind: 'place', cluster });
  }
  for (const t of body.transitions) {
    graph.nodes.push({ id: t, kind: 'transition', cluster });
  }
  for (const [from, to] of body.arcs) {
    graph.edges.push({ from, to, kind: 'flow' });
  }
}

function addCsa(graph: Graph, body: CsaBody, prefix: string): void {
  body.components.forEach((component, i) => {
    const cluster = `${prefix}${i + 1}`;
    graph.clusters.push(cluster);
    addComponent(graph, component, cluster);
  });
  for (const q of body.buffers) {
    graph.nodes.push({ id: q, kind: 'buffer', cluster: null });
  }
  for (const [from, to] of body.buffer_arcs) {
    graph.edges.push({ from, to, kind: 'flow' });
  }
}

export function buildGraph(doc: NetDocument): Graph {
  const graph: Graph = { nodes: [], edges: [], clusters: [] };
  if (doc.kind === 'acyclic') {
    addComponent(graph, doc as AcyclicBody, '');
    graph.clusters.length = 0;
    for (const node of graph.nodes) node.cluster = null;
  } else if (doc.kind === 'csa') {
    addCsa(graph, doc as CsaBody, 'component ');
  } else {
    addCsa(graph, doc.upper as CsaBody, 'upper ');
    addCsa(graph, doc.lower as CsaBody, 'lower ');
    for (const [r, p] of doc.beta ?? []) {
      graph.edges.push({ from: r, to: p, kind: 'beta' });
    }
  }
  return graph;
}

export function nodeById(graph: Graph, id: string): GraphNode {
  const node = graph.nodes.find((n) => n.id === id);
  if (!node) throw new Error(`unknown node ${id}`);
  return node;
}

/** Flow presets/postsets of a transition, read straight off the
 * document's arcs (buffer arcs included).  Used only for the display
 * side of what-if previews — enabledness always comes from the server. */
export function flowEnvironment(graph: Graph, transitions: string[]): {
  pre: Set<string>; post: Set<string>;
} {
  const chosen = new Set(transitions);
  const pre = new Set<string>();
  const post = new Set<string>();
  for (const edge of graph.edges) {
    if (edge.kind !== 'flow') continue;
    if (chosen.has(edge.to)) pre.add(edge.from);
    if (chosen.has(edge.from)) post.add(edge.to);
  }
  return { pre, post };
}
