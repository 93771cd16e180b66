/** Pure SVG rendering: ViewModel in, markup string out.  No DOM access
 * here, so the renderer is unit-testable under node. */

import type { GraphEdge, GraphNode } from './graph';
import type { Point } from './layout';
import type { ViewModel } from './viewmodel';

const PLACE_R = 16;
const BOX = 30;

function esc(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;')
    .replace(/>/g, '&gt;').replace(/"/g, '&quot;');
}

function nodeSvg(node: GraphNode, at: Point, marked: boolean,
                 preview: Set<string> | null): string {
  const ghost = preview !== null && !preview.has(node.id) && marked;
  const gain = preview !== null && preview.has(node.id) && !marked;
  const parts: string[] = [];
  if (node.kind === 'transition') {
    parts.push(`<rect class="transition" x="${at.x - BOX / 2}" `
      + `y="${at.y - BOX / 2}" width="${BOX}" height="${BOX}" `
      + `fill="white" stroke="black" data-id="${esc(node.id)}"/>`);
  } else {
    const cls = node.kind === 'buffer' ? 'buffer' : 'place';
    const dash = node.kind === 'buffer' ? ' stroke-dasharray="4 3"' : '';
    parts.push(`<circle class="${cls}" cx="${at.x}" cy="${at.y}" `
      + `r="${PLACE_R}" fill="white" stroke="black"${dash} `
      + `data-id="${esc(node.id)}"/>`);
    if ((marked && !ghost) || gain) {
      const tone = gain ? 'seagreen' : 'black';
      parts.push(`<circle class="token" cx="${at.x}" cy="${at.y}" `
        + `r="5" fill="${tone}"/>`);
    } else if (ghost) {
      parts.push(`<circle class="token leaving" cx="${at.x}" `
        + `cy="${at.y}" r="5" fill="none" stroke="indianred" `
        + `stroke-dasharray="2 2"/>`);
    }
  }
  parts.push(`<text x="${at.x}" y="${at.y - (node.kind === 'transition'
    ? BOX / 2 : PLACE_R) - 5}" text-anchor="middle" `
    + `font-size="12">${esc(node.id)}</text>`);
  return parts.join('');
}

/** Shorten the segment so arrows stop at node borders, not centres. */
function trim(from: Point, to: Point, offFrom: number,
              offTo: number): [Point, Point] {
  const dx = to.x - from.x;
  const dy = to.y - from.y;
  const len = Math.hypot(dx, dy) || 1;
  const ux = dx / len;
  const uy = dy / len;
  return [
    { x: from.x + ux * offFrom, y: from.y + uy * offFrom },
    { x: to.x - ux * offTo, y: to.y - uy * offTo },
  ];
}

function edgeSvg(edge: GraphEdge, nodes: Map<string, GraphNode>,
                 pos: Map<string, Point>): string {
  const a = pos.get(edge.from);
  const b = pos.get(edge.to);
  if (!a || !b) return '';
  const radius = (id: string) =>
    nodes.get(id)?.kind === 'transition' ? BOX / 2 + 2 : PLACE_R + 2;
  const [p, q] = trim(a, b, radius(edge.from), radius(edge.to));
  if (edge.kind === 'beta') {
    return `<line class="beta" x1="${p.x}" y1="${p.y}" x2="${q.x}" `
      + `y2="${q.y}" stroke="slategray" stroke-dasharray="1 4" `
      + `stroke-width="1.5"/>`;
  }
  return `<line class="flow" x1="${p.x}" y1="${p.y}" x2="${q.x}" `
    + `y2="${q.y}" stroke="black" marker-end="url(#arrow)"/>`;
}

function frameSvg(label: string,
                  box: { x: number; y: number; w: number; h: number }):
    string {
  return `<rect class="frame" x="${box.x}" y="${box.y}" `
    + `width="${box.w}" height="${box.h}" fill="none" `
    + `stroke="darkgray" stroke-dasharray="6 4" rx="8"/>`
    + `<text x="${box.x + 8}" y="${box.y + 16}" font-size="11" `
    + `fill="darkgray">${esc(label)}</text>`;
}

export function renderSvg(vm: ViewModel,
                          preview: Set<string> | null = null): string {
  const { layout, graph } = vm;
  const nodes = new Map(graph.nodes.map((n) => [n.id, n]));
  const body: string[] = [];
  for (const [label, box] of layout.frames) body.push(frameSvg(label, box));
  for (const edge of graph.edges) body.push(edgeSvg(edge, nodes, layout.positions));
  for (const node of graph.nodes) {
    const at = layout.positions.get(node.id);
    if (at) body.push(nodeSvg(node, at, vm.marking.has(node.id), preview));
  }
  return `<svg xmlns="http://www.w3.org/2000/svg" `
    + `viewBox="0 0 ${layout.width} ${layout.height}" `
    + `width="${layout.width}" height="${layout.height}">`
    + `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" `
    + `markerWidth="7" markerHeight="7" orient="auto-start-reverse">`
    + `<path d="M 0 0 L 10 5 L 0 10 z" fill="black"/></marker></defs>`
    + body.join('')
    + `</svg>`;
}
