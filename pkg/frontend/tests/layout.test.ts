import { readFileSync } from 'node:fs';
import { describe, expect, it } from 'vitest';

import { buildGraph } from '../src/graph';
import { autoLayout, layerOf, moveNode } from '../src/layout';
import type { NetDocument } from '../src/model';

function loadNet(name: string): NetDocument {
  const url = new URL(`../../nets/${name}.sonet.json`, import.meta.url);
  return JSON.parse(readFileSync(url, 'utf8')) as NetDocument;
}

describe('layering', () => {
  it('advances by at least one column along every cycle-free arc', () => {
    // flat nets and both levels of BSA0 have no cycles, so the
    // longest-path layering is exact there
    for (const name of ['AN1', 'BD1', 'W1', 'BSA0']) {
      const graph = buildGraph(loadNet(name));
      const layers = layerOf(graph);
      for (const edge of graph.edges) {
        if (edge.kind !== 'flow') continue;
        expect(layers.get(edge.to)!).toBeGreaterThan(layers.get(edge.from)!);
      }
    }
  });

  it('still assigns every node a column when buffers close cycles', () => {
    // CS1 loops through its buffers (d -> q2 -> f -> q3 -> d), so the
    // layering can only promise totality, not monotonicity
    const graph = buildGraph(loadNet('CS1'));
    const layers = layerOf(graph);
    for (const node of graph.nodes) {
      expect(layers.get(node.id)).toBeGreaterThanOrEqual(0);
    }
    expect(layers.get('p1')).toBe(0);
    expect(layers.get('p5')).toBe(0);
  });

  it('starts initial places in column zero', () => {
    const graph = buildGraph(loadNet('AN1'));
    const layers = layerOf(graph);
    expect(layers.get('p1')).toBe(0);
    expect(layers.get('a')).toBe(1);
    expect(layers.get('p5')).toBe(4);
  });
});

describe('auto layout', () => {
  it('is deterministic', () => {
    const graph = buildGraph(loadNet('CS1'));
    const first = autoLayout(graph);
    const second = autoLayout(graph);
    expect([...first.positions.entries()])
      .toEqual([...second.positions.entries()]);
    expect([...first.frames.entries()])
      .toEqual([...second.frames.entries()]);
  });

  it('places every node inside the canvas', () => {
    const graph = buildGraph(loadNet('BSA0'));
    const layout = autoLayout(graph);
    expect(layout.positions.size).toBe(graph.nodes.length);
    for (const p of layout.positions.values()) {
      expect(p.x).toBeGreaterThan(0);
      expect(p.x).toBeLessThan(layout.width);
      expect(p.y).toBeGreaterThan(0);
      expect(p.y).toBeLessThan(layout.height);
    }
  });

  it('keeps component bands apart', () => {
    const graph = buildGraph(loadNet('CS1'));
    const layout = autoLayout(graph);
    const one = layout.frames.get('component 1')!;
    const two = layout.frames.get('component 2')!;
    expect(one.y + one.h).toBeLessThanOrEqual(two.y);
    // buffers live between or below the frames, not inside either
    const q1 = layout.positions.get('q1')!;
    expect(q1.y).toBeGreaterThan(two.y + two.h);
  });

  it('honours layout hints from the document verbatim', () => {
    const graph = buildGraph(loadNet('AN1'));
    const layout = autoLayout(graph, { p1: [400, 300] });
    expect(layout.positions.get('p1')).toEqual({ x: 400, y: 300 });
    // unknown ids in the hints are ignored rather than invented
    const stray = autoLayout(graph, { zz: [1, 1] });
    expect(stray.positions.has('zz')).toBe(false);
  });
});

describe('manual moves', () => {
  it('pins the node and recomputes the frames', () => {
    const graph = buildGraph(loadNet('CS1'));
    const before = autoLayout(graph);
    const after = moveNode(graph, before, 'p1', { x: 900, y: 40 });
    expect(after.positions.get('p1')).toEqual({ x: 900, y: 40 });
    const frame = after.frames.get('component 1')!;
    expect(frame.x + frame.w).toBeGreaterThan(900);
    // other nodes did not move
    expect(after.positions.get('p2')).toEqual(before.positions.get('p2'));
  });
});
