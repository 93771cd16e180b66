import { readFileSync } from 'node:fs';
import { describe, expect, it } from 'vitest';

import type { NetDocument, SessionState } from '../src/model';
import { renderSvg } from '../src/render';
import { buildViewModel } from '../src/viewmodel';

function loadNet(name: string): NetDocument {
  const url = new URL(`../../nets/${name}.sonet.json`, import.meta.url);
  return JSON.parse(readFileSync(url, 'utf8')) as NetDocument;
}

function vmOf(name: string, marking: string[]) {
  const doc = loadNet(name);
  const state: SessionState = {
    id: 's1', version: 0, kind: doc.kind, source: 'fixture',
    marking, initial_marking: marking, steps_fired: 0,
    candidates: [], truncated: false,
  };
  return buildViewModel(doc, state);
}

describe('svg rendering', () => {
  it('draws places as circles and transitions as boxes', () => {
    const svg = renderSvg(vmOf('AN1', ['p1']));
    expect(svg).toContain('<svg xmlns="http://www.w3.org/2000/svg"');
    expect(svg).toContain('class="place"');
    expect(svg).toContain('<rect class="transition"');
    expect(svg).toContain('data-id="p1"');
    expect(svg).toContain('>a</text>');
    expect(svg).toContain('marker-end="url(#arrow)"');
  });

  it('puts a token dot on exactly the marked places', () => {
    const svg = renderSvg(vmOf('AN1', ['p2', 'p3']));
    const tokens = svg.match(/class="token"/g) ?? [];
    expect(tokens).toHaveLength(2);
  });

  it('dashes buffers and frames in a communicating net', () => {
    const svg = renderSvg(vmOf('CS1', ['p1', 'p5']));
    expect(svg).toContain('class="buffer"');
    expect(svg.match(/class="frame"/g)).toHaveLength(2);
    expect(svg).toContain('>component 1</text>');
    expect(svg).toContain('stroke-dasharray="6 4"');
  });

  it('dots the phase-assignment edges of a two-level net', () => {
    const svg = renderSvg(vmOf('BSA0', ['p1', 'r1', 'r2']));
    const beta = svg.match(/class="beta"/g) ?? [];
    expect(beta).toHaveLength(10);
    expect(svg).toContain('stroke-dasharray="1 4"');
    expect(svg).toContain('>upper 1</text>');
    expect(svg).toContain('>lower 1</text>');
  });

  it('shows gains and losses when a preview marking is supplied', () => {
    const vm = vmOf('AN1', ['p1']);
    const svg = renderSvg(vm, new Set(['p2', 'p3']));
    expect(svg).toContain('fill="seagreen"');      // would gain a token
    expect(svg).toContain('class="token leaving"'); // would lose one
  });
});
