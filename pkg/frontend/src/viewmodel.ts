/** Assembles everything one screen needs: the tagged graph with
 * positions, the marking overlay, the step palette, the trace panel,
 * and — for two-level nets — the phase panel.  All semantic content
 * (markings, enabledness, reasons) comes verbatim from the server. */

import { buildGraph, flowEnvironment, type Graph } from './graph';
import { autoLayout, type Layout } from './layout';
import type {
  NetDocument, SessionState, StepCandidate, TracePayload,
} from './model';

export interface PaletteEntry {
  label: string;
  step: string[];
  enabled: boolean;
  /** Server-side reason when disabled: missing tokens ("underlying") or
   * a phase violation ("source_phase" / "target_phase"). */
  reason: string | null;
  decomposition: string[][] | null;
}

export interface PhasePanel {
  /** Upper-level places currently marked — the phases the net is in. */
  activePhases: string[];
  /** Steps blocked by phase alignment rather than missing tokens. */
  phaseBlocked: { label: string; reason: string }[];
}

export interface TracePanel {
  text: string;
  replayCommand: string;
  length: number;
}

export interface ViewModel {
  kind: NetDocument['kind'];
  graph: Graph;
  layout: Layout;
  marking: Set<string>;
  version: number;
  palette: PaletteEntry[];
  truncated: boolean;
  trace: TracePanel | null;
  phases: PhasePanel | null;
}

export function stepLabel(step: string[]): string {
  return `{${[...step].sort().join(',')}}`;
}

function paletteOf(candidates: StepCandidate[]): PaletteEntry[] {
  const entries = candidates.map((c) => ({
    label: stepLabel(c.transitions),
    step: c.transitions,
    enabled: c.enabled,
    reason: c.reason,
    decomposition: c.decomposition,
  }));
  // enabled steps first, then alphabetically — the clickable ones lead
  const key = (e: PaletteEntry) => [...e.step].sort().join(',');
  entries.sort((a, b) => Number(b.enabled) - Number(a.enabled)
    || (key(a) < key(b) ? -1 : key(a) > key(b) ? 1 : 0));
  return entries;
}

function phasePanelOf(doc: NetDocument, state: SessionState,
                      palette: PaletteEntry[]): PhasePanel | null {
  if (doc.kind !== 'bsa' || !doc.upper) return null;
  const upperPlaces = new Set(
    doc.upper.components.flatMap((c) => c.places));
  return {
    activePhases: state.marking.filter((p) => upperPlaces.has(p)).sort(),
    phaseBlocked: palette
      .filter((e) => !e.enabled && e.reason !== null
        && e.reason.endsWith('_phase'))
      .map((e) => ({ label: e.label, reason: e.reason as string })),
  };
}

export function buildViewModel(doc: NetDocument, state: SessionState,
                               trace?: TracePayload): ViewModel {
  const graph = buildGraph(doc);
  const palette = paletteOf(state.candidates);
  return {
    kind: doc.kind,
    graph,
    layout: autoLayout(graph, doc.layout ?? {}),
    marking: new Set(state.marking),
    version: state.version,
    palette,
    truncated: state.truncated,
    trace: trace
      ? { text: trace.text, replayCommand: trace.replay_command,
          length: trace.steps.length }
      : null,
    phases: phasePanelOf(doc, state, palette),
  };
}

/** Display-only successor marking (M ∪ post U) \ pre U for a candidate
 * the server already validated as enabled; shown on hover, never
 * committed.  Firing still goes through the server. */
export function whatIfPreview(vm: ViewModel, step: string[]): Set<string> {
  const { pre, post } = flowEnvironment(vm.graph, step);
  const preview = new Set(vm.marking);
  for (const p of post) preview.add(p);
  for (const p of pre) preview.delete(p);
  return preview;
}
