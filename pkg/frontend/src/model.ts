/** Payload types of the /api/v1 JSON API and the .sonet.json document
 * format.  Field names mirror the server exactly; the UI never invents
 * semantic data of its own. */

export type NetKind = 'acyclic' | 'csa' | 'bsa';

export interface FixtureInfo {
  name: string;
  kind: NetKind;
}

export interface AcyclicBody {
  places: string[];
  transitions: string[];
  arcs: [string, string][];
}

export interface CsaBody {
  components: AcyclicBody[];
  buffers: string[];
  buffer_arcs: [string, string][];
}

/** One parsed .sonet.json document.  Exactly one of the three body
 * shapes is populated depending on kind. */
export interface NetDocument extends Partial<AcyclicBody>, Partial<CsaBody> {
  kind: NetKind;
  lower?: CsaBody;
  upper?: CsaBody;
  beta?: [string, string][];
  marking?: string[];
  layout?: Record<string, [number, number]>;
}

export interface StepCandidate {
  transitions: string[];
  enabled: boolean;
  reason: string | null;
  decomposition: string[][] | null;
}

export interface SessionState {
  id: string;
  version: number;
  kind: NetKind;
  source: string;
  marking: string[];
  initial_marking: string[];
  steps_fired: number;
  candidates: StepCandidate[];
  truncated: boolean;
}

export interface CreateResponse {
  id: string;
  version: number;
  kind: NetKind;
}

export interface TracePayload {
  id: string;
  version: number;
  steps: string[][];
  markings: string[][];
  text: string;
  replay_command: string;
}

export interface ScenarioPayload {
  kind: NetKind;
  version: number;
  transitions?: string[];
  lower?: string[];
  upper?: string[];
}

export interface ScenarioEntry {
  maximal: boolean;
  transitions?: string[];
  lower?: string[];
  upper?: string[];
}

export interface StepNotEnabledDetail {
  error: 'step-not-enabled';
  step: string[];
  missing: string[];
  reason: string | null;
}

export interface StaleVersionDetail {
  error: 'stale-version';
  version: number;
  seen: number;
}
