/** Thin typed client for the /api/v1 session API.  Every semantic
 * decision (which steps are enabled, what a firing yields) is made by
 * the server; this module only moves JSON. */

import type {
  CreateResponse, FixtureInfo, NetDocument, ScenarioEntry,
  ScenarioPayload, SessionState, StaleVersionDetail,
  StepNotEnabledDetail, TracePayload,
} from './model';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: unknown,
  ) {
    super(typeof detail === 'string' ? detail : JSON.stringify(detail));
  }

  /** True when the server rejected a mutation because another client
   * moved the session forward; the UI reacts by reloading state. */
  get stale(): boolean {
    const d = this.detail as Partial<StaleVersionDetail> | null;
    return this.status === 409 && d?.error === 'stale-version';
  }

  get stepNotEnabled(): StepNotEnabledDetail | null {
    const d = this.detail as Partial<StepNotEnabledDetail> | null;
    return this.status === 422 && d?.error === 'step-not-enabled'
      ? (this.detail as StepNotEnabledDetail) : null;
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  private async request<T>(method: string, path: string,
                           body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: {} };
    if (body !== undefined) {
      init.headers = { 'content-type': 'application/json' };
      init.body = JSON.stringify(body);
    }
    const resp = await this.fetchImpl(`${this.baseUrl}/api/v1${path}`, init);
    if (resp.status === 204) return undefined as T;
    const payload: unknown = await resp.json().catch(() => null);
    if (!resp.ok) {
      const detail = payload && typeof payload === 'object'
        && 'detail' in payload
        ? (payload as { detail: unknown }).detail : payload;
      throw new ApiError(resp.status, detail);
    }
    return payload as T;
  }

  async fixtures(): Promise<FixtureInfo[]> {
    const body = await this.request<{ fixtures: FixtureInfo[] }>(
      'GET', '/fixtures');
    return body.fixtures;
  }

  createFromFixture(name: string): Promise<CreateResponse> {
    return this.request('POST', '/sessions', { fixture: name });
  }

  createFromDocument(doc: NetDocument): Promise<CreateResponse> {
    return this.request('POST', '/sessions', { document: doc });
  }

  state(sid: string, limit?: number): Promise<SessionState> {
    const query = limit === undefined ? '' : `?limit=${limit}`;
    return this.request('GET', `/sessions/${sid}/state${query}`);
  }

  document(sid: string): Promise<NetDocument> {
    return this.request('GET', `/sessions/${sid}/document`);
  }

  fire(sid: string, step: string[], version: number): Promise<SessionState> {
    return this.request('POST', `/sessions/${sid}/fire`, { step, version });
  }

  undo(sid: string, version: number): Promise<SessionState> {
    return this.request('POST', `/sessions/${sid}/undo`, { version });
  }

  reset(sid: string, version: number): Promise<SessionState> {
    return this.request('POST', `/sessions/${sid}/reset`, { version });
  }

  trace(sid: string): Promise<TracePayload> {
    return this.request('GET', `/sessions/${sid}/trace`);
  }

  scenario(sid: string): Promise<ScenarioPayload> {
    return this.request('GET', `/sessions/${sid}/scenario`);
  }

  async scenarios(sid: string): Promise<ScenarioEntry[]> {
    const body = await this.request<{ scenarios: ScenarioEntry[] }>(
      'GET', `/sessions/${sid}/scenarios`);
    return body.scenarios;
  }

  dot(sid: string): Promise<string> {
    return this.fetchImpl(`${this.baseUrl}/api/v1/sessions/${sid}/dot`)
      .then((r) => r.text());
  }

  close(sid: string): Promise<void> {
    return this.request('DELETE', `/sessions/${sid}`);
  }
}
