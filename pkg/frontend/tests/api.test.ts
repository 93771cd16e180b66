import { describe, expect, it } from 'vitest';

import { ApiClient, ApiError } from '../src/api';

interface Call {
  url: string;
  method: string;
  body: unknown;
}

/** Fetch stand-in that records each call and replays canned replies. */
function fakeFetch(replies: { status: number; body?: unknown }[]) {
  const calls: Call[] = [];
  const impl = (url: string, init?: RequestInit): Promise<Response> => {
    calls.push({
      url,
      method: init?.method ?? 'GET',
      body: typeof init?.body === 'string'
        ? JSON.parse(init.body) : undefined,
    });
    const reply = replies.shift() ?? { status: 200, body: {} };
    const payload = reply.status === 204
      ? null : JSON.stringify(reply.body ?? {});
    return Promise.resolve(new Response(payload, { status: reply.status }));
  };
  return { calls, impl };
}

describe('request shapes', () => {
  it('lists fixtures from the versioned prefix', async () => {
    const { calls, impl } = fakeFetch([
      { status: 200, body: { fixtures: [{ name: 'AN1', kind: 'acyclic' }] } },
    ]);
    const api = new ApiClient('http://host', impl);
    const fixtures = await api.fixtures();
    expect(calls[0]).toEqual(
      { url: 'http://host/api/v1/fixtures', method: 'GET', body: undefined });
    expect(fixtures).toEqual([{ name: 'AN1', kind: 'acyclic' }]);
  });

  it('creates sessions and fires steps with the seen version', async () => {
    const { calls, impl } = fakeFetch([
      { status: 200, body: { id: 's1', version: 0, kind: 'csa' } },
      { status: 200, body: { id: 's1', version: 1 } },
    ]);
    const api = new ApiClient('http://host', impl);
    await api.createFromFixture('CS1');
    await api.fire('s1', ['a', 'e'], 0);
    expect(calls[0]!.method).toBe('POST');
    expect(calls[0]!.body).toEqual({ fixture: 'CS1' });
    expect(calls[1]).toEqual({
      url: 'http://host/api/v1/sessions/s1/fire',
      method: 'POST',
      body: { step: ['a', 'e'], version: 0 },
    });
  });

  it('passes the truncation limit through as a query', async () => {
    const { calls, impl } = fakeFetch([{ status: 200, body: {} }]);
    await new ApiClient('http://host', impl).state('s1', 5);
    expect(calls[0]!.url).toBe('http://host/api/v1/sessions/s1/state?limit=5');
  });

  it('treats delete as a bodiless success', async () => {
    const { calls, impl } = fakeFetch([{ status: 204 }]);
    await new ApiClient('http://host', impl).close('s1');
    expect(calls[0]!.method).toBe('DELETE');
  });
});

describe('error unwrapping', () => {
  it('exposes structured step rejections', async () => {
    const { impl } = fakeFetch([{
      status: 422,
      body: { detail: { error: 'step-not-enabled', step: ['b'],
        missing: ['p2'], reason: null } },
    }]);
    const api = new ApiClient('http://host', impl);
    const err = await api.fire('s1', ['b'], 0).catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    const apiErr = err as ApiError;
    expect(apiErr.status).toBe(422);
    expect(apiErr.stale).toBe(false);
    expect(apiErr.stepNotEnabled?.missing).toEqual(['p2']);
  });

  it('recognises version conflicts', async () => {
    const { impl } = fakeFetch([{
      status: 409,
      body: { detail: { error: 'stale-version', version: 3, seen: 1 } },
    }]);
    const api = new ApiClient('http://host', impl);
    const err = await api.undo('s1', 1).catch((e: unknown) => e);
    expect((err as ApiError).stale).toBe(true);
    expect((err as ApiError).stepNotEnabled).toBeNull();
  });

  it('keeps plain string details as the message', async () => {
    const { impl } = fakeFetch([
      { status: 422, body: { detail: 'nothing to undo' } },
    ]);
    const api = new ApiClient('http://host', impl);
    const err = await api.undo('s1', 0).catch((e: unknown) => e);
    expect((err as ApiError).message).toBe('nothing to undo');
    expect((err as ApiError).stale).toBe(false);
  });
});
