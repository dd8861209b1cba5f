/** Strict sequential replay of wire fixtures captured from the real
 *  service (scripts/dump_api_fixtures.py in the repo root). Any request
 *  that deviates from the recorded conversation, in order, method, path or
 *  body, fails the test, which is what enforces the "exactly one API call
 *  per gesture" contract. */

import type { FetchLike } from '../src/api.js';
import fixtures from './fixtures/api_fixtures.json';

export interface RecordedRequest {
  method: string;
  path: string;
  body: unknown;
}

interface FixtureStep {
  method: string;
  path: string;
  body: unknown;
  status: number;
  response: unknown;
}

const SESSION_TOKEN: string = (fixtures as { session_token: string }).session_token;
const STEPS: FixtureStep[] = (fixtures as { steps: FixtureStep[] }).steps;

export class FakeServer {
  pointer = 0;
  readonly requests: RecordedRequest[] = [];

  readonly fetch: FetchLike = async (input, init) => {
    const method = init?.method ?? 'GET';
    // the fake session id IS the fixture token, so templating is direct
    const path = input.replace(SESSION_TOKEN, '{sid}');
    const body = init?.body ? JSON.parse(init.body as string) : null;
    this.requests.push({ method, path, body });

    if (this.pointer >= STEPS.length) {
      throw new Error(`unexpected request past end of script: ${method} ${path}`);
    }
    const step = STEPS[this.pointer];
    if (step.method !== method || step.path !== path || !deepEqual(step.body, body)) {
      throw new Error(
        `request ${this.pointer} mismatch:\n` +
          `  expected ${step.method} ${step.path} ${JSON.stringify(step.body)}\n` +
          `  received ${method} ${path} ${JSON.stringify(body)}`,
      );
    }
    this.pointer += 1;
    return new Response(JSON.stringify(step.response), {
      status: step.status,
      headers: { 'Content-Type': 'application/json' },
    });
  };
}

function canonical(value: unknown): string {
  if (Array.isArray(value)) return `[${value.map(canonical).join(',')}]`;
  if (value !== null && typeof value === 'object') {
    const entries = Object.entries(value as Record<string, unknown>)
      .sort(([a], [b]) => (a < b ? -1 : 1))
      .map(([k, v]) => `${JSON.stringify(k)}:${canonical(v)}`);
    return `{${entries.join(',')}}`;
  }
  return JSON.stringify(value);
}

function deepEqual(a: unknown, b: unknown): boolean {
  return canonical(a) === canonical(b);
}

export const FIXTURE_SESSION_ID = SESSION_TOKEN;
export const FIXTURE_STEP_COUNT = STEPS.length;
