/** Typed client for the service API. One method per documented endpoint;
 *  the session store calls exactly one of these per user gesture. */

import type {
  AssignmentView,
  ApiErrorBody,
  ConceptsView,
  ExportBundle,
  ScenePayload,
  SceneSummary,
  SchemeView,
  SessionSummary,
  StatsPayload,
} from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;
  readonly details?: Record<string, unknown>;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.code = body.code;
    this.status = status;
    this.details = body.details;
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { 'Content-Type': 'application/json' } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const response = await this.fetchImpl(this.baseUrl + path, init);
    const payload = await response.json();
    if (!response.ok) {
      const error = (payload as { error?: ApiErrorBody }).error;
      throw new ApiError(response.status, error ?? { code: 'UNKNOWN', message: 'request failed' });
    }
    return payload as T;
  }

  createSession(seed?: number): Promise<SessionSummary> {
    return this.request('POST', '/sessions', seed === undefined ? {} : { seed });
  }

  importSession(payload: unknown): Promise<SessionSummary> {
    return this.request('POST', '/sessions/import', payload);
  }

  getSession(sid: string): Promise<SessionSummary> {
    return this.request('GET', `/sessions/${sid}`);
  }

  postIntent(sid: string, text: string): Promise<ConceptsView> {
    return this.request('POST', `/sessions/${sid}/intent`, { text });
  }

  getConcepts(sid: string): Promise<ConceptsView> {
    return this.request('GET', `/sessions/${sid}/concepts`);
  }

  patchConcepts(
    sid: string,
    patch: {
      add_themes?: string[];
      remove_themes?: string[];
      tones?: number;
      distance?: number;
      heaviness?: number;
    },
  ): Promise<ConceptsView> {
    return this.request('PATCH', `/sessions/${sid}/concepts`, patch);
  }

  generateSchemes(sid: string): Promise<SchemeView> {
    return this.request('POST', `/sessions/${sid}/schemes`);
  }

  getScheme(sid: string): Promise<SchemeView> {
    return this.request('GET', `/sessions/${sid}/scheme`);
  }

  patchScheme(
    sid: string,
    patch: {
      choose?: number;
      edits?: Record<string, string>;
      lock?: string[];
      unlock?: string[];
      instruction?: string;
    },
  ): Promise<SchemeView> {
    return this.request('PATCH', `/sessions/${sid}/scheme`, patch);
  }

  assignScene(sid: string, sceneId: string): Promise<AssignmentView> {
    return this.request('POST', `/sessions/${sid}/assignment`, { scene_id: sceneId });
  }

  getAssignment(sid: string): Promise<AssignmentView> {
    return this.request('GET', `/sessions/${sid}/assignment`);
  }

  refine(
    sid: string,
    body: { instruction?: string; element_id?: string; color?: string },
  ): Promise<AssignmentView> {
    return this.request('POST', `/sessions/${sid}/refinement`, body);
  }

  getStats(sid: string): Promise<StatsPayload> {
    return this.request('GET', `/sessions/${sid}/stats`);
  }

  exportBundle(sid: string): Promise<ExportBundle> {
    return this.request('GET', `/sessions/${sid}/export`);
  }

  getSessionFile(sid: string): Promise<ExportBundle> {
    return this.request('GET', `/sessions/${sid}/session-file`);
  }

  listScenes(): Promise<SceneSummary[]> {
    return this.request('GET', '/scenes');
  }

  getScene(sceneId: string): Promise<ScenePayload> {
    return this.request('GET', `/scenes/${sceneId}`);
  }
}
