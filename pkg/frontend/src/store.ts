/** Session store: the single client-side source of truth.
 *
 *  Every user gesture maps to exactly one API call, every displayed value
 *  comes from the latest server response, and panels downstream of an
 *  edited stage are flagged stale from the server's stale list rather than
 *  recomputed locally. A single mutating request may be in flight at a
 *  time; views disable their inputs while `busy` is set.
 */

import { ApiClient, ApiError } from './api.js';
import type {
  AssignmentView,
  ApiErrorBody,
  ConceptsView,
  ExportBundle,
  ScenePayload,
  SceneSummary,
  SchemeView,
  StatsPayload,
} from './types.js';

export interface TranscriptEntry {
  role: 'user' | 'system';
  text: string;
}

export interface ViewState {
  sessionId: string | null;
  transcript: TranscriptEntry[];
  busy: boolean;
  stale: string[];
  lastError: ApiErrorBody | null;
  concepts: ConceptsView | null;
  scheme: SchemeView | null;
  assignment: AssignmentView | null;
  stats: StatsPayload | null;
  scenes: SceneSummary[];
  selectedScene: ScenePayload | null;
  cameraMode: 'first' | 'third';
}

export type Listener = (state: ViewState) => void;

function initialState(): ViewState {
  return {
    sessionId: null,
    transcript: [],
    busy: false,
    stale: [],
    lastError: null,
    concepts: null,
    scheme: null,
    assignment: null,
    stats: null,
    scenes: [],
    selectedScene: null,
    cameraMode: 'third',
  };
}

export class SessionStore {
  readonly state: ViewState = initialState();
  private listeners: Listener[] = [];

  constructor(private readonly api: ApiClient) {}

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this.state);
  }

  /** Runs one mutating API call with the in-flight guard. */
  private async mutate<T>(work: () => Promise<T>, apply: (result: T) => void): Promise<T> {
    if (this.state.busy) throw new Error('another request is in flight');
    this.state.busy = true;
    this.state.lastError = null;
    this.emit();
    try {
      const result = await work();
      apply(result);
      return result;
    } catch (err) {
      if (err instanceof ApiError) {
        this.state.lastError = { code: err.code, message: err.message, details: err.details };
      } else {
        this.state.lastError = { code: 'CLIENT', message: String(err) };
      }
      throw err;
    } finally {
      this.state.busy = false;
      this.emit();
    }
  }

  private requireSession(): string {
    if (!this.state.sessionId) throw new Error('no active session');
    return this.state.sessionId;
  }

  private takeStale(stale: string[]): void {
    this.state.stale = [...stale];
  }

  get schemePanelStale(): boolean {
    return this.state.stale.includes('schemes');
  }

  get resultPanelStale(): boolean {
    return this.state.stale.includes('assignment');
  }

  // -- conversation view gestures -------------------------------------------

  async createSession(seed?: number): Promise<void> {
    await this.mutate(
      () => this.api.createSession(seed),
      (session) => {
        Object.assign(this.state, initialState());
        this.state.sessionId = session.id;
        this.state.transcript.push({ role: 'system', text: 'session started' });
      },
    );
  }

  async submitIntent(text: string): Promise<void> {
    const sid = this.requireSession();
    await this.mutate(
      () => this.api.postIntent(sid, text),
      (view) => {
        this.state.transcript.push({ role: 'user', text });
        this.state.transcript.push({
          role: 'system',
          text: `proposed ${view.candidates.length} concept candidate(s)`,
        });
        this.state.concepts = view;
        this.takeStale(view.stale);
      },
    );
  }

  async sendRefinement(instruction: string): Promise<void> {
    const sid = this.requireSession();
    await this.mutate(
      () => this.api.refine(sid, { instruction }),
      (view) => {
        this.state.transcript.push({ role: 'user', text: instruction });
        this.state.transcript.push({ role: 'system', text: 'assignment refined' });
        this.state.assignment = view;
        this.takeStale(view.stale);
      },
    );
  }

  // -- color design view gestures ---------------------------------------------

  async setMoodDegree(attr: 'tones' | 'distance' | 'heaviness', degree: number): Promise<void> {
    const sid = this.requireSession();
    await this.mutate(
      () => this.api.patchConcepts(sid, { [attr]: degree }),
      (view) => {
        this.state.concepts = view;
        this.takeStale(view.stale);
      },
    );
  }

  async toggleTheme(theme: string, selected: boolean): Promise<void> {
    const sid = this.requireSession();
    const patch = selected ? { add_themes: [theme] } : { remove_themes: [theme] };
    await this.mutate(
      () => this.api.patchConcepts(sid, patch),
      (view) => {
        this.state.concepts = view;
        this.takeStale(view.stale);
      },
    );
  }

  async generateSchemes(): Promise<void> {
    const sid = this.requireSession();
    await this.mutate(
      () => this.api.generateSchemes(sid),
      (view) => {
        this.state.scheme = view;
        this.takeStale(view.stale);
      },
    );
  }

  async chooseScheme(index: number): Promise<void> {
    const sid = this.requireSession();
    await this.mutate(
      () => this.api.patchScheme(sid, { choose: index }),
      (view) => {
        this.state.scheme = view;
        this.takeStale(view.stale);
      },
    );
  }

  async editRoleColor(role: string, ncs: string): Promise<void> {
    const sid = this.requireSession();
    await this.mutate(
      () => this.api.patchScheme(sid, { edits: { [role]: ncs } }),
      (view) => {
        this.state.scheme = view;
        this.takeStale(view.stale);
      },
    );
  }

  async toggleLock(role: string, locked: boolean): Promise<void> {
    const sid = this.requireSession();
    const patch = locked ? { lock: [role] } : { unlock: [role] };
    await this.mutate(
      () => this.api.patchScheme(sid, patch),
      (view) => {
        this.state.scheme = view;
        this.takeStale(view.stale);
      },
    );
  }

  async sendSchemeInstruction(instruction: string): Promise<void> {
    const sid = this.requireSession();
    await this.mutate(
      () => this.api.patchScheme(sid, { instruction }),
      (view) => {
        this.state.transcript.push({ role: 'user', text: instruction });
        this.state.scheme = view;
        this.takeStale(view.stale);
      },
    );
  }

  // -- result view gestures ---------------------------------------------

  async loadScenes(): Promise<void> {
    await this.mutate(
      () => this.api.listScenes(),
      (scenes) => {
        this.state.scenes = scenes;
      },
    );
  }

  async selectScene(sceneId: string): Promise<void> {
    await this.mutate(
      () => this.api.getScene(sceneId),
      (scene) => {
        this.state.selectedScene = scene;
      },
    );
  }

  async assignScene(sceneId: string): Promise<void> {
    const sid = this.requireSession();
    await this.mutate(
      () => this.api.assignScene(sid, sceneId),
      (view) => {
        this.state.assignment = view;
        this.takeStale(view.stale);
      },
    );
  }

  async recolorElement(elementId: string, ncs: string): Promise<void> {
    const sid = this.requireSession();
    await this.mutate(
      () => this.api.refine(sid, { element_id: elementId, color: ncs }),
      (view) => {
        this.state.assignment = view;
        this.takeStale(view.stale);
      },
    );
  }

  async loadStats(): Promise<void> {
    const sid = this.requireSession();
    await this.mutate(
      () => this.api.getStats(sid),
      (stats) => {
        this.state.stats = stats;
      },
    );
  }

  async exportBundle(): Promise<ExportBundle> {
    const sid = this.requireSession();
    return this.mutate(
      () => this.api.exportBundle(sid),
      () => {},
    );
  }

  setCameraMode(mode: 'first' | 'third'): void {
    this.state.cameraMode = mode;
    this.emit();
  }
}
