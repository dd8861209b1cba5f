/** UI contract tests against recorded service fixtures: the three
 *  acceptance behaviors (slider staleness, lock stability, single-element
 *  recolor) plus the one-gesture-one-call accounting the fake server
 *  enforces throughout. */

import { describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { ResultPresenter } from '../src/render/presenter.js';
import type { ElementRenderer } from '../src/render/types.js';
import { SessionStore } from '../src/store.js';
import type { ScenePayload } from '../src/types.js';
import { FakeServer, FIXTURE_STEP_COUNT } from './fakeServer.js';

class CountingRenderer implements ElementRenderer {
  scenesLoaded: string[] = [];
  upserts: Array<{ elementId: string; hex: string }> = [];
  cameraMode: 'first' | 'third' = 'third';
  disposed = false;

  loadScene(scene: ScenePayload): void {
    this.scenesLoaded.push(scene.id);
  }

  upsertElement(elementId: string, hex: string): void {
    this.upserts.push({ elementId, hex });
  }

  setCameraMode(mode: 'first' | 'third'): void {
    this.cameraMode = mode;
  }

  dispose(): void {
    this.disposed = true;
  }
}

/** Drives the recorded conversation up to (not including) the slider move. */
async function driveToAssignment(store: SessionStore): Promise<void> {
  await store.createSession(0);
  await store.loadScenes();
  await store.selectScene('bedroom');
  await store.submitIntent('Warm and Cozy');
  await store.generateSchemes();
  await store.chooseScheme(0);
  await store.assignScene('bedroom');
  await store.loadStats();
}

function makeStore(): { store: SessionStore; server: FakeServer } {
  const server = new FakeServer();
  const store = new SessionStore(new ApiClient('', server.fetch));
  return { store, server };
}

describe('slider gesture (criterion 9a)', () => {
  it('issues exactly one PATCH and flags downstream panels stale', async () => {
    const { store, server } = makeStore();
    await driveToAssignment(store);
    expect(store.schemePanelStale).toBe(false);
    expect(store.resultPanelStale).toBe(false);

    const before = server.requests.length;
    await store.setMoodDegree('tones', 1);
    expect(server.requests.length).toBe(before + 1);
    const request = server.requests[server.requests.length - 1];
    expect(request.method).toBe('PATCH');
    expect(request.path).toBe('/sessions/{sid}/concepts');
    expect(request.body).toEqual({ tones: 1 });

    // staleness comes from the server response, not local bookkeeping
    expect(store.schemePanelStale).toBe(true);
    expect(store.resultPanelStale).toBe(true);
    expect(store.state.concepts?.concepts?.mood.tones).toBe(1);
  });
});

describe('lock stability (criterion 9b)', () => {
  it('keeps the locked dominant swatch byte-identical across a regeneration', async () => {
    const { store } = makeStore();
    await driveToAssignment(store);
    await store.setMoodDegree('tones', 1);
    await store.setMoodDegree('tones', 2);
    await store.generateSchemes();
    await store.chooseScheme(0);

    const before = JSON.stringify(store.state.scheme!.scheme!.dominant);
    await store.toggleLock('dominant', true);
    expect(store.state.scheme!.locks).toHaveProperty('dominant');
    await store.generateSchemes(); // regeneration with the lock in place
    for (const candidate of store.state.scheme!.candidates) {
      expect(JSON.stringify(candidate.dominant.color)).toBe(
        JSON.stringify(JSON.parse(before).color),
      );
    }
    await store.chooseScheme(0);
    const after = JSON.stringify(store.state.scheme!.scheme!.dominant);
    expect(after).toBe(before);
  });
});

describe('element recolor (criterion 9c)', () => {
  it('round-trips through the API and re-renders only that element', async () => {
    const { store, server } = makeStore();
    const renderer = new CountingRenderer();
    const presenter = new ResultPresenter(renderer, store);
    presenter.attach();

    await driveToAssignment(store);
    await store.setMoodDegree('tones', 1);
    await store.setMoodDegree('tones', 2);
    await store.generateSchemes();
    await store.chooseScheme(0);
    await store.toggleLock('dominant', true);
    await store.generateSchemes();
    await store.chooseScheme(0);
    await store.assignScene('bedroom');

    expect(renderer.scenesLoaded).toEqual(['bedroom']);
    const rendered = renderer.upserts.length;
    expect(rendered).toBeGreaterThanOrEqual(21);

    const requestsBefore = server.requests.length;
    await store.recolorElement('curtains', '1060-Y70R');

    // one API call, and the response is the server's authoritative state
    expect(server.requests.length).toBe(requestsBefore + 1);
    expect(server.requests[server.requests.length - 1]).toEqual({
      method: 'POST',
      path: '/sessions/{sid}/refinement',
      body: { element_id: 'curtains', color: '1060-Y70R' },
    });

    // only the recolored element re-rendered
    const diff = renderer.upserts.slice(rendered);
    expect(diff.length).toBe(1);
    expect(diff[0].elementId).toBe('curtains');
    const entry = store.state.assignment!.assignment!.assignments['curtains'];
    expect(entry.color.ncs).toBe('1060-Y70R');
    expect(diff[0].hex).toBe(entry.color.hex);
  });
});

describe('whole recorded conversation', () => {
  it('replays to the end with no extra or missing calls', async () => {
    const { store, server } = makeStore();
    await driveToAssignment(store);
    await store.setMoodDegree('tones', 1);
    await store.setMoodDegree('tones', 2);
    await store.generateSchemes();
    await store.chooseScheme(0);
    await store.toggleLock('dominant', true);
    await store.generateSchemes();
    await store.chooseScheme(0);
    await store.assignScene('bedroom');
    await store.recolorElement('curtains', '1060-Y70R');
    await store.loadStats();
    const bundle = await store.exportBundle();
    expect(bundle).toHaveProperty('assignment');

    // the server-side event log fully reconstructs this UI session
    const file = (await new ApiClient('', server.fetch).getSessionFile(
      store.state.sessionId!,
    )) as { events: Array<{ op: string }> };
    const ops = file.events.map((e) => e.op);
    expect(ops).toEqual([
      'intent',
      'generate_schemes',
      'choose_scheme',
      'assign',
      'customize_concepts',
      'customize_concepts',
      'generate_schemes',
      'choose_scheme',
      'customize_scheme',
      'generate_schemes',
      'choose_scheme',
      'assign',
      'refine',
    ]);
    expect(server.pointer).toBe(FIXTURE_STEP_COUNT);
  });

  it('rejects overlapping mutations (single in-flight request)', async () => {
    const { store } = makeStore();
    const first = store.createSession(0);
    expect(store.state.busy).toBe(true);
    await expect(store.loadScenes()).rejects.toThrow(/in flight/);
    await first;
    expect(store.state.busy).toBe(false);
  });
});
