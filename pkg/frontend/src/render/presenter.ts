/** Bridges store state to an ElementRenderer with minimal updates: on each
 *  state change only elements whose hex actually changed are re-sent, so a
 *  single recolor re-renders exactly one element. */

import type { SessionStore, ViewState } from '../store.js';
import type { ElementRenderer } from './types.js';

export class ResultPresenter {
  private lastSceneId: string | null = null;
  private lastColors = new Map<string, string>();
  private unsubscribe: (() => void) | null = null;

  constructor(
    private readonly renderer: ElementRenderer,
    private readonly store: SessionStore,
  ) {}

  attach(): void {
    this.unsubscribe = this.store.subscribe((state) => this.sync(state));
    this.sync(this.store.state);
  }

  detach(): void {
    this.unsubscribe?.();
    this.unsubscribe = null;
    this.renderer.dispose();
  }

  sync(state: ViewState): void {
    const scene = state.selectedScene;
    if (!scene) return;
    if (scene.id !== this.lastSceneId) {
      this.renderer.loadScene(scene);
      this.lastSceneId = scene.id;
      this.lastColors.clear();
      // fixed-material elements carry their color in the scene payload
      for (const element of scene.elements) {
        if (element.fixed_color) {
          this.renderer.upsertElement(element.id, element.fixed_color.hex);
          this.lastColors.set(element.id, element.fixed_color.hex);
        }
      }
    }
    const assignment = state.assignment?.assignment;
    if (assignment && state.assignment?.scene_id === scene.id) {
      for (const [elementId, entry] of Object.entries(assignment.assignments)) {
        const hex = entry.color.hex;
        if (this.lastColors.get(elementId) !== hex) {
          this.renderer.upsertElement(elementId, hex);
          this.lastColors.set(elementId, hex);
        }
      }
    }
    this.renderer.setCameraMode(state.cameraMode);
  }
}
