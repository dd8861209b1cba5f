/** Rendering seam: the result view drives any implementation of this
 *  interface, so tests can count per-element updates without WebGL. */

import type { ScenePayload } from '../types.js';

export interface ElementRenderer {
  /** (Re)build the scene geometry from layout hints. */
  loadScene(scene: ScenePayload): void;
  /** Recolor a single element; cheap, called per diff. */
  upsertElement(elementId: string, hex: string): void;
  setCameraMode(mode: 'first' | 'third'): void;
  dispose(): void;
}
