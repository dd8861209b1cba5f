/** Schematic WebGL renderer: one flat-shaded box per element, positioned
 *  from the layout hints. Third-person mode orbits the room center with
 *  pointer drag + wheel zoom; first-person puts the camera at eye height
 *  inside the room and drag turns the view. */

import * as THREE from 'three';

import { fallbackHint, LAYOUTS } from '../layouts.js';
import type { ScenePayload } from '../types.js';
import type { ElementRenderer } from './types.js';

const EYE_HEIGHT = 1.55;

export class ThreeElementRenderer implements ElementRenderer {
  private readonly scene = new THREE.Scene();
  private readonly camera: THREE.PerspectiveCamera;
  private readonly renderer: THREE.WebGLRenderer;
  private readonly meshes = new Map<string, THREE.Mesh>();
  private mode: 'first' | 'third' = 'third';
  private yaw = 0.6;
  private pitch = 0.35;
  private distance = 7;
  private dragging = false;
  private disposed = false;

  constructor(container: HTMLElement) {
    const width = container.clientWidth || 640;
    const height = container.clientHeight || 420;
    this.camera = new THREE.PerspectiveCamera(55, width / height, 0.1, 100);
    this.renderer = new THREE.WebGLRenderer({ antialias: true });
    this.renderer.setSize(width, height);
    container.appendChild(this.renderer.domElement);

    this.scene.background = new THREE.Color(0xf4f2ee);
    const ambient = new THREE.AmbientLight(0xffffff, 0.75);
    const sun = new THREE.DirectionalLight(0xffffff, 1.1);
    sun.position.set(3, 6, 4);
    this.scene.add(ambient, sun);

    container.addEventListener('pointerdown', () => (this.dragging = true));
    window.addEventListener('pointerup', () => (this.dragging = false));
    container.addEventListener('pointermove', (event) => this.onDrag(event));
    container.addEventListener('wheel', (event) => {
      event.preventDefault();
      this.distance = Math.min(14, Math.max(2.5, this.distance + event.deltaY * 0.01));
      this.updateCamera();
    });

    this.updateCamera();
    this.animate();
  }

  private onDrag(event: PointerEvent): void {
    if (!this.dragging) return;
    this.yaw -= event.movementX * 0.008;
    const pitchLimit = this.mode === 'third' ? 1.4 : 0.9;
    this.pitch = Math.min(pitchLimit, Math.max(-0.2, this.pitch + event.movementY * 0.006));
    this.updateCamera();
  }

  private updateCamera(): void {
    if (this.mode === 'third') {
      const target = new THREE.Vector3(0, 1.0, 0);
      this.camera.position.set(
        target.x + this.distance * Math.cos(this.pitch) * Math.sin(this.yaw),
        target.y + this.distance * Math.sin(this.pitch),
        target.z + this.distance * Math.cos(this.pitch) * Math.cos(this.yaw),
      );
      this.camera.lookAt(target);
    } else {
      this.camera.position.set(0.2, EYE_HEIGHT, 1.8);
      this.camera.lookAt(
        0.2 + Math.sin(this.yaw + Math.PI),
        EYE_HEIGHT - Math.tan(this.pitch) * 0.5,
        1.8 + Math.cos(this.yaw + Math.PI),
      );
    }
  }

  private animate = (): void => {
    if (this.disposed) return;
    requestAnimationFrame(this.animate);
    this.renderer.render(this.scene, this.camera);
  };

  loadScene(scene: ScenePayload): void {
    for (const mesh of this.meshes.values()) {
      this.scene.remove(mesh);
      mesh.geometry.dispose();
      (mesh.material as THREE.Material).dispose();
    }
    this.meshes.clear();
    const layout = LAYOUTS[scene.id] ?? {};
    scene.elements.forEach((element, index) => {
      const hint = layout[element.id] ?? fallbackHint(index);
      const geometry = new THREE.BoxGeometry(hint.w, hint.h, hint.d);
      const material = new THREE.MeshLambertMaterial({ color: 0xcccccc });
      const mesh = new THREE.Mesh(geometry, material);
      mesh.position.set(hint.x, hint.y, hint.z);
      this.scene.add(mesh);
      this.meshes.set(element.id, mesh);
    });
  }

  upsertElement(elementId: string, hex: string): void {
    const mesh = this.meshes.get(elementId);
    if (!mesh) return;
    (mesh.material as THREE.MeshLambertMaterial).color.set(hex);
  }

  setCameraMode(mode: 'first' | 'third'): void {
    if (mode !== this.mode) {
      this.mode = mode;
      this.updateCamera();
    }
  }

  dispose(): void {
    this.disposed = true;
    this.renderer.dispose();
    this.renderer.domElement.remove();
  }
}
