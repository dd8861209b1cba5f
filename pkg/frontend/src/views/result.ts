/** Result view: schematic 3D render, first/third person toggle, element
 *  list with hex codes and per-element recolor, the two charts straight
 *  from /stats, reasoning text, and the export download. */

import { chromaBlacknessSvg, hueDistributionSvg } from '../charts.js';
import { composeNcs } from '../picker.js';
import { ResultPresenter } from '../render/presenter.js';
import type { ElementRenderer } from '../render/types.js';
import type { SessionStore, ViewState } from '../store.js';

export function mountResultView(
  root: HTMLElement,
  store: SessionStore,
  makeRenderer: (container: HTMLElement) => ElementRenderer,
): ResultPresenter {
  root.innerHTML = `
    <h2>Result <span class="stale-flag" hidden>stale</span></h2>
    <div class="scene-bar">
      <select class="scene-select"><option value="">choose a scene</option></select>
      <button class="assign">Color this scene</button>
      <button class="camera-first">First person</button>
      <button class="camera-third">Third person</button>
      <button class="refresh-stats">Refresh charts</button>
      <button class="export">Export bundle</button>
    </div>
    <div class="viewport"></div>
    <ul class="element-list"></ul>
    <div class="charts">
      <div class="hue-distribution"></div>
      <div class="chroma-blackness"></div>
    </div>
    <p class="reasoning"></p>
  `;
  const staleFlag = root.querySelector<HTMLElement>('.stale-flag')!;
  const sceneSelect = root.querySelector<HTMLSelectElement>('.scene-select')!;
  const viewport = root.querySelector<HTMLDivElement>('.viewport')!;
  const elementList = root.querySelector<HTMLUListElement>('.element-list')!;
  const hueBox = root.querySelector<HTMLDivElement>('.hue-distribution')!;
  const cbBox = root.querySelector<HTMLDivElement>('.chroma-blackness')!;
  const reasoning = root.querySelector<HTMLParagraphElement>('.reasoning')!;

  const presenter = new ResultPresenter(makeRenderer(viewport), store);
  presenter.attach();

  sceneSelect.addEventListener('change', () => {
    if (sceneSelect.value) store.selectScene(sceneSelect.value).catch(() => {});
  });
  root.querySelector<HTMLButtonElement>('.assign')!.addEventListener('click', () => {
    const sceneId = store.state.selectedScene?.id;
    if (sceneId && !store.state.busy) store.assignScene(sceneId).catch(() => {});
  });
  root.querySelector<HTMLButtonElement>('.camera-first')!.addEventListener('click', () => {
    store.setCameraMode('first');
  });
  root.querySelector<HTMLButtonElement>('.camera-third')!.addEventListener('click', () => {
    store.setCameraMode('third');
  });
  root.querySelector<HTMLButtonElement>('.refresh-stats')!.addEventListener('click', () => {
    if (!store.state.busy) store.loadStats().catch(() => {});
  });
  root.querySelector<HTMLButtonElement>('.export')!.addEventListener('click', () => {
    store
      .exportBundle()
      .then((bundle) => downloadJson(bundle, 'chromachain-result.json'))
      .catch(() => {});
  });

  store.subscribe((state: ViewState) => {
    staleFlag.hidden = !store.resultPanelStale;
    renderSceneOptions(state);
    renderElementList(state);
    renderCharts(state);
    reasoning.textContent = state.assignment?.assignment?.reasoning ?? '';
  });

  function renderSceneOptions(state: ViewState): void {
    const current = sceneSelect.value;
    const options = ['<option value="">choose a scene</option>'].concat(
      state.scenes.map(
        (scene) =>
          `<option value="${scene.id}">${scene.name} (${scene.colorable_count} colorable)</option>`,
      ),
    );
    if (sceneSelect.children.length !== options.length) {
      sceneSelect.innerHTML = options.join('');
      sceneSelect.value = current;
    }
  }

  function renderElementList(state: ViewState): void {
    const assignment = state.assignment?.assignment;
    if (!assignment) {
      elementList.innerHTML = '';
      return;
    }
    elementList.innerHTML = Object.entries(assignment.assignments)
      .map(
        ([elementId, entry]) => `
        <li data-element="${elementId}">
          <span class="swatch" style="background:${entry.color.hex}"></span>
          <code>${elementId}</code> <em>${entry.role}</em>
          <code>${entry.color.ncs}</code> <code>${entry.color.hex}</code>
          <input class="recolor" type="text" placeholder="new notation"/>
          <button class="apply-recolor">Recolor</button>
        </li>`,
      )
      .join('');
    elementList.querySelectorAll<HTMLLIElement>('li').forEach((item) => {
      item.querySelector<HTMLButtonElement>('.apply-recolor')!.addEventListener('click', () => {
        const raw = item.querySelector<HTMLInputElement>('.recolor')!.value.trim();
        if (!raw || store.state.busy) return;
        // accept either full notation or "b c hue" parts
        let notation = raw;
        const parts = raw.split(/\s+/);
        if (parts.length === 3) {
          notation = composeNcs(Number(parts[0]), Number(parts[1]), parts[2]).ncs;
        }
        store.recolorElement(item.dataset.element!, notation).catch(() => {});
      });
    });
  }

  function renderCharts(state: ViewState): void {
    if (!state.stats) {
      hueBox.innerHTML = '';
      cbBox.innerHTML = '';
      return;
    }
    const assignment = state.assignment?.assignment;
    hueBox.innerHTML = hueDistributionSvg(state.stats);
    cbBox.innerHTML = chromaBlacknessSvg(
      state.stats,
      (elementId) => assignment?.assignments[elementId]?.color.hex,
    );
  }

  return presenter;
}

function downloadJson(payload: unknown, filename: string): void {
  const blob = new Blob([JSON.stringify(payload, null, 2)], { type: 'application/json' });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement('a');
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}
