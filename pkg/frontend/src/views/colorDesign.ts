/** Color design view: theme tags, the three mood sliders, scheme candidate
 *  cards, and a per-role picker with lock toggles. Swatch colors come from
 *  the service's hex fields; the picker only clamps notation ranges. */

import { composeNcs } from '../picker.js';
import type { SessionStore, ViewState } from '../store.js';
import type { RoleName, SchemePayload } from '../types.js';

const MOODS: Array<{ attr: 'tones' | 'distance' | 'heaviness'; labels: string[] }> = [
  { attr: 'tones', labels: ['cool', 'neutral', 'warm'] },
  { attr: 'distance', labels: ['close', 'medium', 'far'] },
  { attr: 'heaviness', labels: ['light', 'medium', 'dark'] },
];

const ROLES: RoleName[] = ['dominant', 'secondary', 'accent'];

export function mountColorDesignView(root: HTMLElement, store: SessionStore): void {
  root.innerHTML = `
    <h2>Color Design <span class="stale-flag" hidden>stale</span></h2>
    <section class="concepts">
      <h3>Design themes</h3>
      <div class="themes"></div>
      <h3>Color mood</h3>
      <div class="sliders"></div>
      <button class="generate-schemes">Generate schemes</button>
    </section>
    <section class="schemes">
      <h3>Scheme candidates</h3>
      <div class="candidates"></div>
      <div class="picker"></div>
      <form class="scheme-instruction">
        <input type="text" placeholder="e.g. make the color scheme brighter"/>
        <button type="submit">Adjust</button>
      </form>
    </section>
  `;
  const staleFlag = root.querySelector<HTMLElement>('.stale-flag')!;
  const themesBox = root.querySelector<HTMLDivElement>('.themes')!;
  const slidersBox = root.querySelector<HTMLDivElement>('.sliders')!;
  const candidatesBox = root.querySelector<HTMLDivElement>('.candidates')!;
  const pickerBox = root.querySelector<HTMLDivElement>('.picker')!;
  const generateButton = root.querySelector<HTMLButtonElement>('.generate-schemes')!;
  const instructionForm = root.querySelector<HTMLFormElement>('.scheme-instruction')!;

  generateButton.addEventListener('click', () => {
    if (!store.state.busy) store.generateSchemes().catch(() => {});
  });

  instructionForm.addEventListener('submit', (event) => {
    event.preventDefault();
    const input = instructionForm.querySelector('input')!;
    if (input.value.trim() && !store.state.busy) {
      store.sendSchemeInstruction(input.value.trim()).catch(() => {});
      input.value = '';
    }
  });

  store.subscribe((state: ViewState) => {
    staleFlag.hidden = !store.schemePanelStale;
    renderThemes(state);
    renderSliders(state);
    renderCandidates(state);
    renderPicker(state);
  });

  function renderThemes(state: ViewState): void {
    const concepts = state.concepts?.concepts;
    if (!concepts) {
      themesBox.textContent = 'No concepts yet: describe your intent in the conversation.';
      return;
    }
    themesBox.innerHTML = concepts.themes
      .map(
        (theme) =>
          `<label class="tag"><input type="checkbox" checked data-theme="${theme}"/> ${theme}</label>`,
      )
      .join('');
    themesBox.querySelectorAll<HTMLInputElement>('input[type=checkbox]').forEach((box) => {
      box.disabled = state.busy;
      box.addEventListener('change', () => {
        store.toggleTheme(box.dataset.theme!, box.checked).catch(() => {});
      });
    });
  }

  function renderSliders(state: ViewState): void {
    const mood = state.concepts?.concepts?.mood;
    if (!mood) {
      slidersBox.textContent = '';
      return;
    }
    slidersBox.innerHTML = MOODS.map(
      ({ attr, labels }) => `
        <label class="mood-slider">${attr}
          <input type="range" min="0" max="2" step="1" value="${mood[attr]}" data-attr="${attr}"/>
          <span class="degree">${labels[mood[attr]]}</span>
        </label>`,
    ).join('');
    slidersBox.querySelectorAll<HTMLInputElement>('input[type=range]').forEach((slider) => {
      slider.disabled = state.busy;
      slider.addEventListener('change', () => {
        store
          .setMoodDegree(slider.dataset.attr as 'tones' | 'distance' | 'heaviness',
                         Number(slider.value))
          .catch(() => {});
      });
    });
  }

  function renderCandidates(state: ViewState): void {
    const view = state.scheme;
    if (!view || view.candidates.length === 0) {
      candidatesBox.textContent = 'No schemes yet.';
      return;
    }
    candidatesBox.innerHTML = view.candidates
      .map((candidate, index) => candidateCard(candidate, index, index === view.chosen_index))
      .join('');
    candidatesBox.querySelectorAll<HTMLElement>('.candidate').forEach((card) => {
      card.addEventListener('click', () => {
        if (!store.state.busy) store.chooseScheme(Number(card.dataset.index)).catch(() => {});
      });
    });
  }

  function candidateCard(scheme: SchemePayload, index: number, chosen: boolean): string {
    const swatches = ROLES.map(
      (role) =>
        `<span class="swatch ${role}" title="${role} ${scheme[role].color.ncs}"
              style="background:${scheme[role].color.hex}"></span>`,
    ).join('');
    return `<div class="candidate ${chosen ? 'chosen' : ''}" data-index="${index}">
      ${swatches}<p>${scheme.reasoning}</p></div>`;
  }

  function renderPicker(state: ViewState): void {
    const scheme = state.scheme?.scheme;
    if (!scheme) {
      pickerBox.textContent = '';
      return;
    }
    const locks = state.scheme!.locks;
    pickerBox.innerHTML = ROLES.map((role) => {
      const entry = scheme[role];
      const locked = role in locks;
      return `<div class="role-picker" data-role="${role}">
        <span class="swatch" style="background:${entry.color.hex}"></span>
        <code>${entry.color.ncs}</code> <code>${entry.color.hex}</code>
        <label><input type="checkbox" class="lock" ${locked ? 'checked' : ''}/> lock</label>
        <input class="b" type="number" min="0" max="99" placeholder="blackness"/>
        <input class="c" type="number" min="0" max="99" placeholder="chroma"/>
        <input class="h" type="text" placeholder="hue e.g. Y90R"/>
        <button class="apply">Apply</button>
        <span class="picker-note"></span>
      </div>`;
    }).join('');
    pickerBox.querySelectorAll<HTMLElement>('.role-picker').forEach((box) => {
      const role = box.dataset.role as RoleName;
      box.querySelector<HTMLInputElement>('.lock')!.addEventListener('change', (event) => {
        const checked = (event.target as HTMLInputElement).checked;
        store.toggleLock(role, checked).catch(() => {});
      });
      box.querySelector<HTMLButtonElement>('.apply')!.addEventListener('click', () => {
        const b = Number(box.querySelector<HTMLInputElement>('.b')!.value || '0');
        const c = Number(box.querySelector<HTMLInputElement>('.c')!.value || '0');
        const h = box.querySelector<HTMLInputElement>('.h')!.value || 'N';
        const note = box.querySelector<HTMLElement>('.picker-note')!;
        try {
          const composed = composeNcs(b, c, h);
          note.textContent = composed.note ?? '';
          store.editRoleColor(role, composed.ncs).catch(() => {});
        } catch (err) {
          note.textContent = String(err instanceof Error ? err.message : err);
        }
      });
    });
  }
}
