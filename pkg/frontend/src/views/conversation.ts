/** Conversation view: transcript, free-text intent/refinement input, and
 *  an inline banner for server errors. Input disables while a request is
 *  in flight. */

import type { SessionStore, ViewState } from '../store.js';

export function mountConversationView(root: HTMLElement, store: SessionStore): void {
  root.innerHTML = `
    <h2>Conversation</h2>
    <ul class="transcript"></ul>
    <div class="error-banner" hidden></div>
    <form class="intent-form">
      <input name="text" type="text" placeholder="Describe the feeling, e.g. 'warm and cozy'"/>
      <button type="submit">Send</button>
    </form>
    <p class="hint">Before a result exists your text starts a new ideation;
    afterwards it refines the current coloring.</p>
  `;
  const list = root.querySelector<HTMLUListElement>('.transcript')!;
  const banner = root.querySelector<HTMLDivElement>('.error-banner')!;
  const form = root.querySelector<HTMLFormElement>('.intent-form')!;
  const input = root.querySelector<HTMLInputElement>('input[name=text]')!;
  const button = root.querySelector<HTMLButtonElement>('button')!;

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const text = input.value.trim();
    if (!text || store.state.busy) return;
    const hasResult = store.state.assignment?.assignment != null && !store.resultPanelStale;
    const action = hasResult ? store.sendRefinement(text) : store.submitIntent(text);
    action.then(() => (input.value = '')).catch(() => {});
  });

  store.subscribe((state: ViewState) => {
    list.innerHTML = state.transcript
      .map((entry) => `<li class="${entry.role}">${escapeHtml(entry.text)}</li>`)
      .join('');
    input.disabled = state.busy;
    button.disabled = state.busy;
    if (state.lastError) {
      banner.hidden = false;
      banner.textContent = `${state.lastError.code}: ${state.lastError.message}`;
    } else {
      banner.hidden = true;
    }
  });
}

function escapeHtml(text: string): string {
  return text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}
