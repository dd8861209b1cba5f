/** Application bootstrap: one store shared by the three views; the service
 *  base URL defaults to same-origin and can be overridden with
 *  ?api=http://host:port for a separately served backend. */

import { ApiClient } from './api.js';
import { ThreeElementRenderer } from './render/threeRenderer.js';
import { SessionStore } from './store.js';
import { mountColorDesignView } from './views/colorDesign.js';
import { mountConversationView } from './views/conversation.js';
import { mountResultView } from './views/result.js';

function baseUrl(): string {
  const param = new URLSearchParams(window.location.search).get('api');
  return param ?? '';
}

export function boot(root: HTMLElement): SessionStore {
  const store = new SessionStore(new ApiClient(baseUrl()));
  root.innerHTML = `
    <div class="panes">
      <section id="conversation-pane" class="pane"></section>
      <section id="design-pane" class="pane"></section>
      <section id="result-pane" class="pane wide"></section>
    </div>
  `;
  mountConversationView(root.querySelector('#conversation-pane')!, store);
  mountColorDesignView(root.querySelector('#design-pane')!, store);
  mountResultView(
    root.querySelector('#result-pane')!,
    store,
    (container) => new ThreeElementRenderer(container),
  );
  store
    .createSession()
    .then(() => store.loadScenes())
    .catch((err) => console.error('startup failed', err));
  return store;
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  boot(document.getElementById('app')!);
}
