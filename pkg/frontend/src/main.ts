/** Browser entry point: pick a server, upload or choose a model, go. */

import { ApiClient } from './api.js';
import { App } from './app.js';

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing element #${id}`);
  }
  return found as T;
}

function bootstrap(): void {
  const serverInput = el<HTMLInputElement>('server-url');
  const modelText = el<HTMLTextAreaElement>('model-text');
  const uploadButton = el<HTMLButtonElement>('upload-model');
  const startButton = el<HTMLButtonElement>('start-session');
  const modelIdInput = el<HTMLInputElement>('model-id');
  const status = el<HTMLElement>('status');

  let app: App | null = null;

  const makeApp = () => {
    const api = new ApiClient(serverInput.value.replace(/\/$/, ''));
    return new App(api, {
      tree: el('tree'),
      assets: el('assets'),
      dialogHost: el('dialog-host'),
      status,
      undoButton: el<HTMLButtonElement>('undo'),
      a11yToggle: el<HTMLInputElement>('a11y'),
    });
  };

  uploadButton.addEventListener('click', () => {
    void (async () => {
      try {
        const api = new ApiClient(serverInput.value.replace(/\/$/, ''));
        const uploaded = await api.uploadModel(modelText.value);
        modelIdInput.value = uploaded.model_id;
        status.textContent = uploaded.cycles.length
          ? `uploaded ${uploaded.model_id}; circular constraints: ` +
            uploaded.cycles.map((c) => `{${c.join(', ')}}`).join(' ')
          : `uploaded ${uploaded.model_id} (${uploaded.boxes} boxes)`;
      } catch (error) {
        status.textContent = String(error);
      }
    })();
  });

  startButton.addEventListener('click', () => {
    void (async () => {
      try {
        app = makeApp();
        await app.startSession(modelIdInput.value);
      } catch (error) {
        status.textContent = String(error);
      }
    })();
  });
}

bootstrap();
