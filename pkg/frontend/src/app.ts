/** Application wiring: one browser tab drives one session.
 *
 * Every interaction round-trips through the server before anything
 * recolors (no optimistic updates), so the tree always mirrors the
 * session exactly; a rejected decision only opens the conflict dialog
 * and leaves the rendering untouched.
 */

import { ApiClient, ApiError, RejectedError } from './api.js';
import { AssetPanel } from './assets.js';
import { ConflictDialog } from './dialog.js';
import { TreeView } from './tree.js';
import type { AssetsView, MoveAction, SessionView } from './types.js';

export interface AppElements {
  tree: HTMLElement;
  assets: HTMLElement;
  dialogHost: HTMLElement;
  status: HTMLElement;
  undoButton: HTMLButtonElement;
  a11yToggle: HTMLInputElement;
}

export class App {
  readonly tree: TreeView;
  readonly assetPanel: AssetPanel;
  readonly dialog: ConflictDialog;
  private sessionId: string | null = null;
  private lastSession: SessionView | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly elements: AppElements,
  ) {
    this.tree = new TreeView({
      onDecision: (label, action) => void this.decide(label, action),
    });
    this.assetPanel = new AssetPanel(() => void this.downloadExport());
    this.dialog = new ConflictDialog(elements.dialogHost);
    elements.undoButton.addEventListener('click', () => void this.undo());
    elements.a11yToggle.addEventListener('change', () => {
      this.tree.accessible = elements.a11yToggle.checked;
      if (this.lastSession) {
        this.tree.render(elements.tree, this.lastSession);
      }
    });
  }

  async startSession(modelId: string): Promise<void> {
    const session = await this.api.createSession(modelId);
    this.sessionId = session.session_id;
    await this.refresh();
  }

  async attachSession(sessionId: string): Promise<void> {
    this.sessionId = sessionId;
    await this.refresh();
  }

  /** Re-fetch and re-render everything from the server's view. */
  async refresh(): Promise<void> {
    if (!this.sessionId) {
      return;
    }
    const [session, assets] = await Promise.all([
      this.api.getSession(this.sessionId),
      this.api.getAssets(this.sessionId),
    ]);
    this.renderAll(session, assets);
  }

  private renderAll(session: SessionView, assets: AssetsView): void {
    this.lastSession = session;
    this.tree.render(this.elements.tree, session);
    this.assetPanel.render(this.elements.assets, assets, session);
    this.elements.undoButton.disabled = session.journal_length === 0;
    this.elements.status.textContent = session.complete
      ? 'complete'
      : `${session.open} open`;
  }

  async decide(label: string, action: MoveAction): Promise<void> {
    if (!this.sessionId) {
      return;
    }
    try {
      await this.api.decide(this.sessionId, label, action);
    } catch (error) {
      if (error instanceof RejectedError) {
        this.dialog.show(error.details);
        return; // server state unchanged; keep the tree as it is
      }
      if (error instanceof ApiError) {
        this.elements.status.textContent = error.message;
        return;
      }
      throw error;
    }
    await this.refresh();
  }

  async undo(): Promise<void> {
    if (!this.sessionId) {
      return;
    }
    try {
      await this.api.undo(this.sessionId);
    } catch (error) {
      if (error instanceof ApiError) {
        this.elements.status.textContent = error.message;
        return;
      }
      throw error;
    }
    await this.refresh();
  }

  async downloadExport(): Promise<void> {
    if (!this.sessionId) {
      return;
    }
    const text = await this.api.exportConfig(this.sessionId);
    const blob = new Blob([text], { type: 'application/json' });
    const url = URL.createObjectURL(blob);
    const link = document.createElement('a');
    link.href = url;
    link.download = 'product.fmconfig';
    link.click();
    URL.revokeObjectURL(url);
  }
}
