/** Conflict dialog: shows why a rejected decision contradicts itself,
 * as the two derivation chains the engine returns (newest step first). */

import type { ChainStep, RejectionDetails } from './types.js';

export class ConflictDialog {
  private readonly element: HTMLElement;

  constructor(host: HTMLElement) {
    this.element = document.createElement('div');
    this.element.className = 'conflict-dialog';
    this.element.hidden = true;
    host.appendChild(this.element);
  }

  get visible(): boolean {
    return !this.element.hidden;
  }

  show(details: RejectionDetails): void {
    this.element.textContent = '';
    const heading = document.createElement('h2');
    heading.textContent = details.conflict_label
      ? `Choice not possible: ${details.conflict_label} would be both selected and discarded`
      : 'Choice not possible';
    this.element.appendChild(heading);

    this.element.appendChild(
      this.renderChain('Selected because', details.select_chain, 'select-chain'));
    this.element.appendChild(
      this.renderChain('Discarded because', details.discard_chain, 'discard-chain'));

    const dismiss = document.createElement('button');
    dismiss.className = 'dismiss';
    dismiss.textContent = 'Close';
    dismiss.addEventListener('click', () => this.dismiss());
    this.element.appendChild(dismiss);
    this.element.hidden = false;
  }

  dismiss(): void {
    this.element.hidden = true;
  }

  private renderChain(
    title: string,
    chain: readonly ChainStep[],
    cls: string,
  ): HTMLElement {
    const wrap = document.createElement('div');
    wrap.className = `chain ${cls}`;
    const caption = document.createElement('h3');
    caption.textContent = title;
    wrap.appendChild(caption);
    const list = document.createElement('ol');
    for (const step of chain) {
      const item = document.createElement('li');
      item.textContent = step.source
        ? `${step.action} ${step.label} [${step.rule} from ${step.source}]`
        : `${step.action} ${step.label} [${step.rule}]`;
      list.appendChild(item);
    }
    wrap.appendChild(list);
    return wrap;
  }
}
