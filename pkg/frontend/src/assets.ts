/** Live asset panel: the catalog split into included, excluded and
 * undecided after every decision, with a completion banner and export
 * download once the configuration is a full product. */

import type { AssetsView, SessionView } from './types.js';

export class AssetPanel {
  constructor(private readonly onExport: () => void) {}

  render(container: HTMLElement, assets: AssetsView, session: SessionView): void {
    container.textContent = '';

    const progress = document.createElement('div');
    progress.className = 'progress';
    const total = session.boxes.length;
    const decided = total - session.open;
    progress.textContent = session.complete
      ? 'configuration complete'
      : `decided ${decided} of ${total} boxes`;
    container.appendChild(progress);

    if (session.dead_end) {
      const warning = document.createElement('div');
      warning.className = 'dead-end';
      warning.textContent =
        'Dead end: every remaining choice violates a constraint. Undo to continue.';
      container.appendChild(warning);
    }

    if (session.complete) {
      const banner = document.createElement('div');
      banner.className = 'complete-banner';
      const text = document.createElement('span');
      text.textContent =
        `Product defined: ${assets.included.length} of ${assets.assets.length} assets included.`;
      banner.appendChild(text);
      const download = document.createElement('button');
      download.className = 'export';
      download.textContent = 'Download configuration';
      download.addEventListener('click', () => this.onExport());
      banner.appendChild(download);
      container.appendChild(banner);
    }

    const table = document.createElement('table');
    table.className = 'assets';
    const head = document.createElement('tr');
    for (const column of ['Asset', 'Kind', 'Status']) {
      const cell = document.createElement('th');
      cell.textContent = column;
      head.appendChild(cell);
    }
    table.appendChild(head);
    for (const asset of assets.assets) {
      const row = document.createElement('tr');
      row.className = `asset-${asset.status}`;
      row.dataset.asset = asset.id;
      const name = document.createElement('td');
      name.textContent = asset.name;
      const kind = document.createElement('td');
      kind.textContent = asset.kind;
      const status = document.createElement('td');
      status.textContent = asset.status;
      row.append(name, kind, status);
      table.appendChild(row);
    }
    container.appendChild(table);
  }
}
