/** The color-coded feature tree.
 *
 * Rendering is a pure function of the last server session view: structural
 * colors (white/blue/red) and state colors (green/gray) come verbatim from
 * the payload, legal moves gate the buttons, and forced states carry their
 * propagation reason as a tooltip. The only client-side state is which
 * subtrees the user expanded or collapsed.
 */

import type { BoxView, MoveAction, SessionView } from './types.js';

export interface TreeCallbacks {
  onDecision: (label: string, action: MoveAction) => void;
}

const A11Y_STRUCTURAL: Record<string, string> = {
  white: '○', // plain option
  blue: '◆',  // mandatory choice
  red: '▲',   // exclusive option
};

const A11Y_STATE: Record<string, string> = {
  green: '✓',
  gray: '✗',
  none: '',
};

export class TreeView {
  /** Subtree toggles the user flipped away from the default. */
  private readonly userExpanded = new Set<string>();
  private readonly userCollapsed = new Set<string>();
  private lastContainer: HTMLElement | null = null;
  private lastSession: SessionView | null = null;
  accessible = false;

  constructor(private readonly callbacks: TreeCallbacks) {}

  /** Children are collapsed by default while their box is still open,
   * nudging the top-down scan without forbidding leaf-first action. */
  private isExpanded(box: BoxView): boolean {
    if (box.state === 'open') {
      return this.userExpanded.has(box.id);
    }
    return !this.userCollapsed.has(box.id);
  }

  private toggle(box: BoxView): void {
    if (this.isExpanded(box)) {
      this.userExpanded.delete(box.id);
      this.userCollapsed.add(box.id);
    } else {
      this.userCollapsed.delete(box.id);
      this.userExpanded.add(box.id);
    }
  }

  render(container: HTMLElement, session: SessionView): void {
    this.lastContainer = container;
    this.lastSession = session;
    const byParent = new Map<string | null, BoxView[]>();
    for (const box of session.boxes) {
      const bucket = byParent.get(box.parent) ?? [];
      bucket.push(box);
      byParent.set(box.parent, bucket);
    }
    container.textContent = '';
    container.classList.toggle('a11y', this.accessible);
    const roots = byParent.get(null) ?? [];
    const list = document.createElement('ul');
    list.className = 'tree';
    for (const root of roots) {
      list.appendChild(this.renderBox(root, byParent));
    }
    container.appendChild(list);
  }

  private rerender(): void {
    if (this.lastContainer && this.lastSession) {
      this.render(this.lastContainer, this.lastSession);
    }
  }

  private renderBox(
    box: BoxView,
    byParent: Map<string | null, BoxView[]>,
  ): HTMLElement {
    const item = document.createElement('li');
    const row = document.createElement('div');
    row.className = `box structural-${box.structural_color} state-${box.state_color}`;
    row.dataset.box = box.id;
    row.dataset.label = box.label;
    row.dataset.state = box.state;

    const children = byParent.get(box.id) ?? [];
    if (children.length > 0) {
      const toggle = document.createElement('button');
      toggle.className = 'toggle';
      toggle.textContent = this.isExpanded(box) ? '▾' : '▸';
      toggle.addEventListener('click', () => {
        this.toggle(box);
        this.rerender();
      });
      row.appendChild(toggle);
    }

    if (this.accessible) {
      const marker = document.createElement('span');
      marker.className = 'marker';
      marker.textContent =
        A11Y_STRUCTURAL[box.structural_color] + A11Y_STATE[box.state_color];
      row.appendChild(marker);
    }

    const label = document.createElement('span');
    label.className = 'label';
    label.textContent = box.label;
    row.appendChild(label);

    if (box.group !== 'free' || box.mandatory) {
      const badge = document.createElement('span');
      badge.className = 'badge';
      badge.textContent = [
        box.mandatory ? 'mandatory' : '',
        box.group !== 'free' ? box.group : '',
      ].filter(Boolean).join(' ');
      row.appendChild(badge);
    }

    if (box.reason && box.state !== 'open') {
      const why = document.createElement('span');
      why.className = 'reason';
      why.textContent = '⚑';
      why.title = box.reason.source
        ? `forced: ${box.reason.rule} from ${box.reason.source}`
        : `forced: ${box.reason.rule}`;
      row.appendChild(why);
    }

    for (const action of ['select', 'discard'] as const) {
      const button = document.createElement('button');
      button.className = `act ${action}`;
      button.textContent = action === 'select' ? '✓' : '✗';
      const legal = box.state === 'open' && box.moves.includes(action);
      button.disabled = !legal;
      if (box.state === 'open' && !box.moves.includes(action)) {
        button.title = `${action} would contradict a constraint`;
      }
      button.addEventListener('click', () => {
        if (legal) {
          this.callbacks.onDecision(box.label, action);
        }
      });
      row.appendChild(button);
    }

    item.appendChild(row);
    if (children.length > 0 && this.isExpanded(box)) {
      const sub = document.createElement('ul');
      sub.className = 'children';
      for (const child of children) {
        sub.appendChild(this.renderBox(child, byParent));
      }
      item.appendChild(sub);
    }
    return item;
  }
}
