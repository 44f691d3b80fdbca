/** Wire types of the configuration service. The UI never derives semantics
 * itself; everything rendered comes from these payloads. */

export type BoxState = 'open' | 'selected' | 'discarded';
export type StructuralColor = 'white' | 'blue' | 'red';
export type StateColor = 'none' | 'green' | 'gray';
export type MoveAction = 'select' | 'discard';

export interface BoxView {
  id: string;
  label: string;
  parent: string | null;
  group: string;
  mandatory: boolean;
  structural_color: StructuralColor;
  state_color: StateColor;
  state: BoxState;
  moves: readonly MoveAction[];
  reason?: { rule: string; source: string | null };
}

export interface SessionView {
  session_id: string;
  model_id: string;
  open: number;
  complete: boolean;
  dead_end: boolean;
  journal_length: number;
  boxes: readonly BoxView[];
}

export interface ForcedEntry {
  box: string;
  label: string;
  action: MoveAction;
  rule: string;
  source: string | null;
}

export interface DecisionAccepted {
  accepted: true;
  forced: readonly ForcedEntry[];
  open: number;
  complete: boolean;
}

export interface ChainStep {
  box: string;
  label: string;
  action: MoveAction;
  rule: string;
  source: string | null;
}

export interface RejectionDetails {
  conflict: string | null;
  conflict_label: string | null;
  select_chain: readonly ChainStep[];
  discard_chain: readonly ChainStep[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  details?: unknown;
}

export interface AssetRow {
  id: string;
  name: string;
  kind: string;
  status: 'included' | 'excluded' | 'undecided';
}

export interface AssetsView {
  assets: readonly AssetRow[];
  included: readonly string[];
  excluded: readonly string[];
  undecided: readonly string[];
}

export interface UploadResponse {
  model_id: string;
  name: string;
  violations: readonly string[];
  cycles: readonly string[][];
  boxes: number;
  assets: number;
}
