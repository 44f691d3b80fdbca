/** Thin typed client for the configuration service. */

import type {
  ApiErrorBody,
  AssetsView,
  DecisionAccepted,
  MoveAction,
  RejectionDetails,
  SessionView,
  UploadResponse,
} from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** A decision the engine rolled back; carries both derivation chains. */
export class RejectedError extends Error {
  constructor(readonly details: RejectionDetails) {
    super(`decision rejected at ${details.conflict_label ?? 'unknown'}`);
    this.name = 'RejectedError';
  }
}

export class ApiError extends Error {
  constructor(readonly status: number, readonly body: ApiErrorBody) {
    super(`${body.code}: ${body.message}`);
    this.name = 'ApiError';
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (response.ok) {
      return (await response.json()) as T;
    }
    const body = (await response.json()) as ApiErrorBody;
    if (response.status === 409 && body.code === 'rejected') {
      throw new RejectedError(body.details as RejectionDetails);
    }
    throw new ApiError(response.status, body);
  }

  uploadModel(text: string): Promise<UploadResponse> {
    return this.request('/models', {
      method: 'POST',
      headers: { 'content-type': 'text/plain; charset=utf-8' },
      body: text,
    });
  }

  createSession(modelId: string): Promise<SessionView> {
    return this.request(`/models/${modelId}/sessions`, { method: 'POST' });
  }

  getSession(sessionId: string): Promise<SessionView> {
    return this.request(`/sessions/${sessionId}`);
  }

  decide(sessionId: string, label: string, action: MoveAction): Promise<DecisionAccepted> {
    return this.request(`/sessions/${sessionId}/decisions`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ label, action }),
    });
  }

  undo(sessionId: string): Promise<SessionView> {
    return this.request(`/sessions/${sessionId}/undo`, { method: 'POST' });
  }

  getAssets(sessionId: string): Promise<AssetsView> {
    return this.request(`/sessions/${sessionId}/assets`);
  }

  async exportConfig(sessionId: string): Promise<string> {
    const response = await this.fetchFn(`${this.baseUrl}/sessions/${sessionId}/export`);
    if (!response.ok) {
      throw new ApiError(response.status, (await response.json()) as ApiErrorBody);
    }
    return response.text();
  }
}
