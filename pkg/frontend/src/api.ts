import type { FeedbackResponse, NextResponse, Snapshot } from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** Thin typed wrapper over the documented JSON endpoints. */
export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.base + path, init);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = (await response.json()) as { detail?: string };
        if (body.detail) detail = body.detail;
      } catch {
        /* non-JSON error body; keep the status text */
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  async createSession(): Promise<string> {
    const body = await this.request<{ session_id: string }>("/api/session", {
      method: "POST",
    });
    return body.session_id;
  }

  next(sessionId: string): Promise<NextResponse> {
    return this.request(`/api/session/${sessionId}/next`);
  }

  feedback(
    sessionId: string,
    articleId: number,
    engaged: boolean,
    dwellMs: number,
  ): Promise<FeedbackResponse> {
    return this.request(`/api/session/${sessionId}/feedback`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({
        article_id: articleId,
        engaged,
        dwell_ms: dwellMs,
      }),
    });
  }

  snapshot(sessionId: string): Promise<Snapshot> {
    return this.request(`/api/session/${sessionId}/qtable`);
  }
}
