import { ApiClient, ApiError } from "./api.js";
import type { NextResponse, Snapshot } from "./types.js";

export interface ViewState {
  sessionId: string | null;
  card: NextResponse | null;
  snapshot: Snapshot | null;
  /** Cumulative reward after each accepted feedback, for the trace. */
  rewardSeries: number[];
  /** True while a request is in flight; feedback controls are disabled. */
  pending: boolean;
  error: string | null;
}

type Listener = (state: ViewState) => void;

/**
 * Session state machine. One in-flight request at a time; the dwell timer
 * starts when a card lands and its elapsed time is posted with the feedback.
 * All displayed numbers (q values, policy, rewards) are server responses
 * stored verbatim.
 */
export class SessionController {
  private state: ViewState = {
    sessionId: null,
    card: null,
    snapshot: null,
    rewardSeries: [],
    pending: false,
    error: null,
  };
  private renderedAt = 0;
  private listeners: Listener[] = [];

  constructor(
    private readonly api: ApiClient,
    private readonly now: () => number = () => Date.now(),
  ) {}

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  getState(): ViewState {
    return this.state;
  }

  private update(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  async start(): Promise<void> {
    if (this.state.pending) return;
    this.update({ pending: true, error: null });
    try {
      const sessionId = await this.api.createSession();
      const snapshot = await this.api.snapshot(sessionId);
      this.update({ sessionId, snapshot, pending: false });
    } catch (error) {
      this.update({ pending: false, error: describe(error) });
      return;
    }
    await this.fetchNext();
  }

  async fetchNext(): Promise<void> {
    const { sessionId } = this.state;
    if (sessionId === null || this.state.pending) return;
    this.update({ pending: true, error: null });
    try {
      const card = await this.api.next(sessionId);
      this.renderedAt = this.now();
      this.update({ card, pending: false });
    } catch (error) {
      this.update({ card: null, pending: false, error: describe(error) });
    }
  }

  /** Engage or skip the current card; dwell is the time since it rendered. */
  async submitFeedback(engaged: boolean): Promise<void> {
    const { sessionId, card } = this.state;
    if (sessionId === null || card === null || this.state.pending) return;
    const dwellMs = Math.max(0, Math.round(this.now() - this.renderedAt));
    this.update({ pending: true, error: null });
    try {
      await this.api.feedback(sessionId, card.article.id, engaged, dwellMs);
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        // Stale card: the outstanding recommendation moved on; recover.
        this.update({ card: null, pending: false });
        await this.fetchNext();
        return;
      }
      this.update({ pending: false, error: describe(error) });
      return;
    }
    try {
      const snapshot = await this.api.snapshot(sessionId);
      this.update({
        snapshot,
        rewardSeries: [...this.state.rewardSeries, snapshot.cumulative_reward],
        card: null,
        pending: false,
      });
    } catch (error) {
      this.update({ pending: false, error: describe(error) });
      return;
    }
    await this.fetchNext();
  }

  dismissError(): void {
    this.update({ error: null });
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) return `${error.status}: ${error.message}`;
  return error instanceof Error ? error.message : String(error);
}
