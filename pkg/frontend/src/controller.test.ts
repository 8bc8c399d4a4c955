import { describe, expect, it } from "vitest";

import { ApiClient } from "./api.js";
import { SessionController } from "./controller.js";
import { MockService } from "./testing/mockServer.js";
import type { Snapshot } from "./types.js";

function setup(nowValues: number[] = []) {
  const mock = new MockService();
  const clock = { t: 0 };
  const queue = [...nowValues];
  const now = () => (queue.length ? queue.shift()! : (clock.t += 1000));
  const controller = new SessionController(
    new ApiClient("", mock.fetch), now);
  return { mock, controller };
}

function changedCells(before: Snapshot, after: Snapshot): Array<[number, number]> {
  const cells: Array<[number, number]> = [];
  for (let r = 0; r < 3; r++) {
    for (let c = 0; c < 3; c++) {
      if (before.q[r]![c] !== after.q[r]![c]) cells.push([r, c]);
    }
  }
  return cells;
}

describe("session flow", () => {
  it("starts a session and loads a card", async () => {
    const { controller } = setup();
    await controller.start();
    const state = controller.getState();
    expect(state.sessionId).toBe("mock-session");
    expect(state.card).not.toBeNull();
    expect(state.snapshot).not.toBeNull();
    expect(state.pending).toBe(false);
    expect(state.error).toBeNull();
  });

  it("one engage changes exactly one q cell in the next snapshot", async () => {
    const { controller } = setup();
    await controller.start();
    const before = controller.getState().snapshot!;
    await controller.submitFeedback(true);
    const after = controller.getState().snapshot!;
    const changed = changedCells(before, after);
    expect(changed).toHaveLength(1);
    // the changed row is the state the recommendation was made in (Neutral)
    expect(changed[0]![0]).toBe(1);
    expect(after.history_length).toBe(before.history_length + 1);
  });

  it("displays q values verbatim from the server snapshot", async () => {
    const { mock, controller } = setup();
    await controller.start();
    await controller.submitFeedback(true);
    const shown = controller.getState().snapshot!;
    const serverSide = mock.snapshotBody();
    expect(shown.q).toEqual(serverSide.q);
    expect(shown.greedy_policy).toEqual(serverSide.greedy_policy);
    expect(shown.cumulative_reward).toBe(serverSide.cumulative_reward);
  });

  it("posts the dwell time elapsed since the card rendered", async () => {
    // now() sequence: card render stamp, then the button press 15 s later
    const { mock, controller } = setup([100_000, 115_000]);
    await controller.start();
    await controller.submitFeedback(true);
    expect(mock.lastFeedbackBody).not.toBeNull();
    expect(mock.lastFeedbackBody!.dwell_ms).toBe(15_000);
    expect(mock.lastFeedbackBody!.engaged).toBe(true);
  });

  it("skip posts engaged=false", async () => {
    const { mock, controller } = setup();
    await controller.start();
    await controller.submitFeedback(false);
    expect(mock.lastFeedbackBody!.engaged).toBe(false);
  });

  it("pending flag prevents a double submit", async () => {
    const { mock, controller } = setup();
    await controller.start();
    const first = controller.submitFeedback(true);
    const second = controller.submitFeedback(true); // no-op: already pending
    await Promise.all([first, second]);
    const feedbackPosts = mock.requests.filter(
      (r) => r.path.endsWith("/feedback"));
    expect(feedbackPosts).toHaveLength(1);
  });

  it("recovers from a stale-card 409 by refetching", async () => {
    const { mock, controller } = setup();
    await controller.start();
    mock.failNextFeedbackWith = 409;
    await controller.submitFeedback(true);
    const state = controller.getState();
    expect(state.error).toBeNull();
    expect(state.card).not.toBeNull();
    expect(state.snapshot!.history_length).toBe(0); // nothing was applied
  });

  it("surfaces next-endpoint failures as a dismissible error", async () => {
    const { mock, controller } = setup();
    await controller.start();
    await controller.submitFeedback(true);
    mock.failNextNextWith = 503;
    await controller.fetchNext();
    expect(controller.getState().error).toContain("503");
    controller.dismissError();
    expect(controller.getState().error).toBeNull();
  });

  it("appends the cumulative reward after each feedback", async () => {
    const { controller } = setup();
    await controller.start();
    await controller.submitFeedback(true);
    await controller.submitFeedback(false);
    const series = controller.getState().rewardSeries;
    expect(series).toHaveLength(2);
    expect(series[1]!).toBeGreaterThanOrEqual(series[0]!);
  });
});
