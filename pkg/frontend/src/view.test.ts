// @vitest-environment happy-dom
import { describe, expect, it } from "vitest";

import type { ViewState } from "./controller.js";
import { render, renderDistributionBar, renderHeatmap } from "./view.js";
import type { NextResponse, Snapshot } from "./types.js";

function card(): NextResponse {
  return {
    article: { id: 2, title: "charity run raises record total",
               description: "a wonderful day out" },
    action: "RecommendPositive",
    state: "Neutral",
    distribution: { p_negative: 0.0002, p_neutral: 0.2659, p_positive: 0.7339 },
  };
}

function snapshot(): Snapshot {
  return {
    q: [[8.748895, 8.73085, 8.741671],
        [8.603612, 8.634936, 8.635025],
        [12.509972, 12.495487, 12.532446]],
    visits: [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
    greedy_policy: {
      Negative: "RecommendNegative",
      Neutral: "RecommendPositive",
      Positive: "RecommendPositive",
    },
    cumulative_reward: 3.25,
    history_length: 2,
    current_state: "Neutral",
  };
}

function viewState(overrides: Partial<ViewState> = {}): ViewState {
  return {
    sessionId: "mock-session",
    card: card(),
    snapshot: snapshot(),
    rewardSeries: [1.5, 3.25],
    pending: false,
    error: null,
    ...overrides,
  };
}

const noop = { engage() {}, skip() {}, dismiss() {} };

describe("distribution bar", () => {
  it("positive segment dominates for a positive-heavy triple", () => {
    const bar = renderDistributionBar(card().distribution);
    const widths = Array.from(bar.children).map(
      (seg) => parseFloat((seg as HTMLElement).style.width));
    expect(widths[2]!).toBeGreaterThan(widths[0]!);
    expect(widths[2]!).toBeGreaterThan(widths[1]!);
    expect(widths[2]!).toBeCloseTo(73.39, 1);
  });
});

describe("heatmap rendering", () => {
  it("draws nine cells showing the server values", () => {
    const node = renderHeatmap(viewState());
    const cells = node.querySelectorAll(".heat-cell");
    expect(cells).toHaveLength(9);
    expect(cells[8]!.textContent).toBe("12.532");
    expect(cells[0]!.textContent).toBe("8.749");
  });

  it("outlines the server greedy policy cells", () => {
    const node = renderHeatmap(viewState());
    const outlined = Array.from(node.querySelectorAll(".heat-cell.greedy"))
      .map((cell) => [(cell as HTMLElement).dataset.state,
                      (cell as HTMLElement).dataset.action]);
    expect(outlined).toEqual([
      ["Negative", "RecommendNegative"],
      ["Neutral", "RecommendPositive"],
      ["Positive", "RecommendPositive"],
    ]);
  });

  it("positive row is visibly brightest", () => {
    const node = renderHeatmap(viewState());
    const alpha = (cell: Element) => {
      const match = /rgba\([\d\s,]+,\s*([\d.]+)\)/.exec(
        (cell as HTMLElement).style.backgroundColor);
      return match ? parseFloat(match[1]!) : NaN;
    };
    const cells = Array.from(node.querySelectorAll(".heat-cell"));
    const positiveRow = cells.slice(6).map(alpha);
    const otherRows = cells.slice(0, 6).map(alpha);
    expect(Math.min(...positiveRow)).toBeGreaterThan(Math.max(...otherRows));
  });
});

describe("full render", () => {
  it("shows title, description, badge, and enabled controls", () => {
    const root = document.createElement("main");
    render(root, viewState(), noop);
    expect(root.querySelector(".card-title")!.textContent)
      .toBe("charity run raises record total");
    expect(root.querySelector(".badge")!.textContent).toBe("RecommendPositive");
    const buttons = root.querySelectorAll<HTMLButtonElement>(".btn");
    expect(buttons).toHaveLength(2);
    expect(buttons[0]!.disabled).toBe(false);
  });

  it("disables feedback controls while pending", () => {
    const root = document.createElement("main");
    render(root, viewState({ pending: true, card: null }), noop);
    const buttons = root.querySelectorAll<HTMLButtonElement>(".btn");
    expect(buttons[0]!.disabled).toBe(true);
    expect(buttons[1]!.disabled).toBe(true);
  });

  it("shows a dismissible banner on error", () => {
    const root = document.createElement("main");
    let dismissed = false;
    render(root, viewState({ error: "409: article pool is empty" }),
           { ...noop, dismiss: () => { dismissed = true; } });
    const banner = root.querySelector(".banner")!;
    expect(banner.textContent).toContain("409");
    (banner.querySelector("button") as HTMLButtonElement).click();
    expect(dismissed).toBe(true);
  });
});
