import type { ViewState } from "./controller.js";
import { heatmapCells, rewardPolyline } from "./heatmap.js";
import type { Distribution } from "./types.js";

const BADGE_CLASS: Record<string, string> = {
  RecommendNegative: "badge-negative",
  RecommendNeutral: "badge-neutral",
  RecommendPositive: "badge-positive",
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderDistributionBar(dist: Distribution): HTMLElement {
  const bar = el("div", "dist-bar");
  const segments: Array<[string, number]> = [
    ["seg-negative", dist.p_negative],
    ["seg-neutral", dist.p_neutral],
    ["seg-positive", dist.p_positive],
  ];
  for (const [cls, share] of segments) {
    const segment = el("div", `dist-seg ${cls}`);
    segment.style.width = `${(share * 100).toFixed(2)}%`;
    segment.title = `${(share * 100).toFixed(1)}%`;
    bar.appendChild(segment);
  }
  return bar;
}

export function renderCard(state: ViewState): HTMLElement {
  const container = el("section", "card");
  if (!state.card) {
    container.appendChild(
      el("p", "placeholder",
         state.pending ? "loading…" : "no article loaded"),
    );
    return container;
  }
  const { article, action, distribution } = state.card;
  const head = el("div", "card-head");
  head.appendChild(el("span", `badge ${BADGE_CLASS[action] ?? ""}`, action));
  head.appendChild(el("span", "card-state", `state: ${state.card.state}`));
  container.appendChild(head);
  container.appendChild(el("h2", "card-title", article.title));
  container.appendChild(el("p", "card-desc", article.description));
  container.appendChild(renderDistributionBar(distribution));
  return container;
}

export function renderHeatmap(state: ViewState): HTMLElement {
  const wrap = el("section", "heatmap");
  wrap.appendChild(el("h3", undefined, "action values"));
  if (!state.snapshot) {
    wrap.appendChild(el("p", "placeholder", "no snapshot yet"));
    return wrap;
  }
  const grid = el("div", "heat-grid");
  grid.appendChild(el("div", "heat-corner", ""));
  for (const action of ["RecNegative", "RecNeutral", "RecPositive"]) {
    grid.appendChild(el("div", "heat-label", action));
  }
  const cells = heatmapCells(state.snapshot);
  for (let row = 0; row < 3; row++) {
    grid.appendChild(el("div", "heat-label", cells[row * 3]!.state));
    for (let col = 0; col < 3; col++) {
      const cell = cells[row * 3 + col]!;
      const node = el("div",
                      `heat-cell${cell.outlined ? " greedy" : ""}`,
                      cell.value.toFixed(3));
      node.dataset.state = cell.state;
      node.dataset.action = cell.action;
      node.style.backgroundColor =
        `rgba(30, 90, 160, ${(0.15 + 0.85 * cell.intensity).toFixed(3)})`;
      grid.appendChild(node);
    }
  }
  wrap.appendChild(grid);
  const meta = el("p", "heat-meta",
                  `cumulative reward ${state.snapshot.cumulative_reward.toFixed(2)} · ` +
                  `${state.snapshot.history_length} feedback events`);
  wrap.appendChild(meta);
  return wrap;
}

export function renderRewardTrace(state: ViewState): HTMLElement {
  const wrap = el("section", "trace");
  wrap.appendChild(el("h3", undefined, "cumulative reward"));
  const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
  svg.setAttribute("viewBox", "0 0 300 60");
  svg.setAttribute("class", "trace-svg");
  const line = document.createElementNS("http://www.w3.org/2000/svg", "polyline");
  line.setAttribute("points", rewardPolyline(state.rewardSeries, 300, 60));
  line.setAttribute("fill", "none");
  line.setAttribute("stroke", "#2a7");
  line.setAttribute("stroke-width", "2");
  svg.appendChild(line);
  wrap.appendChild(svg);
  return wrap;
}

export function renderBanner(state: ViewState,
                             onDismiss: () => void): HTMLElement | null {
  if (!state.error) return null;
  const banner = el("div", "banner", state.error);
  const button = el("button", "banner-close", "dismiss");
  button.addEventListener("click", onDismiss);
  banner.appendChild(button);
  return banner;
}

export function render(root: HTMLElement, state: ViewState,
                       handlers: { engage(): void; skip(): void;
                                   dismiss(): void }): void {
  root.replaceChildren();
  const banner = renderBanner(state, handlers.dismiss);
  if (banner) root.appendChild(banner);
  root.appendChild(renderCard(state));

  const controls = el("div", "controls");
  const engage = el("button", "btn btn-engage", "engage");
  const skip = el("button", "btn btn-skip", "skip");
  engage.disabled = state.pending || !state.card;
  skip.disabled = state.pending || !state.card;
  engage.addEventListener("click", handlers.engage);
  skip.addEventListener("click", handlers.skip);
  controls.append(engage, skip);
  root.appendChild(controls);

  root.appendChild(renderHeatmap(state));
  root.appendChild(renderRewardTrace(state));
}
