import { ACTIONS, STATES, type Snapshot } from "./types.js";

export interface HeatCell {
  state: string;
  action: string;
  /** Server-provided Q value, passed through verbatim. */
  value: number;
  /** 0..1 position on the snapshot's min-max color scale. */
  intensity: number;
  /** True when the server's greedy policy picks this cell's action. */
  outlined: boolean;
}

/**
 * Lay out the 3x3 grid for rendering. The color scale re-normalizes over the
 * snapshot's own min/max on every call, and the outlines come from the
 * server-computed greedy policy; nothing is derived from the q values here
 * beyond the color position.
 */
export function heatmapCells(snapshot: Snapshot): HeatCell[] {
  const values = snapshot.q.flat();
  const min = Math.min(...values);
  const max = Math.max(...values);
  const span = max - min;
  const cells: HeatCell[] = [];
  STATES.forEach((state, row) => {
    ACTIONS.forEach((action, column) => {
      const value = snapshot.q[row]?.[column] ?? 0;
      cells.push({
        state,
        action,
        value,
        intensity: span === 0 ? 0.5 : (value - min) / span,
        outlined: snapshot.greedy_policy[state] === action,
      });
    });
  });
  return cells;
}

/** Points for a simple polyline of the cumulative reward series. */
export function rewardPolyline(
  rewards: readonly number[],
  width: number,
  height: number,
): string {
  if (rewards.length === 0) return "";
  const maxReward = Math.max(...rewards, 1e-9);
  const step = rewards.length > 1 ? width / (rewards.length - 1) : 0;
  return rewards
    .map((value, i) => {
      const x = rewards.length > 1 ? i * step : width / 2;
      const y = height - (value / maxReward) * (height - 2) - 1;
      return `${x.toFixed(1)},${y.toFixed(1)}`;
    })
    .join(" ");
}
