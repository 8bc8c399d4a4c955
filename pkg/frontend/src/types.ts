/** Payload shapes of the recommendation service API. */

export interface Distribution {
  p_negative: number;
  p_neutral: number;
  p_positive: number;
}

export interface ArticleCard {
  id: number;
  title: string;
  description: string;
}

export interface NextResponse {
  article: ArticleCard;
  action: string;
  state: string;
  distribution: Distribution;
}

export interface FeedbackResponse {
  reward: number;
  q_row: number[];
  state_updated: string;
  new_state: string;
}

export interface Snapshot {
  q: number[][];
  visits: number[][];
  greedy_policy: Record<string, string>;
  cumulative_reward: number;
  history_length: number;
  current_state: string;
}

export const STATES = ["Negative", "Neutral", "Positive"] as const;
export const ACTIONS = [
  "RecommendNegative",
  "RecommendNeutral",
  "RecommendPositive",
] as const;
