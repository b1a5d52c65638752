import {
  SessionResponse,
  SessionState,
  SuggestionsResponse,
} from "../../src/types.js";

export const RANKING = [
  "2539", "5404", "103", "2168", "747", "3974", "1218", "708",
  "4342", "433", "293", "225", "2016", "5407", "486", "1495",
];

export function makeState(overrides: Partial<SessionState> = {}): SessionState {
  return {
    ranking: [...RANKING],
    alliances: RANKING.slice(0, 8).map((captain, i) => ({
      seat: i + 1,
      captain,
      partners: [],
    })),
    pool: RANKING.slice(8),
    picks: [],
    complete: false,
    current_picker: "2539",
    eligible: RANKING.slice(1),
    mode: "manual",
    our_team: null,
    ...overrides,
  };
}

export function makeSession(
  revision = 0,
  state: SessionState = makeState(),
  sessionId = "s-1",
): SessionResponse {
  return { session_id: sessionId, revision, state };
}

export function makeSuggestions(
  overrides: Partial<SuggestionsResponse> = {},
): SuggestionsResponse {
  const radar = {
    axes: [
      "TraditionalLow", "TraditionalHigh", "Technical",
      "Autonomous", "Endgame", "Fouls", "Defense",
    ],
    current: [0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5],
    with_candidate: [0.6, 0.7, 0.5, 0.4, 0.6, 0.8, 0.5],
  };
  return {
    session_id: "s-1",
    revision: 0,
    picker: "2539",
    current_area: 0.6872,
    cards: [
      { team: "433", area: 1.23456, win_probability: 0.6789, radar },
      { team: "293", area: 1.1, win_probability: null, radar },
      { team: "225", area: 0.98765, win_probability: 0.4321, radar },
    ],
    ...overrides,
  };
}
