import { SessionResponse, SessionState, SuggestionsResponse } from "./types.js";

// The view model is assembled purely from service responses; nothing here
// invents or recomputes draft data, so re-fetching always reproduces the
// identical board.

export interface ViewState {
  sessionId: string | null;
  revision: number;
  draft: SessionState | null;
  suggestions: SuggestionsResponse | null;
  focusTeam: string | null;
  pickError: string | null; // inline message from a rejected pick
  connectionLost: boolean;
}

export function initialState(): ViewState {
  return {
    sessionId: null,
    revision: 0,
    draft: null,
    suggestions: null,
    focusTeam: null,
    pickError: null,
    connectionLost: false,
  };
}

export function applySession(vs: ViewState, resp: SessionResponse): ViewState {
  const suggestions =
    vs.suggestions && vs.suggestions.revision === resp.revision ? vs.suggestions : null;
  return {
    ...vs,
    sessionId: resp.session_id,
    revision: resp.revision,
    draft: resp.state,
    suggestions,
    connectionLost: false,
  };
}

export function applySuggestions(vs: ViewState, resp: SuggestionsResponse): ViewState {
  if (resp.session_id !== vs.sessionId || resp.revision !== vs.revision) {
    return vs; // stale response from a previous revision; the poller will refetch
  }
  return { ...vs, suggestions: resp, connectionLost: false };
}

export function applyPickRejection(vs: ViewState, message: string): ViewState {
  return { ...vs, pickError: message };
}

export function clearPickError(vs: ViewState): ViewState {
  return vs.pickError === null ? vs : { ...vs, pickError: null };
}

export function setFocus(vs: ViewState, team: string | null): ViewState {
  return { ...vs, focusTeam: team };
}

export function setConnectionLost(vs: ViewState, lost: boolean): ViewState {
  return vs.connectionLost === lost ? vs : { ...vs, connectionLost: lost };
}

/** Seat number for a team if it currently captains an alliance. */
export function seatOf(state: SessionState, team: string): number | null {
  const row = state.alliances.find((a) => a.captain === team);
  return row ? row.seat : null;
}
