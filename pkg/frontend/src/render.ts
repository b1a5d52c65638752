import { fmtArea, fmtProbability, radarSvg } from "./radar.js";
import { ViewState } from "./state.js";
import { SessionState, SuggestionsResponse } from "./types.js";

// String-template renderer: every render is a pure function of ViewState, so
// a snapshot fetched twice paints the identical board. Interactive elements
// carry data-action attributes wired up by main.ts event delegation.

function esc(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderSetup(): string {
  return `
  <section class="setup">
    <h1>Alliance draft assistant</h1>
    <p>Start a draft session from the service's current rankings.</p>
    <form data-action="create-session">
      <label>Mode
        <select name="mode">
          <option value="manual">manual</option>
          <option value="optimize-one">optimize-one (assist my team)</option>
        </select>
      </label>
      <label>Our team (optimize-one) <input name="our_team" placeholder="1218"></label>
      <button type="submit">Start session</button>
    </form>
  </section>`;
}

function renderRanking(state: SessionState): string {
  const seats = new Map(state.alliances.map((a) => [a.captain, a.seat]));
  const rows = state.ranking
    .map((team) => {
      const seat = seats.get(team);
      const cls = seat !== undefined ? "rank-row captain" : "rank-row";
      const badge = seat !== undefined ? `<span class="seat-badge">seat ${seat}</span>` : "";
      return `<li class="${cls}" data-team="${esc(team)}">${esc(team)} ${badge}</li>`;
    })
    .join("");
  return `<ol class="ranking">${rows}</ol>`;
}

function renderAlliances(state: SessionState): string {
  const rows = state.alliances
    .map(
      (a) =>
        `<tr data-seat="${a.seat}"><td>${a.seat}</td><td class="captain-cell">${esc(a.captain)}</td>` +
        `<td>${a.partners.map(esc).join(", ") || "&mdash;"}</td></tr>`,
    )
    .join("");
  return `
  <table class="alliances">
    <thead><tr><th>Seat</th><th>Captain</th><th>Partners</th></tr></thead>
    <tbody>${rows}</tbody>
  </table>`;
}

function renderPicks(state: SessionState): string {
  if (state.picks.length === 0) return `<p class="no-picks">No picks yet.</p>`;
  const rows = state.picks
    .map((p) => {
      const promos = p.promotions
        .map(([team, from, to]) => `${esc(team)} ${from}&rarr;seat ${to}`)
        .join("; ");
      return (
        `<li>#${p.pick_number} ${esc(p.picking_captain)} picked ${esc(p.picked)}` +
        (promos ? ` <span class="promotions">(${promos})</span>` : "") +
        `</li>`
      );
    })
    .join("");
  return `<ol class="pick-history">${rows}</ol>`;
}

function renderPickForm(vs: ViewState, state: SessionState): string {
  if (state.complete) return `<p class="draft-complete">Draft complete.</p>`;
  const err = vs.pickError ? `<p class="pick-error" role="alert">${esc(vs.pickError)}</p>` : "";
  return `
  <form class="pick-form" data-action="enter-pick">
    <label>${esc(state.current_picker ?? "")} picks:
      <input name="picked" autocomplete="off" placeholder="team id">
    </label>
    <button type="submit">Enter pick</button>
    ${err}
  </form>`;
}

export function renderSuggestions(sugg: SuggestionsResponse): string {
  if (sugg.cards.length === 0) return `<p class="no-suggestions">No suggestions.</p>`;
  const cards = sugg.cards
    .map(
      (card) => `
    <div class="card" data-action="pick-suggestion" data-team="${esc(card.team)}" role="button">
      <h3>${esc(card.team)}</h3>
      ${radarSvg(card.radar.current, card.radar.with_candidate)}
      <dl>
        <dt>Alliance area</dt><dd class="area">${fmtArea(card.area)}</dd>
        <dt>Win vs average</dt><dd class="winprob">${fmtProbability(card.win_probability)}</dd>
      </dl>
    </div>`,
    )
    .join("");
  return `
  <div class="suggestions">
    <h2>Suggested picks for ${esc(sugg.picker ?? "")}
      <small>current area ${fmtArea(sugg.current_area)}</small></h2>
    <div class="cards">${cards}</div>
  </div>`;
}

export function renderBoard(vs: ViewState): string {
  if (!vs.draft) return renderSetup();
  const state = vs.draft;
  const banner = vs.connectionLost
    ? `<div class="banner offline" role="alert">Connection lost &mdash; retrying&hellip;</div>`
    : "";
  const turn = state.complete
    ? "Draft complete"
    : `On the clock: <strong>${esc(state.current_picker ?? "")}</strong>`;
  return `
  ${banner}
  <header>
    <h1>Alliance selection</h1>
    <p class="turn">${turn} <span class="revision">rev ${vs.revision}</span></p>
  </header>
  <main class="board">
    <section class="col rankings-col"><h2>Rankings</h2>${renderRanking(state)}</section>
    <section class="col alliances-col">
      <h2>Alliances</h2>
      ${renderAlliances(state)}
      ${renderPickForm(vs, state)}
      ${renderPicks(state)}
    </section>
    <section class="col suggestions-col">
      ${vs.suggestions ? renderSuggestions(vs.suggestions) : `<p class="no-suggestions">Loading suggestions&hellip;</p>`}
    </section>
  </main>`;
}
