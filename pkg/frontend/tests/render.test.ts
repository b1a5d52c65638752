import { describe, expect, it } from "vitest";
import { fmtArea, fmtProbability } from "../src/radar.js";
import { renderBoard, renderSetup, renderSuggestions } from "../src/render.js";
import { applyPickRejection, applySession, applySuggestions, initialState } from "../src/state.js";
import { makeSession, makeState, makeSuggestions } from "./fixtures/board.js";

function boardFor(revision = 0, state = makeState()) {
  return applySession(initialState(), makeSession(revision, state));
}

describe("renderBoard", () => {
  it("shows the setup prompt before a session exists", () => {
    const html = renderBoard(initialState());
    expect(html).toContain('data-action="create-session"');
    expect(html).toBe(renderSetup());
  });

  it("is a pure function of the view state (snapshot determinism)", () => {
    let vs = boardFor(4);
    vs = applySuggestions(vs, makeSuggestions({ revision: 4 }));
    const first = renderBoard(vs);
    const second = renderBoard(structuredClone(vs));
    expect(second).toBe(first);
  });

  it("distinguishes all eight captain seats", () => {
    const html = renderBoard(boardFor());
    for (let seat = 1; seat <= 8; seat++) {
      expect(html).toContain(`<span class="seat-badge">seat ${seat}</span>`);
      expect(html).toContain(`<tr data-seat="${seat}">`);
    }
    // pool teams carry no badge
    expect(html).not.toContain('>4342 <span class="seat-badge"');
  });

  it("names the captain on the clock and the revision", () => {
    const html = renderBoard(boardFor(7));
    expect(html).toContain("On the clock: <strong>2539</strong>");
    expect(html).toContain("rev 7");
  });

  it("renders pick history with promotions", () => {
    const state = makeState({
      picks: [
        { pick_number: 1, picking_captain: "2539", picked: "225", promotions: [] },
        {
          pick_number: 2,
          picking_captain: "5404",
          picked: "2168",
          promotions: [["747", 5, 4], ["4342", 9, 8]],
        },
      ],
    });
    const html = renderBoard(boardFor(2, state));
    expect(html).toContain("#1 2539 picked 225");
    expect(html).toContain("#2 5404 picked 2168");
    expect(html).toContain("747 5&rarr;seat 4");
    expect(html).toContain("4342 9&rarr;seat 8");
  });

  it("shows the inline rejection message without touching the board", () => {
    const vs = boardFor(3);
    const rejected = applyPickRejection(vs, "stale revision: expected 4");
    const html = renderBoard(rejected);
    expect(html).toContain('role="alert"');
    expect(html).toContain("stale revision: expected 4");
    // board content identical apart from the error paragraph
    expect(renderBoard(vs)).not.toContain("stale revision");
    expect(html).toContain("rev 3");
  });

  it("replaces the pick form once the draft completes", () => {
    const state = makeState({ complete: true, current_picker: null, eligible: [] });
    const html = renderBoard(boardFor(16, state));
    expect(html).toContain("Draft complete.");
    expect(html).not.toContain('data-action="enter-pick"');
  });

  it("shows the offline banner when the connection drops", () => {
    const vs = { ...boardFor(), connectionLost: true };
    expect(renderBoard(vs)).toContain("Connection lost");
    expect(renderBoard({ ...vs, connectionLost: false })).not.toContain("Connection lost");
  });

  it("escapes hostile team ids", () => {
    const evil = '<img src=x onerror="1">';
    const state = makeState({ ranking: [evil], alliances: [], pool: [evil], current_picker: evil });
    const html = renderBoard(boardFor(0, state));
    expect(html).not.toContain("<img");
    expect(html).toContain("&lt;img");
  });
});

describe("renderSuggestions", () => {
  it("renders cards in service order with verbatim numbers", () => {
    const sugg = makeSuggestions();
    const html = renderSuggestions(sugg);

    const teams = [...html.matchAll(/data-team="([^"]+)"/g)].map((m) => m[1]);
    expect(teams).toEqual(["433", "293", "225"]);

    const areas = [...html.matchAll(/<dd class="area">([^<]+)<\/dd>/g)].map((m) => m[1]);
    expect(areas).toEqual(sugg.cards.map((c) => fmtArea(c.area)));

    const probs = [...html.matchAll(/<dd class="winprob">([^<]+)<\/dd>/g)].map((m) => m[1]);
    expect(probs).toEqual(sugg.cards.map((c) => fmtProbability(c.win_probability)));
    expect(probs[1]).toBe("n/a");

    expect(html).toContain(`current area ${fmtArea(sugg.current_area)}`);
    expect(html).toContain("Suggested picks for 2539");
  });

  it("draws the with-candidate overlay on every card", () => {
    const html = renderSuggestions(makeSuggestions());
    const overlays = html.match(/stroke-dasharray/g) ?? [];
    expect(overlays.length).toBe(3);
  });

  it("handles an empty card list", () => {
    expect(renderSuggestions(makeSuggestions({ cards: [] }))).toContain("No suggestions.");
  });
});
