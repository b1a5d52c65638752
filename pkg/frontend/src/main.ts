import { ConflictError, DraftApi } from "./api.js";
import { startPolling } from "./poll.js";
import { renderBoard } from "./render.js";
import {
  applyPickRejection,
  applySession,
  applySuggestions,
  clearPickError,
  initialState,
  setConnectionLost,
  ViewState,
} from "./state.js";

// Thin DOM shell: holds the ViewState, repaints #app on change, and forwards
// data-action events to the service. All draft truth lives server-side.

const api = new DraftApi(
  new URLSearchParams(location.search).get("api") ?? "http://127.0.0.1:8000",
);

let vs: ViewState = initialState();
const app = document.getElementById("app");
if (!app) throw new Error("missing #app mount point");

let lastHtml = "";
function paint() {
  const html = renderBoard(vs);
  if (html !== lastHtml) {
    app!.innerHTML = html;
    lastHtml = html;
  }
}

function update(next: ViewState) {
  vs = next;
  paint();
}

async function refresh(): Promise<void> {
  if (!vs.sessionId) return;
  const session = await api.session(vs.sessionId);
  let next = applySession(vs, session);
  if (!next.draft?.complete && next.suggestions === null) {
    const sugg = await api.suggestions(session.session_id, 3);
    next = applySuggestions(next, sugg);
  }
  update(setConnectionLost(next, false));
}

async function enterPick(team: string): Promise<void> {
  if (!vs.sessionId) return;
  try {
    const resp = await api.pick(vs.sessionId, team, vs.revision);
    update(clearPickError(applySession(vs, resp)));
    await refresh();
  } catch (err) {
    if (err instanceof ConflictError) {
      // ineligible or stale: surface the reason, then re-sync the board
      update(applyPickRejection(vs, err.detail));
      await refresh();
    } else {
      throw err;
    }
  }
}

document.addEventListener("submit", (ev) => {
  const form = ev.target as HTMLFormElement;
  const action = form.dataset["action"];
  if (!action) return;
  ev.preventDefault();
  const data = new FormData(form);
  if (action === "create-session") {
    const mode = String(data.get("mode") ?? "manual");
    const ourTeam = String(data.get("our_team") ?? "").trim() || undefined;
    void api
      .createSession(mode, ourTeam)
      .then((resp) => {
        update(applySession(vs, resp));
        return refresh();
      })
      .catch((err) => update(applyPickRejection(vs, String(err))));
  } else if (action === "enter-pick") {
    const picked = String(data.get("picked") ?? "").trim();
    if (picked) void enterPick(picked);
    form.reset();
  }
});

document.addEventListener("click", (ev) => {
  const card = (ev.target as HTMLElement).closest<HTMLElement>('[data-action="pick-suggestion"]');
  if (card?.dataset["team"]) void enterPick(card.dataset["team"]);
});

startPolling(refresh, {
  intervalMs: 1000,
  onError: () => update(setConnectionLost(vs, true)),
  onRecover: () => update(setConnectionLost(vs, false)),
});

paint();
