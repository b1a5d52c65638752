"""Draft session registry: revisioned, single-writer, disk-replayable.

Each session appends its header and every accepted pick to one JSON-lines
file, so a process restart restores live drafts by replaying the log. The
revision equals the number of applied picks; writers must present the
revision they last saw and lose with StaleRevisionError if it moved.
"""

from __future__ import annotations

import json
import threading
import uuid
from pathlib import Path

from ..draft import DraftState, PickEvent


class UnknownSessionError(Exception):
    pass


class StaleRevisionError(Exception):
    def __init__(self, expected, actual):
        self.expected = expected
        self.actual = actual
        super().__init__(f"stale revision {expected}, session is at {actual}")


class Session:
    def __init__(self, session_id: str, state: DraftState, log_path: Path | None):
        self.session_id = session_id
        self.state = state
        self.events: list[PickEvent] = []
        self.revision = 0
        self.lock = threading.Lock()
        self.log_path = log_path

    def apply_pick(self, picked: str, expected_revision: int) -> PickEvent:
        """Serialized write: revision must match or the pick is refused."""
        with self.lock:
            if expected_revision != self.revision:
                raise StaleRevisionError(expected_revision, self.revision)
            event = self.state.apply_pick(picked)  # may raise IneligiblePickError
            self.events.append(event)
            self.revision += 1
            if self.log_path is not None:
                with open(self.log_path, "a", encoding="utf-8") as fh:
                    fh.write(json.dumps(event.to_dict()) + "\n")
        return event


class SessionStore:
    def __init__(self, persist_dir=None):
        self.persist_dir = Path(persist_dir) if persist_dir else None
        if self.persist_dir is not None:
            self.persist_dir.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        if self.persist_dir is not None:
            self._restore()

    def create(self, ranking, mode: str = "manual", our_team=None) -> Session:
        session_id = uuid.uuid4().hex[:12]
        state = DraftState(ranking, mode=mode, our_team=our_team)
        log_path = None
        if self.persist_dir is not None:
            log_path = self.persist_dir / f"{session_id}.jsonl"
            header = {
                "session_id": session_id,
                "ranking": list(state.original_ranking),
                "mode": mode,
                "our_team": our_team,
            }
            with open(log_path, "w", encoding="utf-8") as fh:
                fh.write(json.dumps(header) + "\n")
        session = Session(session_id, state, log_path)
        with self._lock:
            self._sessions[session_id] = session
        return session

    def get(self, session_id: str) -> Session:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownSessionError(session_id) from None

    def ids(self) -> list[str]:
        return sorted(self._sessions)

    def _restore(self):
        for log_path in sorted(self.persist_dir.glob("*.jsonl")):
            with open(log_path, encoding="utf-8") as fh:
                lines = [json.loads(l) for l in fh if l.strip()]
            if not lines:
                continue
            header, raw_events = lines[0], lines[1:]
            state = DraftState(
                header["ranking"],
                mode=header.get("mode", "manual"),
                our_team=header.get("our_team"),
            )
            session = Session(header["session_id"], state, log_path)
            for raw in raw_events:
                event = PickEvent.from_dict(raw)
                replayed = state.apply_pick(event.picked)
                if replayed != event:
                    raise ValueError(
                        f"{log_path}: replay diverged at pick {event.pick_number}"
                    )
                session.events.append(event)
                session.revision += 1
            self._sessions[session.session_id] = session
