"""HTTP facade over profiles, the winner predictor, and live draft sessions.

Every response is a pure projection of module state: the handlers only call
into the core package and never duplicate its logic. Profiles and the model
are immutable for the life of the app; draft sessions are the only mutable
state and all their writes go through the revisioned store.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware

from .. import draft as draft_mod
from .. import optimizer, predictor
from ..draft import DraftState, IneligiblePickError, TooFewTeamsError, DraftCompleteError
from ..indicators import AXES
from ..profiles import (
    MissingProfileError,
    ProfileSet,
    average_alliance,
    mean_effectiveness,
)
from .models import (
    AllianceView,
    AverageAllianceResponse,
    CreateSessionRequest,
    PickRequest,
    PickResponse,
    PredictRequest,
    PredictResponse,
    ProfileResponse,
    RadarData,
    RankingsResponse,
    SessionResponse,
    SessionState,
    SuggestionCard,
    SuggestionsResponse,
)
from .store import Session, SessionStore, StaleRevisionError, UnknownSessionError


def _session_state(session: Session) -> SessionState:
    state = session.state
    try:
        picker = state.current_picker()
    except DraftCompleteError:
        picker = None
    return SessionState(
        ranking=list(state.ranking),
        alliances=[AllianceView(**a) for a in state.alliances()],
        pool=state.pool(),
        picks=[e.to_dict() for e in session.events],
        complete=state.is_complete(),
        current_picker=picker,
        eligible=state.eligible_picks() if picker is not None else [],
        mode=state.mode,
        our_team=state.our_team,
    )


def create_app(
    profiles: ProfileSet,
    ranking,
    model: predictor.TrainedModel | None = None,
    persist_dir=None,
) -> FastAPI:
    """Wire the service around one profile set, one default ranking, and an
    optional trained model (without it, win probabilities are omitted)."""
    ranking = [str(t) for t in ranking]
    store = SessionStore(persist_dir)
    avg_vector = average_alliance(profiles)
    app = FastAPI(title="alliance draft service")
    # the browser UI is served from its own origin (static file server)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def get_session(session_id: str) -> Session:
        try:
            return store.get(session_id)
        except UnknownSessionError:
            raise HTTPException(404, f"unknown session {session_id!r}") from None

    @app.get("/rankings", response_model=RankingsResponse)
    def rankings():
        return RankingsResponse(ranking=ranking, captains=ranking[:8])

    @app.get("/profiles/{team}", response_model=ProfileResponse)
    def profile(team: str):
        try:
            p = profiles[team]
        except MissingProfileError:
            raise HTTPException(404, f"unknown team {team!r}") from None
        return ProfileResponse(
            team_id=p.team_id,
            match_count=p.match_count,
            axes=list(AXES),
            raw_means=[float(x) for x in p.raw_means],
            normalized=[float(x) for x in p.normalized],
            radar_area=optimizer.radar_area(p.normalized),
        )

    @app.get("/average-alliance", response_model=AverageAllianceResponse)
    def average():
        return AverageAllianceResponse(
            axes=list(AXES),
            vector=[float(x) for x in avg_vector],
            radar_area=optimizer.radar_area(avg_vector),
        )

    @app.post("/predict", response_model=PredictResponse)
    def predict_endpoint(body: PredictRequest):
        if model is None:
            raise HTTPException(503, "no model loaded")

        def side_vector(vec, teams, name):
            if (vec is None) == (teams is None):
                raise HTTPException(
                    422, f"provide exactly one of '{name}' or '{name}_teams'"
                )
            if vec is not None:
                if len(vec) != len(AXES):
                    raise HTTPException(422, f"'{name}' must have {len(AXES)} components")
                return np.array(vec, dtype=float)
            if len(teams) != 3:
                raise HTTPException(422, f"'{name}_teams' must list 3 teams")
            try:
                members = [profiles[t] for t in teams]
            except MissingProfileError as exc:
                raise HTTPException(404, str(exc)) from None
            return mean_effectiveness(members)

        red = side_vector(body.red, body.red_teams, "red")
        blue = side_vector(body.blue, body.blue_teams, "blue")
        try:
            proba, label = predictor.predict(model, red, blue)
        except (predictor.ShapeError, optimizer.DomainError) as exc:
            raise HTTPException(422, str(exc)) from None
        return PredictResponse(probability=proba, red_wins=bool(label))

    @app.post("/sessions", response_model=SessionResponse, status_code=201)
    def create_session(body: CreateSessionRequest):
        if body.mode not in (
            draft_mod.MODE_MANUAL,
            draft_mod.MODE_OPTIMIZE_ALL,
            draft_mod.MODE_OPTIMIZE_ONE,
        ):
            raise HTTPException(422, f"unknown mode {body.mode!r}")
        session_ranking = body.ranking if body.ranking is not None else ranking
        try:
            session = store.create(session_ranking, mode=body.mode, our_team=body.our_team)
        except (TooFewTeamsError, ValueError) as exc:
            raise HTTPException(422, str(exc)) from None
        return SessionResponse(
            session_id=session.session_id,
            revision=session.revision,
            state=_session_state(session),
        )

    @app.get("/sessions/{session_id}", response_model=SessionResponse)
    def get_session_state(session_id: str):
        session = get_session(session_id)
        return SessionResponse(
            session_id=session.session_id,
            revision=session.revision,
            state=_session_state(session),
        )

    @app.post("/sessions/{session_id}/picks", response_model=PickResponse)
    def apply_pick(session_id: str, body: PickRequest):
        session = get_session(session_id)
        try:
            event = session.apply_pick(body.picked, body.revision)
        except StaleRevisionError as exc:
            raise HTTPException(409, str(exc)) from None
        except (IneligiblePickError, DraftCompleteError) as exc:
            raise HTTPException(409, str(exc)) from None
        return PickResponse(
            session_id=session.session_id,
            revision=session.revision,
            event=event.to_dict(),
            state=_session_state(session),
        )

    @app.get("/sessions/{session_id}/suggestions", response_model=SuggestionsResponse)
    def suggestions(session_id: str, k: int = Query(default=3, ge=1, le=16)):
        session = get_session(session_id)
        state: DraftState = session.state
        try:
            picker = state.current_picker()
        except DraftCompleteError:
            return SuggestionsResponse(
                session_id=session.session_id,
                revision=session.revision,
                picker=None,
                current_area=0.0,
                cards=[],
            )
        try:
            members = [profiles[picker]] + [profiles[t] for t in state.partners[picker]]
            ranked = draft_mod.suggestions_for_current_picker(state, profiles, top_k=k)
        except MissingProfileError as exc:
            raise HTTPException(404, str(exc)) from None

        current_vec = mean_effectiveness(members)
        cards = []
        for team, area in ranked:
            with_vec = mean_effectiveness(members + [profiles[team]])
            win_probability = None
            if model is not None:
                proba, _ = predictor.predict(model, with_vec, avg_vector)
                win_probability = proba
            cards.append(
                SuggestionCard(
                    team=team,
                    area=area,
                    win_probability=win_probability,
                    radar=RadarData(
                        axes=list(AXES),
                        current=[float(x) for x in current_vec],
                        with_candidate=[float(x) for x in with_vec],
                    ),
                )
            )
        return SuggestionsResponse(
            session_id=session.session_id,
            revision=session.revision,
            picker=picker,
            current_area=optimizer.radar_area(current_vec),
            cards=cards,
        )

    return app
