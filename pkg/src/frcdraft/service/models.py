"""Request/response bodies for the HTTP API. Field-for-field schemas live
in docs/api.md; keep the two in sync."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class CreateSessionRequest(BaseModel):
    mode: str = "manual"
    our_team: Optional[str] = None
    ranking: Optional[list[str]] = None  # default: the service's ranking


class PickRequest(BaseModel):
    picked: str
    revision: int  # last revision the client saw; stale -> 409


class PredictRequest(BaseModel):
    # either two 7-float effectiveness vectors or two 3-team alliances
    red: Optional[list[float]] = None
    blue: Optional[list[float]] = None
    red_teams: Optional[list[str]] = None
    blue_teams: Optional[list[str]] = None


class PredictResponse(BaseModel):
    probability: float  # P(red wins)
    red_wins: bool


class AllianceView(BaseModel):
    seat: int
    captain: str
    partners: list[str]


class SessionState(BaseModel):
    ranking: list[str]
    alliances: list[AllianceView]
    pool: list[str]
    picks: list[dict]
    complete: bool
    current_picker: Optional[str]
    eligible: list[str]
    mode: str
    our_team: Optional[str] = None


class SessionResponse(BaseModel):
    session_id: str
    revision: int
    state: SessionState


class PickResponse(BaseModel):
    session_id: str
    revision: int
    event: dict
    state: SessionState


class RadarData(BaseModel):
    axes: list[str]
    current: list[float]
    with_candidate: list[float]


class SuggestionCard(BaseModel):
    team: str
    area: float  # alliance radar area if this team joins
    win_probability: Optional[float] = None  # vs. the average alliance
    radar: RadarData


class SuggestionsResponse(BaseModel):
    session_id: str
    revision: int
    picker: Optional[str]
    current_area: float
    cards: list[SuggestionCard]


class ProfileResponse(BaseModel):
    team_id: str
    match_count: int
    axes: list[str]
    raw_means: list[float]
    normalized: list[float]
    radar_area: float


class RankingsResponse(BaseModel):
    ranking: list[str]
    captains: list[str] = Field(default_factory=list)  # top eight


class AverageAllianceResponse(BaseModel):
    axes: list[str]
    vector: list[float]
    radar_area: float
