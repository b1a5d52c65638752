"""Per-robot skill extraction and [0,1] normalization.

Alliance-level raw indicator vectors are attributed to every robot on the
alliance; a robot's raw profile is the arithmetic mean over all matches it
played. Positive indicators normalize as score / max-over-robots; Fouls and
Defense (non-positive) normalize as 1 - score / min-over-robots, so the worst
offender lands at 0 and a blameless robot at 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .indicators import AXES, DEFENSE, FOULS, NUM_AXES, YearSchema, score_alliance

PROFILES_FORMAT_VERSION = 1


class YearMismatchError(Exception):
    pass


class DuplicateMemberError(Exception):
    pass


class MissingProfileError(Exception):
    def __init__(self, team_id):
        self.team_id = team_id
        super().__init__(f"no profile for team {team_id!r}")


@dataclass(frozen=True)
class RawMeans:
    """Mean raw indicator vector for one robot plus its match count."""

    vector: np.ndarray
    match_count: int


@dataclass(frozen=True)
class RobotProfile:
    team_id: str
    match_count: int
    raw_means: np.ndarray
    normalized: np.ndarray


@dataclass(frozen=True)
class ProfileSet:
    """All robot profiles for one normalization population.

    ``extrema`` is a 7-vector: the per-indicator max of raw means on the five
    positive axes and the per-indicator min on Fouls and Defense.
    """

    year: int
    profiles: dict[str, RobotProfile]
    extrema: np.ndarray

    def __getitem__(self, team_id: str) -> RobotProfile:
        try:
            return self.profiles[team_id]
        except KeyError:
            raise MissingProfileError(team_id) from None

    def team_ids(self) -> list[str]:
        return sorted(self.profiles)


def aggregate_robot_profiles(datasets, schema: YearSchema) -> dict[str, RawMeans]:
    """Mean alliance raw vector per team over every match the team played.

    All datasets must share the schema's year. Teams with zero matches are
    absent from the result.
    """
    sums: dict[str, np.ndarray] = {}
    counts: dict[str, int] = {}
    for ds in datasets:
        if ds.matches and ds.year != schema.year:
            raise YearMismatchError(
                f"dataset {ds.event_key!r} is {ds.year}, schema is {schema.year}"
            )
        for match in ds.matches:
            red_vec = score_alliance(match, "red", schema)
            blue_vec = score_alliance(match, "blue", schema)
            for team in match.red_teams:
                sums[team] = sums.get(team, 0) + red_vec
                counts[team] = counts.get(team, 0) + 1
            for team in match.blue_teams:
                sums[team] = sums.get(team, 0) + blue_vec
                counts[team] = counts.get(team, 0) + 1
    # stable order by team id so downstream extrema scans are deterministic
    return {
        team: RawMeans(vector=sums[team] / counts[team], match_count=counts[team])
        for team in sorted(sums)
    }


def normalize_profiles(raw: dict[str, RawMeans], year: int) -> ProfileSet:
    """Scale raw means onto [0,1] per indicator.

    Degenerate denominators: a positive indicator nobody scored on maps
    everyone to 0; a Fouls/Defense indicator with no negative mass maps
    everyone to 1.
    """
    if not raw:
        raise ValueError("cannot normalize an empty profile map")
    teams = sorted(raw)
    table = np.vstack([raw[t].vector for t in teams])

    extrema = np.empty(NUM_AXES)
    extrema[:FOULS] = table[:, :FOULS].max(axis=0)
    extrema[FOULS:] = table[:, FOULS:].min(axis=0)

    normalized = np.zeros_like(table)
    for i in range(FOULS):
        if extrema[i] != 0:
            normalized[:, i] = table[:, i] / extrema[i]
    for i in (FOULS, DEFENSE):
        if extrema[i] != 0:
            normalized[:, i] = 1.0 - table[:, i] / extrema[i]
        else:
            normalized[:, i] = 1.0

    profiles = {
        team: RobotProfile(
            team_id=team,
            match_count=raw[team].match_count,
            raw_means=table[k].copy(),
            normalized=normalized[k].copy(),
        )
        for k, team in enumerate(teams)
    }
    return ProfileSet(year=year, profiles=profiles, extrema=extrema)


def build_profiles(datasets, schema: YearSchema) -> ProfileSet:
    """Aggregate then normalize in one step (one event or a whole season)."""
    return normalize_profiles(aggregate_robot_profiles(datasets, schema), schema.year)


def mean_effectiveness(members) -> np.ndarray:
    """Component-wise mean of the members' normalized vectors."""
    if not members:
        raise ValueError("no members")
    return np.mean([m.normalized for m in members], axis=0)


def alliance_effectiveness(members) -> np.ndarray:
    """Effectiveness vector of a full 3-robot alliance."""
    members = list(members)
    if len(members) != 3:
        raise ValueError(f"an alliance has exactly 3 members, got {len(members)}")
    if len({m.team_id for m in members}) != 3:
        raise DuplicateMemberError([m.team_id for m in members])
    return mean_effectiveness(members)


def average_alliance(profiles: ProfileSet) -> np.ndarray:
    """Component-wise mean normalized vector over every profile in scope."""
    return np.mean([p.normalized for p in profiles.profiles.values()], axis=0)


def save_profiles(profiles: ProfileSet, path) -> None:
    doc = {
        "format_version": PROFILES_FORMAT_VERSION,
        "year": profiles.year,
        "axes": list(AXES),
        "extrema": {axis: profiles.extrema[i] for i, axis in enumerate(AXES)},
        "profiles": {
            p.team_id: {
                "match_count": p.match_count,
                "raw_means": p.raw_means.tolist(),
                "normalized": p.normalized.tolist(),
            }
            for p in profiles.profiles.values()
        },
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)


def load_profiles(path) -> ProfileSet:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("format_version") != PROFILES_FORMAT_VERSION:
        raise ValueError(f"unsupported profiles format in {path}")
    profiles = {
        team: RobotProfile(
            team_id=team,
            match_count=entry["match_count"],
            raw_means=np.array(entry["raw_means"]),
            normalized=np.array(entry["normalized"]),
        )
        for team, entry in doc["profiles"].items()
    }
    extrema = np.array([doc["extrema"][axis] for axis in AXES])
    return ProfileSet(year=doc["year"], profiles=profiles, extrema=extrema)
