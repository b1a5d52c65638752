"""Synthetic data generators for benchmarks, demos, and end-to-end runs.

Two levels: feature-space samples (effectiveness vectors with a known
ground-truth winner rule, optional label noise) and full fixture events
(raw match JSON shaped like the public data feed, driven by latent per-team
ability vectors so profiles and drafts behave plausibly).
"""

from __future__ import annotations

import numpy as np

from .indicators import AXES, NUM_AXES, YearSchema
from .predictor import PredictionSample
from .profiles import ProfileSet, RobotProfile


def synthetic_samples(n: int, seed: int = 0, noise: float = 0.1) -> list[PredictionSample]:
    """Class-balanced winner-prediction samples with a known oracle.

    Red and blue effectiveness vectors are uniform in [0,1]^7; the clean
    label is 1 iff red's component sum exceeds blue's. Alternating samples
    are swapped to force an exact 50/50 balance, then round(noise*n) labels
    are flipped.
    """
    rng = np.random.default_rng(seed)
    red = rng.uniform(0.0, 1.0, size=(n, NUM_AXES))
    blue = rng.uniform(0.0, 1.0, size=(n, NUM_AXES))

    want_red_win = np.arange(n) % 2 == 0
    red_wins = red.sum(axis=1) > blue.sum(axis=1)
    swap = red_wins != want_red_win
    red[swap], blue[swap] = blue[swap].copy(), red[swap].copy()
    labels = want_red_win.astype(float)

    n_flip = int(round(noise * n))
    flip = rng.choice(n, size=n_flip, replace=False)
    labels[flip] = 1.0 - labels[flip]

    return [
        PredictionSample(features=np.concatenate([red[i], blue[i]]), label=int(labels[i]))
        for i in range(n)
    ]


def random_profile_set(team_ids, seed: int = 0, year: int = 2019) -> ProfileSet:
    """Profiles with uniform-random normalized vectors; raw means mirror the
    normalized values so the set is self-consistent enough for draft/service
    tests that never re-normalize."""
    rng = np.random.default_rng(seed)
    profiles = {}
    for team in team_ids:
        vec = rng.uniform(0.0, 1.0, size=NUM_AXES)
        profiles[str(team)] = RobotProfile(
            team_id=str(team),
            match_count=10,
            raw_means=vec.copy(),
            normalized=vec,
        )
    extrema = np.ones(NUM_AXES)
    extrema[5:] = -1.0
    return ProfileSet(year=year, profiles=profiles, extrema=extrema)


def synthetic_event(
    event_key: str,
    schema: YearSchema,
    n_teams: int = 24,
    rounds: int = 12,
    seed: int = 0,
    team_numbers=None,
) -> list[dict]:
    """Generate fixture-shaped qualification matches for one event.

    Each team gets a latent skill in [0.2, 1] per schema field; an alliance's
    field value is the rounded sum of member skills times a field-specific
    scale, plus noise. Fouls credited to a side scale with the opponents'
    latent foul rate. Returns a list of raw match dicts (JSON-ready).
    """
    if n_teams < 6:
        raise ValueError("need at least 6 teams for a match")
    year = int(str(event_key)[:4])
    rng = np.random.default_rng(seed)

    if team_numbers is None:
        team_numbers = list(range(100, 100 + n_teams))
    teams = [f"frc{t}" for t in team_numbers]
    n_teams = len(teams)

    fields = sorted(f for f in schema.referenced_fields() if f != schema.foul_field)
    skill = {t: {f: rng.uniform(0.2, 1.0) for f in fields} for t in teams}
    foul_rate = {t: rng.uniform(0.0, 0.3) for t in teams}
    scale = {f: rng.uniform(15.0, 40.0) for f in fields}

    matches = []
    match_no = 1
    for _ in range(rounds):
        order = list(rng.permutation(n_teams))
        for g in range(n_teams // 6):
            six = [teams[i] for i in order[g * 6 : g * 6 + 6]]
            red, blue = six[:3], six[3:]

            def breakdown(members, opponents):
                bd = {}
                for f in fields:
                    val = sum(skill[m][f] for m in members) * scale[f] / 3.0
                    val += rng.normal(0.0, scale[f] * 0.08)
                    bd[f] = max(0, int(round(val)))
                fouls = sum(foul_rate[o] for o in opponents) * rng.uniform(0.0, 12.0)
                bd[schema.foul_field] = int(round(fouls))
                bd["totalPoints"] = sum(bd.values())
                return bd

            red_bd = breakdown(red, blue)
            blue_bd = breakdown(blue, red)
            matches.append(
                {
                    "key": f"{event_key}_qm{match_no}",
                    "event_key": event_key,
                    "comp_level": "qm",
                    "alliances": {
                        "red": {"team_keys": red, "score": red_bd["totalPoints"]},
                        "blue": {"team_keys": blue, "score": blue_bd["totalPoints"]},
                    },
                    "score_breakdown": {"red": red_bd, "blue": blue_bd},
                    "winning_alliance": (
                        "red"
                        if red_bd["totalPoints"] > blue_bd["totalPoints"]
                        else "blue"
                        if blue_bd["totalPoints"] > red_bd["totalPoints"]
                        else ""
                    ),
                }
            )
            match_no += 1
    return matches


def demo_schema(year: int = 2019) -> YearSchema:
    """Minimal self-contained schema for synthetic events and tests."""
    terms = {axis: ((f"{axis[:1].lower()}{axis[1:]}Points", 1.0),) for axis in AXES[:5]}
    return YearSchema(year=year, terms=terms, foul_field="foulPoints")
