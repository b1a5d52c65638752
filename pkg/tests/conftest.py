import json

import numpy as np
import pytest

from frcdraft.indicators import YearSchema
from frcdraft.profiles import ProfileSet, RobotProfile


@pytest.fixture
def simple_schema():
    """One breakdown field per positive axis, weight 1."""
    return YearSchema(
        year=2019,
        terms={
            "TraditionalLow": (("lowPoints", 1.0),),
            "TraditionalHigh": (("highPoints", 1.0),),
            "Technical": (("techPoints", 1.0),),
            "Autonomous": (("autoPoints", 1.0),),
            "Endgame": (("endPoints", 1.0),),
        },
        foul_field="foulPoints",
    )


def make_match(
    key="2019test_qm1",
    red=("frc1", "frc2", "frc3"),
    blue=("frc4", "frc5", "frc6"),
    red_bd=None,
    blue_bd=None,
    red_score=None,
    blue_score=None,
):
    """Fixture-shaped raw match dict with sane defaults."""
    red_bd = red_bd or {
        "lowPoints": 10, "highPoints": 20, "techPoints": 6,
        "autoPoints": 15, "endPoints": 12, "foulPoints": 3, "totalPoints": 66,
    }
    blue_bd = blue_bd or {
        "lowPoints": 8, "highPoints": 14, "techPoints": 4,
        "autoPoints": 9, "endPoints": 24, "foulPoints": 0, "totalPoints": 59,
    }
    return {
        "key": key,
        "event_key": key.split("_")[0],
        "comp_level": "qm",
        "alliances": {
            "red": {
                "team_keys": list(red),
                "score": red_score if red_score is not None else red_bd.get("totalPoints", 0),
            },
            "blue": {
                "team_keys": list(blue),
                "score": blue_score if blue_score is not None else blue_bd.get("totalPoints", 0),
            },
        },
        "score_breakdown": {"red": red_bd, "blue": blue_bd},
        "winning_alliance": "",
    }


@pytest.fixture
def event_file(tmp_path):
    """Writes raw matches to a JSON file, returns the path."""

    def _write(matches, name="event.json"):
        path = tmp_path / name
        path.write_text(json.dumps(matches), encoding="utf-8")
        return path

    return _write


def profile_set_from_vectors(vectors: dict, year=2019) -> ProfileSet:
    """ProfileSet with given normalized vectors (raw means mirrored)."""
    profiles = {}
    for team, vec in vectors.items():
        vec = np.asarray(vec, dtype=float)
        profiles[team] = RobotProfile(
            team_id=team, match_count=1, raw_means=vec.copy(), normalized=vec
        )
    extrema = np.ones(7)
    extrema[5:] = -1.0
    return ProfileSet(year=year, profiles=profiles, extrema=extrema)


# Initial seeding used by the 2019paphi selection walkthrough: the top eight
# are the captains, 4342/433/293/225 sit 9th-12th so the narrated promotions
# line up, the rest pad the pool.
PAPHI_RANKING = [
    "2539", "5404", "103", "2168", "747", "3974", "1218", "708",
    "4342", "433", "293", "225", "2016", "5407", "486", "1495",
    "1640", "365", "1712", "2607", "316", "341", "714", "730",
]


@pytest.fixture
def paphi_ranking():
    return list(PAPHI_RANKING)
