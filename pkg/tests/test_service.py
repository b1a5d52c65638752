import numpy as np
import pytest
from fastapi.testclient import TestClient

from frcdraft import predictor
from frcdraft.draft import new_draft
from frcdraft.optimizer import radar_area, suggest_partner
from frcdraft.profiles import average_alliance, mean_effectiveness
from frcdraft.service import create_app
from frcdraft.service.store import SessionStore

from conftest import PAPHI_RANKING, profile_set_from_vectors


@pytest.fixture()
def profiles():
    rng = np.random.default_rng(11)
    return profile_set_from_vectors({t: rng.uniform(0, 1, 7) for t in PAPHI_RANKING})


@pytest.fixture()
def model(profiles):
    samples, _ = _tiny_samples()
    return predictor.train(
        predictor.ModelConfig(hidden_layers=(8,), max_epochs=40, seed=1), samples
    )


def _tiny_samples(n=80, seed=5):
    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(n):
        red = rng.uniform(0, 1, 7)
        blue = rng.uniform(0, 1, 7)
        label = 1 if red.sum() > blue.sum() else 0
        samples.append(predictor.PredictionSample(tuple(np.r_[red, blue]), label))
    return samples, None


@pytest.fixture()
def client(profiles, model, tmp_path):
    app = create_app(profiles, list(PAPHI_RANKING), model=model, persist_dir=tmp_path)
    return TestClient(app)


def test_rankings_endpoint(client):
    body = client.get("/rankings").json()
    assert body["ranking"] == PAPHI_RANKING
    assert body["captains"] == PAPHI_RANKING[:8]


def test_profile_endpoint(client, profiles):
    body = client.get("/profiles/2539").json()
    assert body["team_id"] == "2539"
    expected = profiles["2539"].normalized
    assert body["normalized"] == pytest.approx(list(expected), abs=1e-12)
    assert body["axes"][0] == "TraditionalLow"
    assert body["radar_area"] == pytest.approx(radar_area(expected), abs=1e-12)
    assert client.get("/profiles/99999").status_code == 404


def test_average_alliance_endpoint(client, profiles):
    body = client.get("/average-alliance").json()
    expected = average_alliance(profiles)
    assert body["vector"] == pytest.approx(list(expected), abs=1e-12)
    assert body["radar_area"] == pytest.approx(radar_area(expected), abs=1e-12)


def test_predict_vector_form_matches_module(client, model):
    red = [0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3]
    blue = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7]
    body = client.post("/predict", json={"red": red, "blue": blue}).json()
    proba, label = predictor.predict(model, np.array(red), np.array(blue))
    assert body["probability"] == pytest.approx(proba, abs=1e-12)
    assert body["red_wins"] == bool(label)


def test_predict_team_form_matches_module(client, model, profiles):
    red = ["2539", "225", "5404"]
    blue = ["103", "747", "3974"]
    body = client.post("/predict", json={"red_teams": red, "blue_teams": blue}).json()
    proba, _ = predictor.predict(
        model,
        mean_effectiveness([profiles[t] for t in red]),
        mean_effectiveness([profiles[t] for t in blue]),
    )
    assert body["probability"] == pytest.approx(proba, abs=1e-12)


def test_predict_validation(client):
    # wrong vector length
    r = client.post("/predict", json={"red": [0.5] * 6, "blue": [0.5] * 7})
    assert r.status_code == 422
    # mixing forms on one side
    r = client.post(
        "/predict", json={"red": [0.5] * 7, "red_teams": ["2539", "225", "5404"], "blue": [0.5] * 7}
    )
    assert r.status_code == 422
    # unknown team resolves to 404
    r = client.post(
        "/predict",
        json={"red_teams": ["2539", "225", "99999"], "blue_teams": ["103", "747", "3974"]},
    )
    assert r.status_code == 404


def test_predict_without_model_is_503(profiles, tmp_path):
    app = create_app(profiles, list(PAPHI_RANKING), model=None, persist_dir=tmp_path)
    c = TestClient(app)
    r = c.post("/predict", json={"red": [0.5] * 7, "blue": [0.5] * 7})
    assert r.status_code == 503


def test_session_lifecycle_mirrors_draft_module(client):
    created = client.post("/sessions", json={"mode": "manual"})
    assert created.status_code == 201
    sid = created.json()["session_id"]
    assert created.json()["revision"] == 0

    # differential replay of the 2019paphi opening against the module
    reference = new_draft(list(PAPHI_RANKING))
    for rev, pick in enumerate(("225", "2168", "747", "4342")):
        reference.apply_pick(pick)
        r = client.post(f"/sessions/{sid}/picks", json={"picked": pick, "revision": rev})
        assert r.status_code == 200
        body = r.json()
        assert body["revision"] == rev + 1
        assert body["state"]["ranking"] == reference.ranking

    state = client.get(f"/sessions/{sid}").json()["state"]
    assert state["current_picker"] == "1218"
    assert state["picks"][1]["picked"] == "2168"
    ref_dict = reference.to_dict()
    assert state["alliances"] == ref_dict["alliances"]
    assert state["pool"] == ref_dict["pool"]
    assert sorted(state["eligible"]) == sorted(reference.eligible_picks())


def test_stale_revision_conflict(client):
    sid = client.post("/sessions", json={"mode": "manual"}).json()["session_id"]
    assert (
        client.post(f"/sessions/{sid}/picks", json={"picked": "225", "revision": 0}).status_code
        == 200
    )
    # replaying the same revision is stale now
    r = client.post(f"/sessions/{sid}/picks", json={"picked": "433", "revision": 0})
    assert r.status_code == 409
    assert "revision" in r.json()["detail"].lower()


def test_ineligible_pick_conflict(client):
    sid = client.post("/sessions", json={"mode": "manual"}).json()["session_id"]
    r = client.post(f"/sessions/{sid}/picks", json={"picked": "2539", "revision": 0})
    assert r.status_code == 409


def test_unknown_session_404(client):
    assert client.get("/sessions/nope").status_code == 404
    assert (
        client.post("/sessions/nope/picks", json={"picked": "225", "revision": 0}).status_code
        == 404
    )
    assert client.get("/sessions/nope/suggestions").status_code == 404


def test_malformed_session_requests_422(client):
    assert client.post("/sessions", json={"mode": "bogus"}).status_code == 422
    assert (
        client.post("/sessions", json={"mode": "manual", "ranking": ["a", "b"]}).status_code == 422
    )
    sid = client.post("/sessions", json={"mode": "manual"}).json()["session_id"]
    r = client.post(f"/sessions/{sid}/picks", json={"revision": 0})
    assert r.status_code == 422


def test_custom_ranking_session(client):
    ranking = [f"frc{i}" for i in range(1, 13)]
    body = client.post("/sessions", json={"mode": "manual", "ranking": ranking}).json()
    assert body["state"]["ranking"] == ranking
    assert body["state"]["current_picker"] == "frc1"


def test_suggestions_match_optimizer(client, profiles, model):
    sid = client.post("/sessions", json={"mode": "manual"}).json()["session_id"]
    body = client.get(f"/sessions/{sid}/suggestions", params={"k": 4}).json()
    assert body["picker"] == "2539"
    assert len(body["cards"]) == 4

    state = new_draft(list(PAPHI_RANKING))
    expected = suggest_partner(
        [profiles["2539"]],
        [profiles[t] for t in state.eligible_picks()],
        top_k=4,
    )
    for card, (team_id, area) in zip(body["cards"], expected):
        assert card["team"] == team_id
        assert card["area"] == pytest.approx(area, abs=1e-12)
        assert card["radar"]["axes"][0] == "TraditionalLow"
        assert len(card["radar"]["current"]) == 7
        assert len(card["radar"]["with_candidate"]) == 7
        assert 0.0 <= card["win_probability"] <= 1.0
    # cards are sorted by shrinking area
    areas = [c["area"] for c in body["cards"]]
    assert areas == sorted(areas, reverse=True)


def test_suggestions_without_model_omit_probability(profiles, tmp_path):
    app = create_app(profiles, list(PAPHI_RANKING), model=None, persist_dir=tmp_path)
    c = TestClient(app)
    sid = c.post("/sessions", json={"mode": "manual"}).json()["session_id"]
    cards = c.get(f"/sessions/{sid}/suggestions").json()["cards"]
    assert len(cards) == 3  # default k
    assert all(card["win_probability"] is None for card in cards)


def test_suggestions_on_complete_draft(client):
    ranking = [f"frc{i}" for i in range(1, 17)]  # 16 teams, exactly consumed
    sid = client.post("/sessions", json={"mode": "manual", "ranking": ranking}).json()[
        "session_id"
    ]
    rng = np.random.default_rng(0)
    rev = 0
    while True:
        state = client.get(f"/sessions/{sid}").json()["state"]
        if state["complete"]:
            break
        pick = str(rng.choice(state["eligible"]))
        client.post(f"/sessions/{sid}/picks", json={"picked": pick, "revision": rev})
        rev += 1
    body = client.get(f"/sessions/{sid}/suggestions").json()
    assert body["cards"] == []
    # further picks conflict
    r = client.post(f"/sessions/{sid}/picks", json={"picked": "frc1", "revision": rev})
    assert r.status_code == 409


def test_persistence_restores_sessions(profiles, model, tmp_path):
    app = create_app(profiles, list(PAPHI_RANKING), model=model, persist_dir=tmp_path)
    c = TestClient(app)
    sid = c.post("/sessions", json={"mode": "manual"}).json()["session_id"]
    for rev, pick in enumerate(("225", "2168", "747")):
        c.post(f"/sessions/{sid}/picks", json={"picked": pick, "revision": rev})
    before = c.get(f"/sessions/{sid}").json()

    # a fresh app over the same directory replays the logs
    app2 = create_app(profiles, list(PAPHI_RANKING), model=model, persist_dir=tmp_path)
    c2 = TestClient(app2)
    after = c2.get(f"/sessions/{sid}").json()
    assert after == before
    assert after["revision"] == 3
    # and the restored session keeps accepting picks
    r = c2.post(f"/sessions/{sid}/picks", json={"picked": "4342", "revision": 3})
    assert r.status_code == 200


def test_store_rejects_tampered_log(tmp_path):
    store = SessionStore(tmp_path)
    session = store.create(list(PAPHI_RANKING), "manual", None)
    session.apply_pick("225", 0)
    log = tmp_path / f"{session.session_id}.jsonl"
    lines = log.read_text().splitlines()
    # claim the pick was made by a different captain than replay produces
    lines[1] = lines[1].replace('"2539"', '"5404"')
    log.write_text("\n".join(lines) + "\n")
    with pytest.raises(ValueError):
        SessionStore(tmp_path)
