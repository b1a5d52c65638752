"""Parse TBA-shaped match fixture JSON into validated match records.

Fixture files follow The Blue Alliance's public match schema (see
docs/fixture-format.md): one JSON object per match, or a JSON array of match
objects per event, or a directory of such files. Per-match validation
failures never abort an event load; they are recorded with a reason instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path


class ValidationError(Exception):
    """A match object is structurally invalid. ``field`` names the offender."""

    def __init__(self, field_name, detail=""):
        self.field = field_name
        msg = field_name if not detail else f"{field_name}: {detail}"
        super().__init__(msg)


RED, BLUE, TIE = "Red", "Blue", "Tie"


@dataclass(frozen=True)
class MatchRecord:
    """One qualification match: identifiers, alliances, scores, and winner."""

    match_key: str
    event_key: str
    year: int
    red_teams: tuple[str, str, str]
    blue_teams: tuple[str, str, str]
    red_breakdown: dict[str, float]
    blue_breakdown: dict[str, float]
    red_total: int
    blue_total: int
    winner: str

    def teams(self) -> tuple[str, ...]:
        return self.red_teams + self.blue_teams

    def to_fixture(self) -> dict:
        """Serialize back to the TBA-shaped fixture form (round-trips)."""
        return {
            "key": self.match_key,
            "event_key": self.event_key,
            "comp_level": "qm",
            "alliances": {
                "red": {"team_keys": list(self.red_teams), "score": self.red_total},
                "blue": {"team_keys": list(self.blue_teams), "score": self.blue_total},
            },
            "score_breakdown": {
                "red": dict(self.red_breakdown),
                "blue": dict(self.blue_breakdown),
            },
            "winning_alliance": self.winner.lower() if self.winner != TIE else "",
        }


@dataclass
class EventDataset:
    """All parseable matches of one event plus the rejects with reasons."""

    event_key: str
    year: int
    matches: list[MatchRecord] = field(default_factory=list)
    skipped: list[tuple[str, str]] = field(default_factory=list)


@dataclass(frozen=True)
class IntegrityReport:
    matches: int
    teams: int
    ties: int
    skipped: int


def _require(raw: dict, key: str, field_name: str):
    value = raw.get(key)
    if value is None:
        raise ValidationError(field_name, "missing")
    return value


def _parse_side(alliances: dict, color: str) -> tuple[tuple[str, ...], int]:
    side = alliances.get(color)
    if not isinstance(side, dict):
        raise ValidationError(f"{color}_teams", "missing alliance")
    teams = side.get("team_keys")
    if not isinstance(teams, list) or not teams:
        raise ValidationError(f"{color}_teams", "missing team list")
    if len(teams) != 3:
        raise ValidationError(f"{color}_teams", f"expected 3 teams, got {len(teams)}")
    teams = tuple(str(t) for t in teams)
    if len(set(teams)) != 3:
        raise ValidationError(f"{color}_teams", "duplicate team ids")
    score = side.get("score")
    if score is None or isinstance(score, bool) or not isinstance(score, (int, float)):
        raise ValidationError(f"{color}_total", "missing score")
    if score < 0:
        # TBA reports -1 for unplayed matches
        raise ValidationError(f"{color}_total", f"negative score {score}")
    return teams, int(score)


def _numeric_breakdown(breakdown: dict) -> dict[str, float]:
    # Keep numeric fields only; TBA breakdowns also carry strings and booleans
    # that no schema term can consume (docs/fixture-format.md).
    return {
        k: float(v)
        for k, v in breakdown.items()
        if isinstance(v, (int, float)) and not isinstance(v, bool)
    }


def parse_match_record(raw: dict) -> MatchRecord:
    """Validate one fixture object and derive the winner from the totals."""
    if not isinstance(raw, dict):
        raise ValidationError("match", "not a JSON object")
    match_key = str(_require(raw, "key", "match_key"))
    event_key = str(_require(raw, "event_key", "event_key"))
    if len(event_key) < 5 or not event_key[:4].isdigit():
        raise ValidationError("event_key", f"cannot derive year from {event_key!r}")
    year = int(event_key[:4])

    alliances = raw.get("alliances")
    if not isinstance(alliances, dict):
        raise ValidationError("alliances", "missing")
    red_teams, red_total = _parse_side(alliances, "red")
    blue_teams, blue_total = _parse_side(alliances, "blue")
    overlap = set(red_teams) & set(blue_teams)
    if overlap:
        raise ValidationError("alliances", f"teams on both sides: {sorted(overlap)}")

    breakdown = raw.get("score_breakdown")
    if not isinstance(breakdown, dict):
        raise ValidationError("score_breakdown", "missing")
    red_bd = breakdown.get("red")
    blue_bd = breakdown.get("blue")
    if not isinstance(red_bd, dict):
        raise ValidationError("red_breakdown", "missing")
    if not isinstance(blue_bd, dict):
        raise ValidationError("blue_breakdown", "missing")

    if red_total > blue_total:
        winner = RED
    elif blue_total > red_total:
        winner = BLUE
    else:
        winner = TIE

    return MatchRecord(
        match_key=match_key,
        event_key=event_key,
        year=year,
        red_teams=red_teams,
        blue_teams=blue_teams,
        red_breakdown=_numeric_breakdown(red_bd),
        blue_breakdown=_numeric_breakdown(blue_bd),
        red_total=red_total,
        blue_total=blue_total,
        winner=winner,
    )


def _iter_match_objects(path: Path):
    """Yield (label, raw object) pairs from a fixture file or directory."""
    if path.is_dir():
        for child in sorted(path.glob("*.json")):
            yield from _iter_match_objects(child)
        return
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            yield str(path), exc
            return
    if isinstance(data, list):
        for i, obj in enumerate(data):
            label = obj.get("key", f"{path.name}[{i}]") if isinstance(obj, dict) else f"{path.name}[{i}]"
            yield str(label), obj
    else:
        label = data.get("key", path.name) if isinstance(data, dict) else path.name
        yield str(label), data


def load_event(path) -> EventDataset:
    """Load every parseable match under ``path``; record rejects in skipped.

    Raises OSError only when the path itself is unreadable. Returns an empty
    dataset when no matches are present so the caller can decide to skip the
    event.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(path)

    matches: list[MatchRecord] = []
    skipped: list[tuple[str, str]] = []
    for label, obj in _iter_match_objects(path):
        if isinstance(obj, json.JSONDecodeError):
            skipped.append((label, f"invalid JSON: {obj.msg}"))
            continue
        try:
            matches.append(parse_match_record(obj))
        except ValidationError as exc:
            skipped.append((label, str(exc)))

    if matches:
        event_key, year = matches[0].event_key, matches[0].year
    else:
        event_key, year = path.stem, 0
    matches.sort(key=lambda m: m.match_key)
    return EventDataset(event_key=event_key, year=year, matches=matches, skipped=skipped)


def dataset_integrity_report(ds: EventDataset) -> IntegrityReport:
    """Pure summary counts for an event dataset."""
    teams = {t for m in ds.matches for t in m.teams()}
    ties = sum(1 for m in ds.matches if m.winner == TIE)
    return IntegrityReport(
        matches=len(ds.matches),
        teams=len(teams),
        ties=ties,
        skipped=len(ds.skipped),
    )
