"""Seven-indicator skill schema and per-alliance scoring.

Every season's raw score-breakdown fields are mapped onto seven generalized
performance indicators kept in one fixed axis order. All downstream consumers
(profiles, prediction features, radar areas, UI axes) rely on this order and
must never reorder it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

# Fixed global axis order. Index 0-4 are positive-valued scoring indicators,
# index 5 (Fouls) and 6 (Defense) are non-positive by convention.
AXES = (
    "TraditionalLow",
    "TraditionalHigh",
    "Technical",
    "Autonomous",
    "Endgame",
    "Fouls",
    "Defense",
)
POSITIVE_AXES = AXES[:5]
FOULS = 5
DEFENSE = 6
NUM_AXES = 7


class SchemaError(Exception):
    """Schema config is malformed or incomplete."""


class MissingFieldError(Exception):
    """A breakdown field referenced by the schema is absent from a match."""

    def __init__(self, field, match_key):
        self.field = field
        self.match_key = match_key
        super().__init__(f"breakdown field {field!r} missing in match {match_key!r}")


@dataclass(frozen=True)
class YearSchema:
    """Mapping from one season's breakdown fields to the five positive axes.

    ``terms`` holds, per positive axis name, a list of (field, weight) pairs.
    ``foul_field`` names the breakdown field holding penalty points awarded to
    an alliance because of the opponent's fouls.
    """

    year: int
    terms: dict[str, tuple[tuple[str, float], ...]]
    foul_field: str

    def referenced_fields(self) -> set[str]:
        fields = {f for pairs in self.terms.values() for f, _ in pairs}
        fields.add(self.foul_field)
        return fields


def load_year_schema(path) -> YearSchema:
    """Load and validate a schema config JSON file.

    Expected shape::

        {"year": 2019,
         "indicators": {"TraditionalLow": [{"field": "cargoPoints", "weight": 0.5}], ...},
         "foul_field": "foulPoints"}
    """
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    return parse_year_schema(raw, source=str(path))


def parse_year_schema(raw: dict, source: str = "<memory>") -> YearSchema:
    if not isinstance(raw, dict):
        raise SchemaError(f"{source}: schema config must be a JSON object")
    year = raw.get("year")
    if not isinstance(year, int):
        raise SchemaError(f"{source}: missing or non-integer 'year'")
    indicators = raw.get("indicators")
    if not isinstance(indicators, dict):
        raise SchemaError(f"{source}: missing 'indicators' mapping")

    unknown = set(indicators) - set(POSITIVE_AXES)
    if unknown:
        raise SchemaError(f"{source}: unknown indicator(s) {sorted(unknown)}")

    terms: dict[str, tuple[tuple[str, float], ...]] = {}
    for axis in POSITIVE_AXES:
        entries = indicators.get(axis)
        if not entries:
            raise SchemaError(f"{source}: indicator {axis!r} has no field terms")
        seen = set()
        pairs = []
        for entry in entries:
            field = entry.get("field") if isinstance(entry, dict) else None
            weight = entry.get("weight", 1.0) if isinstance(entry, dict) else None
            if not isinstance(field, str) or not field:
                raise SchemaError(f"{source}: {axis}: term without a 'field' name")
            if not isinstance(weight, (int, float)) or isinstance(weight, bool) or not math.isfinite(weight):
                raise SchemaError(f"{source}: {axis}: non-finite weight for field {field!r}")
            if field in seen:
                raise SchemaError(f"{source}: {axis}: duplicate field {field!r}")
            seen.add(field)
            pairs.append((field, float(weight)))
        terms[axis] = tuple(pairs)

    foul_field = raw.get("foul_field")
    if not isinstance(foul_field, str) or not foul_field:
        raise SchemaError(f"{source}: missing 'foul_field'")

    return YearSchema(year=year, terms=terms, foul_field=foul_field)


def validate_schema_against_match(schema: YearSchema, match) -> None:
    """Check that every referenced field exists in a match's breakdowns."""
    for field in schema.referenced_fields():
        if field not in match.red_breakdown or field not in match.blue_breakdown:
            raise MissingFieldError(field, match.match_key)


def score_alliance(match, side: str, schema: YearSchema) -> np.ndarray:
    """Compute the raw 7-indicator vector for one side of a match.

    The five positive components are weighted sums of the side's own breakdown
    fields. Fouls is the negative of the penalty points the opponent was
    awarded because of this side's fouls (read from the opponent's breakdown).
    Defense is the negative of the opponent's total score.
    """
    if side == "red":
        own, opp, opp_total = match.red_breakdown, match.blue_breakdown, match.blue_total
    elif side == "blue":
        own, opp, opp_total = match.blue_breakdown, match.red_breakdown, match.red_total
    else:
        raise ValueError(f"side must be 'red' or 'blue', got {side!r}")

    vec = np.zeros(NUM_AXES)
    for i, axis in enumerate(POSITIVE_AXES):
        total = 0.0
        for field, weight in schema.terms[axis]:
            if field not in own:
                raise MissingFieldError(field, match.match_key)
            total += weight * own[field]
        vec[i] = total

    if schema.foul_field not in opp:
        raise MissingFieldError(schema.foul_field, match.match_key)
    vec[FOULS] = -float(opp[schema.foul_field])
    vec[DEFENSE] = -float(opp_total)
    return vec
