"""Radar-polygon area scoring and exhaustive partner selection.

An alliance's effectiveness vector is drawn on a 7-axis radar chart with the
fixed axis order from the indicators module; the alliance's score is the area
of that polygon. The k-th vertex sits at distance v[k] along the k-th of 7
equally spaced axes, so the polygon is a fan of 7 triangles and

    area = 1/2 * sin(2*pi/7) * sum_k v[k] * v[(k+1) mod 7]

Partner suggestion scans every candidate in the remaining pool and ranks the
hypothetical alliances by resulting area.
"""

from __future__ import annotations

import math

import numpy as np

from .indicators import NUM_AXES
from .profiles import alliance_effectiveness, mean_effectiveness

SECTOR_SIN = math.sin(2.0 * math.pi / NUM_AXES)
MAX_AREA = 0.5 * SECTOR_SIN * NUM_AXES  # all-ones polygon

# tolerance for float drift from upstream averaging
_EDGE = 1e-9


class DomainError(Exception):
    """A radar vector component is outside [0, 1]."""


class EmptyPoolError(Exception):
    pass


def radar_area(v) -> float:
    """Area of the radar polygon of a normalized 7-vector."""
    v = np.asarray(v, dtype=float)
    if v.shape != (NUM_AXES,):
        raise DomainError(f"expected {NUM_AXES} components, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise DomainError("non-finite component")
    if v.min() < -_EDGE or v.max() > 1.0 + _EDGE:
        raise DomainError(f"components outside [0,1]: min={v.min()}, max={v.max()}")
    v = np.clip(v, 0.0, 1.0)
    return float(0.5 * SECTOR_SIN * np.dot(v, np.roll(v, -1)))


def suggest_partner(current_members, pool, top_k: int = 3) -> list[tuple[str, float]]:
    """Rank every pool candidate by the area of the alliance it would form.

    ``current_members`` holds the 1 or 2 robots already on the alliance; the
    hypothetical effectiveness is the mean over the present members plus the
    candidate. Ties break by ascending team id. Returns at most ``top_k``
    (team_id, resulting_area) pairs, best first.
    """
    members = list(current_members)
    pool = list(pool)
    if not 1 <= len(members) <= 2:
        raise ValueError(f"expected 1 or 2 current members, got {len(members)}")
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    if not pool:
        raise EmptyPoolError("no candidates left to score")
    member_ids = {m.team_id for m in members}
    overlap = member_ids & {c.team_id for c in pool}
    if overlap:
        raise ValueError(f"pool shares ids with current members: {sorted(overlap)}")

    scored = []
    for candidate in pool:
        area = radar_area(mean_effectiveness(members + [candidate]))
        scored.append((candidate.team_id, area))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:top_k]


def rank_alliances(alliances) -> list[tuple[tuple[str, ...], float]]:
    """Order complete 3-robot alliances by descending radar area.

    Returns (sorted member ids, area) pairs; equal areas order
    lexicographically by member ids.
    """
    scored = []
    for members in alliances:
        area = radar_area(alliance_effectiveness(members))
        ids = tuple(sorted(m.team_id for m in members))
        scored.append((ids, area))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored
