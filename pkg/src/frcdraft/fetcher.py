"""Thin client for pulling an event's match list from The Blue Alliance.

Network access is optional everywhere else in the package; this module is
the only piece that talks to the outside world and is deliberately minimal.
Set TBA_AUTH_KEY (https://www.thebluealliance.com/account) before use.
"""

from __future__ import annotations

import os

import requests

BASE_URL = "https://www.thebluealliance.com/api/v3"


class FetchError(Exception):
    pass


def fetch_event_matches(event_key: str, auth_key: str | None = None, base_url: str = BASE_URL) -> list[dict]:
    """Return the raw match list for one event key, e.g. '2019paphi'."""
    key = auth_key or os.environ.get("TBA_AUTH_KEY")
    if not key:
        raise FetchError("no auth key: pass auth_key or set TBA_AUTH_KEY")
    url = f"{base_url}/event/{event_key}/matches"
    resp = requests.get(url, headers={"X-TBA-Auth-Key": key}, timeout=30)
    if resp.status_code == 404:
        raise FetchError(f"unknown event {event_key!r}")
    if resp.status_code != 200:
        raise FetchError(f"fetch failed: HTTP {resp.status_code}")
    data = resp.json()
    if not isinstance(data, list):
        raise FetchError("unexpected response shape (wanted a JSON array)")
    # qualification matches only; playoff breakdowns skew the indicators
    return [m for m in data if m.get("comp_level") == "qm"]
