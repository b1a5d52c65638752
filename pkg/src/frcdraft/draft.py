"""Snake-draft state machine for FRC alliance selection.

Eight captains pick two partners each over a serpentine order: seats 1..8 in
round one, 8..1 in round two. The live ranking holds every team not yet picked
onto an alliance; the top eight of it ARE the captains, so picking a captain
removes them from the ranking and every team below shifts up one place, which
promotes the next-ranked pool team into seat 8 automatically. Seats, not team
ids, own the turn order, so a promoted team inherits its new seat's turn.
"""

from __future__ import annotations

import copy
import json
from dataclasses import dataclass
from pathlib import Path

from .optimizer import suggest_partner
from .profiles import ProfileSet

NUM_SEATS = 8
PARTNERS_PER_ALLIANCE = 2
TOTAL_PICKS = NUM_SEATS * PARTNERS_PER_ALLIANCE

MODE_MANUAL = "manual"
MODE_OPTIMIZE_ALL = "optimize_all"
MODE_OPTIMIZE_ONE = "optimize_one"


class TooFewTeamsError(Exception):
    pass


class IneligiblePickError(Exception):
    pass


class DraftCompleteError(Exception):
    pass


@dataclass(frozen=True)
class PickEvent:
    """One applied pick, including every captain-row rank shift it caused.

    Promotions are (team_id, old_rank, new_rank) where ranks are 1-based
    positions in the live ranking; the pool team backfilling seat 8 appears
    with old_rank 9.
    """

    pick_number: int
    picking_captain: str
    picked: str
    promotions: tuple[tuple[str, int, int], ...]

    def to_dict(self) -> dict:
        return {
            "pick_number": self.pick_number,
            "picking_captain": self.picking_captain,
            "picked": self.picked,
            "promotions": [list(p) for p in self.promotions],
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "PickEvent":
        return cls(
            pick_number=raw["pick_number"],
            picking_captain=raw["picking_captain"],
            picked=raw["picked"],
            promotions=tuple((t, o, n) for t, o, n in raw["promotions"]),
        )


def seat_for_pick(pick_index: int) -> int:
    """Seat (1-based) holding the turn for the given 0-based pick index."""
    round_num, offset = divmod(pick_index, NUM_SEATS)
    return offset + 1 if round_num % 2 == 0 else NUM_SEATS - offset


class DraftState:
    """Mutable draft, advanced one pick at a time via ``apply_pick``."""

    def __init__(self, ranking, mode: str = MODE_MANUAL, our_team: str | None = None):
        ranking = [str(t) for t in ranking]
        if len(set(ranking)) != len(ranking):
            raise ValueError("ranking contains duplicate team ids")
        if len(ranking) <= NUM_SEATS:
            raise TooFewTeamsError(
                f"need more than {NUM_SEATS} teams to promote into seat 8, got {len(ranking)}"
            )
        self.original_ranking: tuple[str, ...] = tuple(ranking)
        self.ranking: list[str] = list(ranking)
        self.partners: dict[str, list[str]] = {t: [] for t in ranking[:NUM_SEATS]}
        self.picks_made = 0
        self.mode = mode
        self.our_team = our_team

    # --- views -----------------------------------------------------------

    def captains(self) -> list[str]:
        return self.ranking[:NUM_SEATS]

    def pool(self) -> list[str]:
        return self.ranking[NUM_SEATS:]

    def seat_of(self, team_id: str) -> int | None:
        captains = self.captains()
        return captains.index(team_id) + 1 if team_id in captains else None

    def alliances(self) -> list[dict]:
        return [
            {"seat": i + 1, "captain": captain, "partners": list(self.partners[captain])}
            for i, captain in enumerate(self.captains())
        ]

    def is_complete(self) -> bool:
        if self.picks_made >= TOTAL_PICKS:
            return True
        return not self.eligible_picks()

    def current_picker(self) -> str:
        if self.is_complete():
            raise DraftCompleteError("draft is complete")
        return self.ranking[seat_for_pick(self.picks_made) - 1]

    def eligible_picks(self) -> list[str]:
        """Teams the current seat may pick, in live ranking order.

        Pool teams are always eligible; a captain is eligible only while
        seated strictly below the picker and still without partners.
        """
        if self.picks_made >= TOTAL_PICKS:
            return []
        picker_seat = seat_for_pick(self.picks_made)
        eligible = [
            captain
            for captain in self.captains()[picker_seat:]
            if not self.partners[captain]
        ]
        eligible.extend(self.pool())
        return eligible

    # --- mutation --------------------------------------------------------

    def apply_pick(self, picked: str) -> PickEvent:
        picked = str(picked)
        if self.is_complete():
            raise DraftCompleteError("draft is complete")
        picker = self.current_picker()
        picker_seat = self.seat_of(picker)

        if picked == picker:
            raise IneligiblePickError(f"{picked} cannot pick itself")
        picked_seat = self.seat_of(picked)
        if picked_seat is not None:
            if picked_seat <= picker_seat:
                raise IneligiblePickError(
                    f"{picked} is seated at {picked_seat}, not below the picker at {picker_seat}"
                )
            if self.partners[picked]:
                raise IneligiblePickError(f"captain {picked} already has an alliance")
        elif picked not in self.ranking:
            for captain, members in self.partners.items():
                if picked in members:
                    raise IneligiblePickError(
                        f"{picked} is already on {captain}'s alliance"
                    )
            raise IneligiblePickError(f"{picked} is not in this draft")

        old_rank = {team: i + 1 for i, team in enumerate(self.ranking)}
        self.ranking.remove(picked)
        if picked_seat is not None:
            del self.partners[picked]
            new_captain = self.captains()[-1]
            if new_captain not in self.partners:
                self.partners[new_captain] = []
        self.partners[picker].append(picked)
        self.picks_made += 1

        promotions = tuple(
            (team, old_rank[team], seat)
            for seat, team in enumerate(self.captains(), start=1)
            if old_rank[team] != seat
        )
        return PickEvent(
            pick_number=self.picks_made,
            picking_captain=picker,
            picked=picked,
            promotions=promotions,
        )

    # --- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "original_ranking": list(self.original_ranking),
            "ranking": list(self.ranking),
            "alliances": copy.deepcopy(self.alliances()),
            "pool": self.pool(),
            "picks_made": self.picks_made,
            "complete": self.is_complete(),
            "mode": self.mode,
            "our_team": self.our_team,
        }


def new_draft(ranking, mode: str = MODE_MANUAL, our_team: str | None = None) -> DraftState:
    return DraftState(ranking, mode=mode, our_team=our_team)


def suggestions_for_current_picker(
    state: DraftState, profiles: ProfileSet, top_k: int = 3
) -> list[tuple[str, float]]:
    """Rank the current picker's eligible candidates by resulting radar area."""
    picker = state.current_picker()
    members = [profiles[picker]] + [profiles[t] for t in state.partners[picker]]
    pool = [profiles[t] for t in state.eligible_picks()]
    return suggest_partner(members, pool, top_k=top_k)


def run_optimize_all(state: DraftState, profiles: ProfileSet) -> list[PickEvent]:
    """Auto-draft every seat: each turn takes the top area-maximizing pick."""
    log = []
    while not state.is_complete():
        best_team, _ = suggestions_for_current_picker(state, profiles, top_k=1)[0]
        log.append(state.apply_pick(best_team))
    return log


class OptimizeOneSession:
    """Interactive contract for representing a single alliance captain.

    External captains' picks are entered as they happen via ``enter_pick``;
    when the represented captain is up, ``suggestions`` ranks the candidates
    and the user's actual choice (suggested or not) is entered the same way.
    The session never picks on anyone's behalf.
    """

    def __init__(self, state: DraftState, our_team: str, profiles: ProfileSet):
        our_team = str(our_team)
        if our_team not in state.captains():
            raise ValueError(f"{our_team} is not an alliance captain")
        state.mode = MODE_OPTIMIZE_ONE
        state.our_team = our_team
        self.state = state
        self.our_team = our_team
        self.profiles = profiles

    def our_turn(self) -> bool:
        return not self.state.is_complete() and self.state.current_picker() == self.our_team

    def suggestions(self, top_k: int = 3) -> list[tuple[str, float]]:
        if not self.our_turn():
            raise IneligiblePickError(f"it is not {self.our_team}'s turn")
        return suggestions_for_current_picker(self.state, self.profiles, top_k=top_k)

    def enter_pick(self, picked: str) -> PickEvent:
        return self.state.apply_pick(picked)


# --- pick log ------------------------------------------------------------


def write_pick_log(events, path) -> None:
    """Append-only JSON-lines pick log, one event per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for event in events:
            fh.write(json.dumps(event.to_dict()) + "\n")


def read_pick_log(path) -> list[PickEvent]:
    events = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                events.append(PickEvent.from_dict(json.loads(line)))
    return events


def replay_pick_log(ranking, events) -> DraftState:
    """Rebuild a draft by replaying a recorded pick log from scratch."""
    state = DraftState(ranking)
    for event in events:
        replayed = state.apply_pick(event.picked)
        if replayed != event:
            raise ValueError(
                f"pick log diverged at pick {event.pick_number}: "
                f"recorded {event}, replayed {replayed}"
            )
    return state
