"""Four-state RRC machine with an energy-efficient half-duplex state.

Alongside Idle/Connected/Inactive there is an EnergyEfficient state for
devices in TR mode: the connection is kept for downlink transfer only and
no uplink grant is issued. Pending uplink data moves the device back to
Connected in a single step. Unlisted (state, event) pairs self-loop so the
transition function is total and the machine stays model-checkable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum


class RrcState(Enum):
    IDLE = "Idle"
    CONNECTED = "Connected"
    INACTIVE = "Inactive"
    ENERGY_EFFICIENT = "EnergyEfficient"


class RrcEvent(Enum):
    CONNECTION_REQUEST = "ConnectionRequest"
    CONNECTION_RELEASE = "ConnectionRelease"
    SUSPEND_TO_INACTIVE = "SuspendToInactive"
    RESUME_FROM_INACTIVE = "ResumeFromInactive"
    TR_MODE_ENTER = "TrModeEnter"
    TR_MODE_EXIT = "TrModeExit"
    UPLINK_DATA_PENDING = "UplinkDataPending"
    DOWNLINK_DATA_ARRIVAL = "DownlinkDataArrival"
    INACTIVITY_TIMEOUT = "InactivityTimeout"


_TRANSITIONS: dict[tuple[RrcState, RrcEvent], RrcState] = {
    (RrcState.IDLE, RrcEvent.CONNECTION_REQUEST): RrcState.CONNECTED,
    (RrcState.CONNECTED, RrcEvent.CONNECTION_RELEASE): RrcState.IDLE,
    (RrcState.CONNECTED, RrcEvent.SUSPEND_TO_INACTIVE): RrcState.INACTIVE,
    (RrcState.INACTIVE, RrcEvent.RESUME_FROM_INACTIVE): RrcState.CONNECTED,
    (RrcState.INACTIVE, RrcEvent.INACTIVITY_TIMEOUT): RrcState.IDLE,
    (RrcState.CONNECTED, RrcEvent.TR_MODE_ENTER): RrcState.ENERGY_EFFICIENT,
    (RrcState.ENERGY_EFFICIENT, RrcEvent.TR_MODE_EXIT): RrcState.CONNECTED,
    (RrcState.ENERGY_EFFICIENT, RrcEvent.UPLINK_DATA_PENDING): RrcState.CONNECTED,
    (RrcState.ENERGY_EFFICIENT, RrcEvent.DOWNLINK_DATA_ARRIVAL): RrcState.ENERGY_EFFICIENT,
}


def transition(state: RrcState, event: RrcEvent) -> RrcState:
    """Total transition function; unlisted pairs keep the current state."""
    return _TRANSITIONS.get((state, event), state)


def uplink_grant_allowed(state: RrcState) -> bool:
    """Uplink grants are issued in Connected only."""
    return state is RrcState.CONNECTED


@dataclass(frozen=True)
class ReachabilityReport:
    """Exhaustive view of the machine for model checking and golden output."""

    entries: tuple[tuple[RrcState, RrcEvent, RrcState], ...]
    shortest_path_from_idle: dict[RrcState, tuple[RrcEvent, ...]]
    grant_states: tuple[RrcState, ...]
    ee_grant_blocked: bool
    ee_events_to_grant: tuple[RrcEvent, ...]

    def format_report(self) -> str:
        lines = [f"transition-table entries={len(self.entries)}"]
        for state, event, nxt in self.entries:
            suffix = " self" if nxt is state else ""
            lines.append(f"{state.value} {event.value} -> {nxt.value}{suffix}")
        for state in RrcState:
            path = self.shortest_path_from_idle.get(state)
            if path is None:
                lines.append(f"reachable-from-Idle {state.value} unreachable")
            else:
                lines.append(
                    f"reachable-from-Idle {state.value}"
                    f" via={','.join(e.value for e in path)}"
                )
        lines.append(
            "grant-allowed " + ",".join(s.value for s in self.grant_states)
        )
        lines.append(f"ee-grant-blocked {'true' if self.ee_grant_blocked else 'false'}")
        lines.append(
            "ee-to-grant-events " + ",".join(e.value for e in self.ee_events_to_grant)
        )
        return "\n".join(lines)


def check_reachability() -> ReachabilityReport:
    """Enumerate all (state, event) pairs and the reachability structure.

    Confirms every state is reachable from Idle and that no uplink grant is
    available from EnergyEfficient without first reaching Connected.
    """
    entries = tuple(
        (state, event, transition(state, event))
        for state in RrcState
        for event in RrcEvent
    )

    # BFS for shortest event paths from Idle
    paths: dict[RrcState, tuple[RrcEvent, ...]] = {RrcState.IDLE: ()}
    queue = deque([RrcState.IDLE])
    while queue:
        state = queue.popleft()
        for event in RrcEvent:
            nxt = transition(state, event)
            if nxt not in paths:
                paths[nxt] = paths[state] + (event,)
                queue.append(nxt)

    grant_states = tuple(s for s in RrcState if uplink_grant_allowed(s))
    ee_grant_blocked = not uplink_grant_allowed(RrcState.ENERGY_EFFICIENT)
    ee_events_to_grant = tuple(
        event
        for event in RrcEvent
        if uplink_grant_allowed(transition(RrcState.ENERGY_EFFICIENT, event))
    )
    return ReachabilityReport(
        entries=entries,
        shortest_path_from_idle=paths,
        grant_states=grant_states,
        ee_grant_blocked=ee_grant_blocked,
        ee_events_to_grant=ee_events_to_grant,
    )
