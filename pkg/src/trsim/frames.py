"""Radio frame construction and validation.

A frame is 10 subframes of 1 ms; each subframe holds `slots_per_subframe`
slots as set by the numerology (15 kHz * 2^mu subcarrier spacing gives
2^mu slots per subframe).

FDD uses a downlink/uplink frame pair. The uplink frame carries a
frequency-switching subframe whose state slot reads 0 (uplink running) or
1 (uplink stopped); while it reads 1 every other uplink subframe is
silenced to guard slots.

TDD uses a single frame built from a 10-entry direction pattern with
exactly one superframe position. The superframe's toggle slot is Hold
(uplink suppressed, no DL->UL switching) or Release (conventional
operation); with Hold active every uplink subframe is silenced.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

SUBFRAMES_PER_FRAME = 10


class SlotKind(Enum):
    # values double as the single-character dump codes
    DOWNLINK = "D"
    UPLINK = "U"
    GUARD = "G"
    FREQ_SWITCH0 = "0"
    FREQ_SWITCH1 = "1"
    HOLD = "H"
    RELEASE = "R"


class Duplex(Enum):
    FDD_DOWNLINK = "fdd-downlink"
    FDD_UPLINK = "fdd-uplink"
    TDD = "tdd"


@dataclass(frozen=True)
class Numerology:
    mu: int
    subcarrier_spacing_khz: float
    slots_per_subframe: int


def make_numerology(mu: int) -> Numerology:
    """Numerology mu in [0, 4]: spacing 15 * 2^mu kHz, 2^mu slots/subframe."""
    if not 0 <= mu <= 4:
        raise ValueError(f"mu must be in [0, 4], got {mu}")
    return Numerology(
        mu=mu,
        subcarrier_spacing_khz=15.0 * 2**mu,
        slots_per_subframe=2**mu,
    )


@dataclass(frozen=True)
class RadioFrame:
    duplex: Duplex
    subframes: tuple[tuple[SlotKind, ...], ...]
    tr_active: bool


def _fill(kind: SlotKind, n_slots: int) -> tuple[SlotKind, ...]:
    return (kind,) * n_slots


def _toggle_subframe(state_slot: SlotKind, n_slots: int) -> tuple[SlotKind, ...]:
    # the state slot occupies the first slot; the rest of the subframe is guard
    return (state_slot,) + _fill(SlotKind.GUARD, n_slots - 1)


def build_fdd_pair(
    num: Numerology,
    tr_active: bool,
    switch_subframe: int = 0,
) -> tuple[RadioFrame, RadioFrame]:
    """Build the FDD downlink/uplink frame pair.

    The downlink frame is all downlink slots regardless of the TR flag.
    The uplink frame holds the frequency-switching subframe at
    `switch_subframe`; its state slot is FREQ_SWITCH1 with TR active (all
    other subframes silenced to guard) and FREQ_SWITCH0 otherwise (other
    subframes carry uplink).
    """
    if not 0 <= switch_subframe < SUBFRAMES_PER_FRAME:
        raise ValueError(
            f"switch_subframe must be in [0, {SUBFRAMES_PER_FRAME - 1}],"
            f" got {switch_subframe}"
        )
    n = num.slots_per_subframe
    dl = RadioFrame(
        duplex=Duplex.FDD_DOWNLINK,
        subframes=tuple(_fill(SlotKind.DOWNLINK, n) for _ in range(SUBFRAMES_PER_FRAME)),
        tr_active=tr_active,
    )
    state = SlotKind.FREQ_SWITCH1 if tr_active else SlotKind.FREQ_SWITCH0
    carried = SlotKind.GUARD if tr_active else SlotKind.UPLINK
    ul_subframes = tuple(
        _toggle_subframe(state, n) if i == switch_subframe else _fill(carried, n)
        for i in range(SUBFRAMES_PER_FRAME)
    )
    ul = RadioFrame(duplex=Duplex.FDD_UPLINK, subframes=ul_subframes, tr_active=tr_active)
    return dl, ul


def parse_pattern(dl_ul_pattern: Sequence[str] | str) -> tuple[str, ...]:
    entries = tuple(dl_ul_pattern)
    if len(entries) != SUBFRAMES_PER_FRAME:
        raise ValueError(
            f"pattern must have {SUBFRAMES_PER_FRAME} entries, got {len(entries)}"
        )
    bad = sorted({e for e in entries if e not in ("D", "U", "S")})
    if bad:
        raise ValueError(f"pattern entries must be 'D', 'U' or 'S', got {bad}")
    n_super = entries.count("S")
    if n_super != 1:
        raise ValueError(
            f"pattern must mark exactly one superframe position 'S', got {n_super}"
        )
    return entries


def build_tdd_frame(
    num: Numerology,
    dl_ul_pattern: Sequence[str] | str,
    tr_active: bool,
) -> RadioFrame:
    """Build a TDD frame from a 10-entry 'D'/'U'/'S' pattern.

    With TR active the superframe's toggle slot is Hold and every 'U'
    subframe is silenced to guard; otherwise the toggle slot is Release
    and the pattern is emitted as given.
    """
    entries = parse_pattern(dl_ul_pattern)
    n = num.slots_per_subframe
    toggle = SlotKind.HOLD if tr_active else SlotKind.RELEASE
    subframes = []
    for entry in entries:
        if entry == "D":
            subframes.append(_fill(SlotKind.DOWNLINK, n))
        elif entry == "U":
            subframes.append(_fill(SlotKind.GUARD if tr_active else SlotKind.UPLINK, n))
        else:
            subframes.append(_toggle_subframe(toggle, n))
    return RadioFrame(duplex=Duplex.TDD, subframes=tuple(subframes), tr_active=tr_active)


def validate_frame(frame: RadioFrame) -> list[str]:
    """Check every frame invariant; return one finding per violation.

    Returns an empty list for valid frames. Never raises: callers feed it
    arbitrary hand-built frames.
    """
    findings: list[str] = []
    n_sub = len(frame.subframes)
    if n_sub != SUBFRAMES_PER_FRAME:
        findings.append(
            f"subframe-count: expected {SUBFRAMES_PER_FRAME} subframes, found {n_sub}"
        )
    slot_counts = {len(sf) for sf in frame.subframes}
    if len(slot_counts) > 1 or (slot_counts and min(slot_counts) < 1):
        findings.append(
            f"slot-count: subframes must hold one uniform positive slot count,"
            f" found {sorted(slot_counts)}"
        )

    hold_at: list[tuple[int, int]] = []
    release_at: list[tuple[int, int]] = []
    for i, sf in enumerate(frame.subframes):
        for j, slot in enumerate(sf):
            if slot is SlotKind.UPLINK:
                if frame.duplex is Duplex.FDD_DOWNLINK:
                    findings.append(
                        f"fdd-downlink-purity: Uplink slot at subframe {i} slot {j}"
                    )
                if frame.tr_active:
                    findings.append(
                        f"tr-suppression: Uplink slot at subframe {i} slot {j}"
                        f" while TR is active"
                    )
            elif slot is SlotKind.DOWNLINK and frame.duplex is Duplex.FDD_UPLINK:
                findings.append(
                    f"fdd-uplink-purity: Downlink slot at subframe {i} slot {j}"
                )
            elif slot is SlotKind.HOLD:
                hold_at.append((i, j))
            elif slot is SlotKind.RELEASE:
                release_at.append((i, j))

    if hold_at and release_at:
        findings.append(
            "hold-release-exclusivity: frame contains both Hold and Release"
        )
    for name, where in (("Hold", hold_at), ("Release", release_at)):
        if len(where) > 1:
            findings.append(
                f"hold-release-multiplicity: {name} occupies {len(where)} slots"
                f" at {where}, expected exactly one"
            )
        if where and frame.duplex is not Duplex.TDD:
            findings.append(
                f"hold-release-duplex: {name} slot at subframe {where[0][0]}"
                f" slot {where[0][1]} outside a TDD frame"
            )
    return findings


def slot_census(frame: RadioFrame) -> Counter[SlotKind]:
    """Exact multiset of slot kinds; counts sum to 10 * slots_per_subframe."""
    return Counter(slot for sf in frame.subframes for slot in sf)


def frame_dump(frame: RadioFrame) -> str:
    """One line per subframe, slots as single-character codes."""
    return "\n".join("".join(slot.value for slot in sf) for sf in frame.subframes)
