import pytest
from hypothesis import given, strategies as st

from trsim.frames import (
    Duplex,
    RadioFrame,
    SlotKind,
    build_fdd_pair,
    build_tdd_frame,
    frame_dump,
    make_numerology,
    slot_census,
    validate_frame,
)


def patterns():
    """Random 10-entry D/U patterns with exactly one superframe marker."""
    return st.tuples(
        st.lists(st.sampled_from("DU"), min_size=9, max_size=9),
        st.integers(0, 9),
    ).map(lambda t: "".join(t[0][: t[1]] + ["S"] + t[0][t[1] :]))


class TestNumerology:
    @pytest.mark.parametrize(
        "mu,spacing,slots",
        [(0, 15.0, 1), (1, 30.0, 2), (2, 60.0, 4), (3, 120.0, 8), (4, 240.0, 16)],
    )
    def test_derived_fields(self, mu, spacing, slots):
        num = make_numerology(mu)
        assert num.subcarrier_spacing_khz == spacing
        assert num.slots_per_subframe == slots

    @pytest.mark.parametrize("mu", [-1, 5, 100])
    def test_out_of_range_rejected(self, mu):
        with pytest.raises(ValueError):
            make_numerology(mu)


class TestFddPair:
    def test_inactive_uplink_frame_carries_switch_state_zero(self):
        _, ul = build_fdd_pair(make_numerology(0), tr_active=False)
        census = slot_census(ul)
        assert census[SlotKind.FREQ_SWITCH0] == 1
        assert census[SlotKind.UPLINK] == 9
        assert census[SlotKind.FREQ_SWITCH1] == 0

    def test_active_uplink_frame_is_silenced(self):
        _, ul = build_fdd_pair(make_numerology(1), tr_active=True)
        census = slot_census(ul)
        assert census[SlotKind.FREQ_SWITCH1] == 1
        assert census[SlotKind.GUARD] == 19
        assert census[SlotKind.UPLINK] == 0

    def test_downlink_frame_identical_under_both_flags(self):
        dl_off, _ = build_fdd_pair(make_numerology(2), tr_active=False)
        dl_on, _ = build_fdd_pair(make_numerology(2), tr_active=True)
        assert dl_off.subframes == dl_on.subframes
        assert slot_census(dl_off)[SlotKind.DOWNLINK] == 40

    def test_switch_subframe_position_is_configurable(self):
        _, ul = build_fdd_pair(make_numerology(0), tr_active=False, switch_subframe=4)
        assert ul.subframes[4][0] is SlotKind.FREQ_SWITCH0
        assert all(sf[0] is SlotKind.UPLINK for i, sf in enumerate(ul.subframes) if i != 4)

    def test_bad_switch_subframe_rejected(self):
        with pytest.raises(ValueError):
            build_fdd_pair(make_numerology(0), tr_active=False, switch_subframe=10)


class TestTddFrame:
    PATTERN = "DSUUUDUUUU"

    def test_active_frame_holds_and_silences_uplink(self):
        frame = build_tdd_frame(make_numerology(0), self.PATTERN, tr_active=True)
        census = slot_census(frame)
        assert census[SlotKind.UPLINK] == 0
        assert census[SlotKind.HOLD] == 1
        assert census[SlotKind.RELEASE] == 0

    def test_inactive_frame_keeps_pattern_and_releases(self):
        frame = build_tdd_frame(make_numerology(1), self.PATTERN, tr_active=False)
        census = slot_census(frame)
        assert census[SlotKind.UPLINK] == self.PATTERN.count("U") * 2
        assert census[SlotKind.RELEASE] == 1
        assert census[SlotKind.HOLD] == 0

    def test_all_downlink_pattern_differs_only_in_toggle_slot(self):
        pattern = "DSDDDDDDDD"
        on = build_tdd_frame(make_numerology(1), pattern, tr_active=True)
        off = build_tdd_frame(make_numerology(1), pattern, tr_active=False)
        flat_on = [s for sf in on.subframes for s in sf]
        flat_off = [s for sf in off.subframes for s in sf]
        diffs = [
            (i, a, b) for i, (a, b) in enumerate(zip(flat_on, flat_off)) if a is not b
        ]
        assert len(diffs) == 1
        assert diffs[0][1] is SlotKind.HOLD and diffs[0][2] is SlotKind.RELEASE

    @pytest.mark.parametrize(
        "pattern", ["DSUUUDUUU", "DDUUUDUUUU", "DSUUUSUUUU", "DSXUUDUUUU"]
    )
    def test_bad_patterns_rejected(self, pattern):
        with pytest.raises(ValueError):
            build_tdd_frame(make_numerology(0), pattern, tr_active=False)


class TestValidateFrame:
    def test_constructor_outputs_are_clean(self):
        num = make_numerology(1)
        dl, ul = build_fdd_pair(num, tr_active=True)
        tdd = build_tdd_frame(num, "DSUUUDUUUU", tr_active=False)
        for frame in (dl, ul, tdd):
            assert validate_frame(frame) == []

    def test_wrong_subframe_count_is_named(self):
        frame = RadioFrame(
            duplex=Duplex.TDD,
            subframes=((SlotKind.DOWNLINK,),) * 9,
            tr_active=False,
        )
        findings = validate_frame(frame)
        assert any("subframe-count" in f for f in findings)

    def test_injected_uplink_in_tr_frame_is_named(self):
        frame = build_tdd_frame(make_numerology(0), "DSUUUDUUUU", tr_active=True)
        patched = RadioFrame(
            duplex=frame.duplex,
            subframes=frame.subframes[:3] + ((SlotKind.UPLINK,),) + frame.subframes[4:],
            tr_active=True,
        )
        findings = validate_frame(patched)
        assert any("tr-suppression" in f for f in findings)

    def test_uplink_in_fdd_downlink_frame_is_named(self):
        frame = RadioFrame(
            duplex=Duplex.FDD_DOWNLINK,
            subframes=((SlotKind.UPLINK,),) + ((SlotKind.DOWNLINK,),) * 9,
            tr_active=False,
        )
        assert any("fdd-downlink-purity" in f for f in validate_frame(frame))

    def test_hold_and_release_together_is_named(self):
        frame = RadioFrame(
            duplex=Duplex.TDD,
            subframes=((SlotKind.HOLD,), (SlotKind.RELEASE,)) + ((SlotKind.DOWNLINK,),) * 8,
            tr_active=False,
        )
        assert any("hold-release-exclusivity" in f for f in validate_frame(frame))

    def test_duplicated_hold_is_named(self):
        frame = RadioFrame(
            duplex=Duplex.TDD,
            subframes=((SlotKind.HOLD,), (SlotKind.HOLD,)) + ((SlotKind.DOWNLINK,),) * 8,
            tr_active=True,
        )
        assert any("hold-release-multiplicity" in f for f in validate_frame(frame))

    def test_hold_outside_tdd_is_named(self):
        frame = RadioFrame(
            duplex=Duplex.FDD_UPLINK,
            subframes=((SlotKind.HOLD,),) + ((SlotKind.UPLINK,),) * 9,
            tr_active=False,
        )
        assert any("hold-release-duplex" in f for f in validate_frame(frame))

    def test_ragged_subframes_are_named(self):
        frame = RadioFrame(
            duplex=Duplex.TDD,
            subframes=((SlotKind.DOWNLINK, SlotKind.DOWNLINK),) + ((SlotKind.DOWNLINK,),) * 9,
            tr_active=False,
        )
        assert any("slot-count" in f for f in validate_frame(frame))


class TestCensusAndDump:
    def test_all_downlink_census(self):
        dl, _ = build_fdd_pair(make_numerology(0), tr_active=False)
        assert dict(slot_census(dl)) == {SlotKind.DOWNLINK: 10}

    @pytest.mark.parametrize("mu", range(5))
    def test_counts_sum_to_frame_size(self, mu):
        num = make_numerology(mu)
        frame = build_tdd_frame(num, "DSUUUDUUUU", tr_active=False)
        assert sum(slot_census(frame).values()) == 10 * num.slots_per_subframe

    def test_dump_layout(self):
        frame = build_tdd_frame(make_numerology(1), "DSUUUDUUUU", tr_active=True)
        lines = frame_dump(frame).splitlines()
        assert len(lines) == 10
        assert all(len(line) == 2 for line in lines)
        assert lines[0] == "DD"
        assert lines[1] == "HG"

    def test_dump_codes_are_single_characters(self):
        assert {kind.value for kind in SlotKind} == {"D", "U", "G", "0", "1", "H", "R"}


@given(
    mu=st.integers(0, 4),
    pattern=patterns(),
    tr_active=st.booleans(),
    switch_subframe=st.integers(0, 9),
)
def test_constructor_invariants(mu, pattern, tr_active, switch_subframe):
    num = make_numerology(mu)
    dl, ul = build_fdd_pair(num, tr_active, switch_subframe=switch_subframe)
    tdd = build_tdd_frame(num, pattern, tr_active)
    for frame in (dl, ul, tdd):
        assert validate_frame(frame) == []
        if tr_active:
            assert slot_census(frame)[SlotKind.UPLINK] == 0

    census = slot_census(tdd)
    assert census[SlotKind.HOLD] + census[SlotKind.RELEASE] == 1

    # downlink slot counts never depend on the TR flag
    other_tdd = build_tdd_frame(num, pattern, not tr_active)
    assert slot_census(tdd)[SlotKind.DOWNLINK] == slot_census(other_tdd)[SlotKind.DOWNLINK]
    other_dl, other_ul = build_fdd_pair(num, not tr_active, switch_subframe=switch_subframe)
    assert slot_census(dl)[SlotKind.DOWNLINK] == slot_census(other_dl)[SlotKind.DOWNLINK]
    assert slot_census(ul)[SlotKind.DOWNLINK] == slot_census(other_ul)[SlotKind.DOWNLINK]
