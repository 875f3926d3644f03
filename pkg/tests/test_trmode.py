import math

import pytest
from hypothesis import given, strategies as st

from trsim.trmode import (
    Mode,
    ServiceClass,
    SwitchConfig,
    evaluate_switch,
    service_admitted,
    uplink_enabled,
)

CFG = SwitchConfig(rss_threshold_dbm=-90.0, hysteresis_db=3.0)


class TestEvaluateSwitch:
    def test_degrading_below_band_enters_tr(self):
        rss = CFG.rss_threshold_dbm - CFG.hysteresis_db - 1.0
        assert evaluate_switch(rss, CFG, Mode.AM) is Mode.TR

    def test_recovering_above_band_returns_to_am(self):
        rss = CFG.rss_threshold_dbm + CFG.hysteresis_db + 1.0
        assert evaluate_switch(rss, CFG, Mode.TR) is Mode.AM

    @pytest.mark.parametrize("mode", [Mode.AM, Mode.TR])
    def test_exactly_at_threshold_keeps_mode(self, mode):
        assert evaluate_switch(CFG.rss_threshold_dbm, CFG, mode) is mode

    @pytest.mark.parametrize("mode", [Mode.AM, Mode.TR])
    def test_band_edges_keep_mode(self, mode):
        for rss in (
            CFG.rss_threshold_dbm - CFG.hysteresis_db,
            CFG.rss_threshold_dbm + CFG.hysteresis_db,
        ):
            assert evaluate_switch(rss, CFG, mode) is mode

    def test_zero_hysteresis_recovers_bare_threshold_rule(self):
        cfg = SwitchConfig(rss_threshold_dbm=-90.0, hysteresis_db=0.0)
        assert evaluate_switch(-90.001, cfg, Mode.AM) is Mode.TR
        assert evaluate_switch(-89.999, cfg, Mode.TR) is Mode.AM
        assert evaluate_switch(-90.0, cfg, Mode.AM) is Mode.AM
        assert evaluate_switch(-90.0, cfg, Mode.TR) is Mode.TR

    def test_nan_rss_rejected(self):
        with pytest.raises(ValueError):
            evaluate_switch(math.nan, CFG, Mode.AM)

    def test_negative_hysteresis_rejected(self):
        with pytest.raises(ValueError):
            SwitchConfig(rss_threshold_dbm=-90.0, hysteresis_db=-1.0)


class TestGating:
    def test_uplink_enabled_only_in_am(self):
        assert uplink_enabled(Mode.AM) is True
        assert uplink_enabled(Mode.TR) is False

    def test_uplink_disabled_after_subthreshold_sample(self):
        mode = evaluate_switch(CFG.rss_threshold_dbm - 10.0, CFG, Mode.AM)
        assert uplink_enabled(mode) is False

    @pytest.mark.parametrize("svc", list(ServiceClass))
    def test_am_admits_everything(self, svc):
        assert service_admitted(Mode.AM, svc) is True

    def test_tr_admits_low_rate_only(self):
        assert service_admitted(Mode.TR, ServiceClass.VOICE_CALL) is True
        assert service_admitted(Mode.TR, ServiceClass.TEXT_MESSAGE) is True
        assert service_admitted(Mode.TR, ServiceClass.HIGH_BANDWIDTH) is False


@given(
    trace=st.lists(st.floats(-130.0, -50.0, allow_nan=False), min_size=1, max_size=300),
    threshold=st.floats(-110.0, -70.0, allow_nan=False),
    hysteresis=st.floats(0.0, 15.0, allow_nan=False),
)
def test_mode_changes_never_fire_inside_dead_band(trace, threshold, hysteresis):
    cfg = SwitchConfig(rss_threshold_dbm=threshold, hysteresis_db=hysteresis)
    mode = Mode.AM
    for rss in trace:
        new = evaluate_switch(rss, cfg, mode)
        if new is not mode:
            assert rss < threshold - hysteresis or rss > threshold + hysteresis
        mode = new


@given(
    trace=st.lists(st.floats(0.1, 40.0, allow_nan=False), min_size=1, max_size=100),
    threshold=st.floats(-110.0, -70.0, allow_nan=False),
    hysteresis=st.floats(0.0, 10.0, allow_nan=False),
)
def test_trace_above_band_never_leaves_am(trace, threshold, hysteresis):
    cfg = SwitchConfig(rss_threshold_dbm=threshold, hysteresis_db=hysteresis)
    mode = Mode.AM
    for offset in trace:
        mode = evaluate_switch(threshold + hysteresis + offset, cfg, mode)
        assert mode is Mode.AM


@given(
    trace=st.lists(st.floats(0.1, 40.0, allow_nan=False), min_size=1, max_size=100),
    threshold=st.floats(-110.0, -70.0, allow_nan=False),
    hysteresis=st.floats(0.0, 10.0, allow_nan=False),
)
def test_trace_below_band_locks_into_tr_after_first_sample(trace, threshold, hysteresis):
    cfg = SwitchConfig(rss_threshold_dbm=threshold, hysteresis_db=hysteresis)
    mode = Mode.AM
    for offset in trace:
        mode = evaluate_switch(threshold - hysteresis - offset, cfg, mode)
        assert mode is Mode.TR
