from pathlib import Path

import pytest

from trsim.sim import ScenarioConfig
from trsim.trmode import SwitchConfig

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES_DIR = REPO_ROOT / "src" / "trsim" / "fixtures"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

SCENARIO_TR50 = FIXTURES_DIR / "scenario_tr50.cfg"
ER_TABLE_FIXTURE = FIXTURES_DIR / "er_table_generations.cfg"


def make_config(**overrides) -> ScenarioConfig:
    """Small, fast scenario used across the sim tests."""
    base = dict(
        n_users=4,
        n_tr=1,
        cell_radius_m=300.0,
        bs_tx_power_w=10.0,
        ue_tx_power_w=0.2,
        freq_hz=3.5e9,
        noise_w=4e-15,
        snr_threshold_db=0.0,
        n_slots=20,
        seed=11,
        switch=SwitchConfig(rss_threshold_dbm=-90.0, hysteresis_db=200.0),
    )
    base.update(overrides)
    return ScenarioConfig(**base)


@pytest.fixture
def small_config() -> ScenarioConfig:
    return make_config()
