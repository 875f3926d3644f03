"""trsim: deterministic single-cell link simulator with a half-duplex
low-radiation device mode (TR), NR-style frame structures, an extended
RRC state machine, and EM exposure / outage / complexity metrics."""

__version__ = "0.1.0"

from .channel import (
    ChannelRealization,
    draw_fading_gain,
    free_space_path_loss,
    outage_analytic,
    outage_monte_carlo,
    sinr,
)
from .exposure import (
    ExposureReport,
    ExposureStandard,
    FrequencyBand,
    UnmappedBandError,
    complexity_metric,
    e_field_from_density,
    exposure_ratio,
    network_exposure,
    power_density,
)
from .frames import (
    Duplex,
    Numerology,
    RadioFrame,
    SlotKind,
    build_fdd_pair,
    build_tdd_frame,
    frame_dump,
    make_numerology,
    slot_census,
    validate_frame,
)
from .rrc import (
    ReachabilityReport,
    RrcEvent,
    RrcState,
    check_reachability,
    transition,
    uplink_grant_allowed,
)
from .sim import (
    ConfigError,
    DeviceSpec,
    GenerationScenario,
    ScenarioConfig,
    SimResult,
    UserEquipment,
    generation_power_density_series,
    outage_curve,
    run_scenario,
)
from .trmode import Mode, ServiceClass, SwitchConfig, evaluate_switch, service_admitted, uplink_enabled

__all__ = [
    "ChannelRealization",
    "ConfigError",
    "DeviceSpec",
    "Duplex",
    "ExposureReport",
    "ExposureStandard",
    "FrequencyBand",
    "GenerationScenario",
    "Mode",
    "Numerology",
    "RadioFrame",
    "ReachabilityReport",
    "RrcEvent",
    "RrcState",
    "ScenarioConfig",
    "ServiceClass",
    "SimResult",
    "SlotKind",
    "SwitchConfig",
    "UnmappedBandError",
    "UserEquipment",
    "build_fdd_pair",
    "build_tdd_frame",
    "check_reachability",
    "complexity_metric",
    "draw_fading_gain",
    "e_field_from_density",
    "evaluate_switch",
    "exposure_ratio",
    "frame_dump",
    "free_space_path_loss",
    "generation_power_density_series",
    "make_numerology",
    "network_exposure",
    "outage_analytic",
    "outage_curve",
    "outage_monte_carlo",
    "power_density",
    "run_scenario",
    "service_admitted",
    "sinr",
    "slot_census",
    "transition",
    "uplink_enabled",
    "uplink_grant_allowed",
    "validate_frame",
]
