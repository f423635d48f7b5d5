"""Pair emission and trigger detection.

Down-conversion pairs are emitted either as a homogeneous Poisson process
(continuous-wave pump) or in Poisson-distributed bunches locked to a pulse
train. Detecting one photon of a pair heralds the other; the trigger
detector adds dark counts that are indistinguishable from real heralds to
everything downstream, and forgets events arriving within its dead time.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field

import numpy as np

PAIR_MEAN_WARN_THRESHOLD = 0.1


class PumpMode(str, enum.Enum):
    CW = "cw"
    PULSED = "pulsed"


@dataclass(frozen=True)
class PumpConfig:
    """Down-conversion pump settings.

    Attributes:
        mode: continuous-wave or pulsed pumping.
        cw_pair_rate: mean pair emissions per second (CW mode).
        pulse_rep_period: spacing of pump pulses in seconds (pulsed mode).
        per_pulse_pair_mean: Poisson mean of pairs per pulse (pulsed mode).
            Should stay well below 1; a warning fires above
            ``PAIR_MEAN_WARN_THRESHOLD`` since double pairs within one
            switching window break the single-photon interpretation.
    """

    mode: PumpMode = PumpMode.CW
    cw_pair_rate: float = 3250.0
    pulse_rep_period: float = 13e-9
    per_pulse_pair_mean: float = 0.01

    def __post_init__(self):
        if self.cw_pair_rate < 0:
            raise ValueError(f"cw_pair_rate must be >= 0, got {self.cw_pair_rate}")
        if self.pulse_rep_period <= 0:
            raise ValueError(
                f"pulse_rep_period must be > 0, got {self.pulse_rep_period}"
            )
        if self.per_pulse_pair_mean < 0:
            raise ValueError(
                f"per_pulse_pair_mean must be >= 0, got {self.per_pulse_pair_mean}"
            )
        if self.per_pulse_pair_mean > PAIR_MEAN_WARN_THRESHOLD:
            warnings.warn(
                f"per_pulse_pair_mean = {self.per_pulse_pair_mean} exceeds "
                f"{PAIR_MEAN_WARN_THRESHOLD}; double-pair pulses are no longer rare",
                stacklevel=2,
            )


@dataclass(frozen=True)
class DetectorConfig:
    """Trigger-detector response model.

    Attributes:
        quantum_efficiency: probability an arriving photon registers.
        dark_count_rate: spurious counts per second, Poissonian.
        output_delay: seconds from photon arrival to the TTL leading edge.
        dead_time: seconds after an accepted event during which further
            events are dropped (non-paralyzable: dropped events do not
            extend the dead window).
    """

    quantum_efficiency: float = 1.0
    dark_count_rate: float = 200.0
    output_delay: float = 18e-9
    dead_time: float = 50e-9

    def __post_init__(self):
        if not 0.0 <= self.quantum_efficiency <= 1.0:
            raise ValueError(
                f"quantum_efficiency must lie in [0, 1], got {self.quantum_efficiency}"
            )
        for name in ("dark_count_rate", "output_delay", "dead_time"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")


@dataclass(frozen=True)
class CouplingConfig:
    """Launch efficiency of the partner photon into the delay fiber."""

    photon_b_launch_prob: float = 200.0 / 3250.0

    def __post_init__(self):
        if not 0.0 <= self.photon_b_launch_prob <= 1.0:
            raise ValueError(
                f"photon_b_launch_prob must lie in [0, 1], got {self.photon_b_launch_prob}"
            )


class HeraldKind(str, enum.Enum):
    TRUE_HERALD = "true_herald"
    DARK_COUNT = "dark_count"


@dataclass(frozen=True)
class HeraldEvent:
    """One trigger-detector output event.

    ``kind`` and ``partner_launched`` are ground-truth bookkeeping: the
    simulated user logic never sees them, because a dark count is
    indistinguishable from a real herald at the electronics.
    """

    detection_time: float
    kind: HeraldKind
    partner_launched: bool = field(default=False)


def emit_pairs(pump: PumpConfig, duration: float, rng) -> np.ndarray:
    """Sample pair-emission times over ``[0, duration)`` seconds.

    CW mode draws a homogeneous Poisson process at ``cw_pair_rate``. Pulsed
    mode places pulse k at time k * pulse_rep_period (k = 0, 1, ...) and
    emits a Poisson(``per_pulse_pair_mean``) number of pairs per pulse, all
    timestamped at the pulse.

    Returns:
        Sorted float array of emission times in seconds.
    """
    if duration <= 0:
        raise ValueError(f"duration must be > 0, got {duration}")
    rng = np.random.default_rng(rng)
    if pump.mode == PumpMode.CW:
        n = rng.poisson(pump.cw_pair_rate * duration)
        return np.sort(rng.uniform(0.0, duration, size=n))
    n_pulses = int(np.ceil(duration / pump.pulse_rep_period))
    # last pulse index k with k * period < duration
    if (n_pulses - 1) * pump.pulse_rep_period >= duration:
        n_pulses -= 1
    counts = rng.poisson(pump.per_pulse_pair_mean, size=n_pulses)
    times = np.repeat(np.arange(n_pulses) * pump.pulse_rep_period, counts)
    return times


def trigger_detect(
    pair_times,
    det: DetectorConfig,
    coupling: CouplingConfig,
    duration: float,
    rng,
) -> list[HeraldEvent]:
    """Turn pair emissions into the trigger detector's output stream.

    Each pair registers with probability ``quantum_efficiency`` and is
    timestamped ``pair_time + output_delay``; dark counts form an
    independent Poisson stream over the same interval. Events falling
    within ``dead_time`` of the previously accepted event are discarded.
    Each surviving true herald carries a Bernoulli(``photon_b_launch_prob``)
    flag recording whether its partner actually made it into the fiber.

    Args:
        pair_times: sorted emission times in seconds.
        duration: observation window in seconds (bounds the dark stream).
        rng: seed or ``numpy.random.Generator``.

    Returns:
        Time-sorted list of :class:`HeraldEvent`.
    """
    pair_times = np.asarray(pair_times, dtype=float)
    if np.any(np.diff(pair_times) < 0):
        raise ValueError("pair_times must be sorted ascending")
    rng = np.random.default_rng(rng)

    detected = rng.random(pair_times.size) < det.quantum_efficiency
    true_times = pair_times[detected] + det.output_delay

    n_dark = rng.poisson(det.dark_count_rate * duration)
    dark_times = np.sort(rng.uniform(0.0, duration, size=n_dark))

    times = np.concatenate([true_times, dark_times])
    is_dark = np.concatenate(
        [np.zeros(true_times.size, dtype=bool), np.ones(n_dark, dtype=bool)]
    )
    order = np.argsort(times, kind="stable")
    times, is_dark = times[order], is_dark[order]

    launched = rng.random(times.size) < coupling.photon_b_launch_prob

    events: list[HeraldEvent] = []
    window_end = -np.inf
    for t, dark, launch in zip(times, is_dark, launched):
        if t < window_end:
            continue
        window_end = t + det.dead_time
        if dark:
            events.append(HeraldEvent(float(t), HeraldKind.DARK_COUNT, False))
        else:
            events.append(HeraldEvent(float(t), HeraldKind.TRUE_HERALD, bool(launch)))
    return events
