"""Jones calculus for the stored photon's polarization.

The loop optics act on a single photon's polarization, written as a
two-component complex Jones vector in the (horizontal, vertical) basis.
Angles are measured in radians from the vertical axis, matching the lab
convention of the switch: the polarizing beamsplitter reflects vertical
and transmits horizontal light, so a photon enters and leaves the storage
loop vertically polarized.

Global phase is not tracked as physically meaningful; comparisons use
:func:`states_equal` which is phase-insensitive. Every operation
re-normalizes its output so repeated application cannot drift.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

NORM_TOL = 1e-6


@dataclass(frozen=True)
class PolarizationState:
    """Pure polarization state of one photon.

    Attributes:
        h: complex amplitude on the horizontal axis.
        v: complex amplitude on the vertical axis.

    The state must be unit norm (|h|^2 + |v|^2 = 1); construction rejects
    vectors off the unit sphere by more than ``NORM_TOL``.
    """

    h: complex
    v: complex

    def __post_init__(self):
        if abs(self.norm() - 1.0) > NORM_TOL:
            raise ValueError(
                f"polarization state must be unit norm, got |h|^2+|v|^2 = {self.norm()**2:.6g}"
            )

    def norm(self) -> float:
        return math.sqrt(abs(self.h) ** 2 + abs(self.v) ** 2)

    def normalized(self) -> "PolarizationState":
        n = self.norm()
        return PolarizationState(self.h / n, self.v / n)

    @staticmethod
    def horizontal() -> "PolarizationState":
        return PolarizationState(1.0 + 0j, 0j)

    @staticmethod
    def vertical() -> "PolarizationState":
        return PolarizationState(0j, 1.0 + 0j)

    @staticmethod
    def linear(angle: float) -> "PolarizationState":
        """Linear polarization at ``angle`` radians from vertical."""
        return PolarizationState(complex(math.sin(angle)), complex(math.cos(angle)))


@dataclass(frozen=True)
class WaveplateSetting:
    """Orientation of a half-wave plate.

    Attributes:
        fast_axis_angle: fast-axis angle in radians from vertical, in [0, pi).
    """

    fast_axis_angle: float

    def __post_init__(self):
        if not 0.0 <= self.fast_axis_angle < math.pi:
            raise ValueError(
                f"fast_axis_angle must lie in [0, pi), got {self.fast_axis_angle}"
            )

    @staticmethod
    def from_degrees(angle_deg: float) -> "WaveplateSetting":
        return WaveplateSetting(math.radians(angle_deg))


def _renormalized(h: complex, v: complex) -> PolarizationState:
    n = math.sqrt(abs(h) ** 2 + abs(v) ** 2)
    return PolarizationState(h / n, v / n)


def hwp_apply(state: PolarizationState, wp: WaveplateSetting) -> PolarizationState:
    """Send ``state`` through a half-wave plate.

    With the fast axis at angle theta from vertical, linear polarization at
    angle alpha is mapped to angle 2*theta - alpha. In the (h, v) basis the
    Jones matrix is [[-cos 2t, sin 2t], [sin 2t, cos 2t]].
    """
    two_t = 2.0 * wp.fast_axis_angle
    c, s = math.cos(two_t), math.sin(two_t)
    return _renormalized(-c * state.h + s * state.v, s * state.h + c * state.v)


def pbs_probabilities(state: PolarizationState) -> tuple[float, float]:
    """Reflection and transmission probabilities at the polarizing beamsplitter.

    Returns:
        (reflect_prob, transmit_prob): |v|^2 and |h|^2. Vertical light is
        reflected, horizontal transmitted.
    """
    return abs(state.v) ** 2, abs(state.h) ** 2


def pockels_apply(state: PolarizationState, drive_fraction: float) -> PolarizationState:
    """Send ``state`` through the Pockels cell at a given drive level.

    The cell is a variable retarder with its fast axis fixed at 45 deg from
    vertical; ``drive_fraction`` = 1 corresponds to the half-wave voltage
    (retardance pi, exchanging H and V) and 0 to the cell being off
    (identity). Intermediate drive is modeled as a linear retardance ramp,
    retardance = pi * drive_fraction.
    """
    if not 0.0 <= drive_fraction <= 1.0:
        raise ValueError(f"drive_fraction must lie in [0, 1], got {drive_fraction}")
    phase = cmath.exp(1j * math.pi * drive_fraction)
    # Retarder at 45 deg: 0.5 * [[1+e^{id}, 1-e^{id}], [1-e^{id}, 1+e^{id}]]
    a = 0.5 * (1.0 + phase)
    b = 0.5 * (1.0 - phase)
    return _renormalized(a * state.h + b * state.v, b * state.h + a * state.v)


def states_equal(a: PolarizationState, b: PolarizationState, tol: float = 1e-12) -> bool:
    """Whether two states coincide up to a global phase.

    Tests |<a|b>|^2 = 1 within ``tol``.
    """
    overlap = a.h.conjugate() * b.h + a.v.conjugate() * b.v
    return abs(abs(overlap) ** 2 - 1.0) <= tol
