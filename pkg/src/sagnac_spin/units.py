"""SI <-> geometric unit conversions.

Internally everything runs in geometric units with c = 1: lengths in meters,
times in meters, angular velocities in 1/m, velocities dimensionless (v/c).
The CLI boundary is the only place SI values appear.
"""

from __future__ import annotations

C_LIGHT = 299_792_458.0  # m/s, exact


def omega_to_geometric(omega_si: float) -> float:
    """Angular velocity in rad/s -> 1/m."""
    return omega_si / C_LIGHT


def omega_from_geometric(omega_geo: float) -> float:
    """Angular velocity in 1/m -> rad/s."""
    return omega_geo * C_LIGHT


def time_to_si(length_m: float) -> float:
    """Time expressed as a length (m) -> seconds."""
    return length_m / C_LIGHT


def time_from_si(t_s: float) -> float:
    """Time in seconds -> length (m)."""
    return t_s * C_LIGHT
