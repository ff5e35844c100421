"""Circular worldlines on the rotating platform and Sagnac timing.

A quanton rides a circle of radius r at fixed z.  Its speed is specified in
the local ZAMO frame as the signed dimensionless u = tanh(xi): u > 0
co-rotates with the platform (+phi direction), u < 0 counter-rotates.  In
the rotating chart the angular velocity is Omega = u/r - omega, so a branch
with u = omega * r co-rotates with the detector and never returns to it.

Proper-time bookkeeping per branch: a full lap back to a detector fixed in
the rotating chart takes coordinate time t_lap = 2 pi / |Omega| and proper
time tau_lap = t_lap / cosh(xi).

The Sagnac delay between the co- and counter-rotating arms is the
detector-clock gap between the two arrival events,

    delta_tau = 4 pi r^2 omega / sqrt(1 - omega^2 r^2),

independent of the launch speed.  `detector_arrival_delay` reproduces it
from per-branch lap times of two arms launched with equal speeds relative
to the platform (relativistic velocity addition); `sagnac_delay` is the
closed form.  Note the per-branch *proper* times of two arms with equal
ZAMO speeds +/-u do not differ by this amount; their difference is
4 pi omega r^2 / (cosh(xi) (u^2 - omega^2 r^2)) and depends on u.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateBranchError, LightCylinderError
from .geometry import (
    Frame,
    FrameVector,
    MetricProvider,
    RotatingMinkowskiProvider,
    SpacetimePoint,
    christoffel_at,
)

TWO_PI = 2.0 * math.pi


# ============================================================
# Worldline
# ============================================================

@dataclass(frozen=True)
class CircularWorldline:
    """Uniform circular motion at radius r with signed local speed u.

    Parameters
    ----------
    r : float
        Orbit radius (m), r > 0.
    omega : float
        Platform angular velocity (1/m), |omega| r < 1.
    u : float
        Local speed measured in the ZAMO frame, |u| < 1; the sign selects
        the co-rotating (+) or counter-rotating (-) branch.
    z, phi0 : float
        Height and launch azimuth; they do not affect any derived quantity
        in this axisymmetric chart.
    """

    r: float
    omega: float
    u: float
    z: float = 0.0
    phi0: float = 0.0

    def __post_init__(self) -> None:
        if not self.r > 0.0:
            raise LightCylinderError(f"require r > 0, got r = {self.r}")
        if abs(self.omega) * self.r >= 1.0:
            raise LightCylinderError(
                f"orbit outside light cylinder: |omega| r = {abs(self.omega) * self.r} >= 1"
            )
        if not abs(self.u) < 1.0:
            raise LightCylinderError(f"require |u| < 1, got u = {self.u}")

    @property
    def xi(self) -> float:
        """Rapidity in the local frame, tanh(xi) = u."""
        return math.atanh(self.u)

    @property
    def cosh_xi(self) -> float:
        return 1.0 / math.sqrt(1.0 - self.u * self.u)

    @property
    def sinh_xi(self) -> float:
        return self.u / math.sqrt(1.0 - self.u * self.u)

    @property
    def angular_velocity(self) -> float:
        """Omega = dphi/dt in the rotating chart."""
        return self.u / self.r - self.omega

    def point(self, t: float = 0.0) -> SpacetimePoint:
        return SpacetimePoint(
            t=t, r=self.r, z=self.z, phi=self.phi0 + self.angular_velocity * t
        )

    def provider(self) -> RotatingMinkowskiProvider:
        return RotatingMinkowskiProvider(self.omega)


# ============================================================
# Four-velocity and four-acceleration
# ============================================================

def four_velocity(w: CircularWorldline, frame: Frame) -> FrameVector:
    """Normalized four-velocity of the worldline in the requested frame.

    Local components are (cosh xi, 0, 0, sinh xi); coordinate components
    are (cosh xi, 0, 0, sinh xi / r - omega cosh xi).
    """
    ch, sh = w.cosh_xi, w.sinh_xi
    if frame is Frame.LOCAL:
        return FrameVector(np.array([ch, 0.0, 0.0, sh]), Frame.LOCAL)
    return FrameVector(
        np.array([ch, 0.0, 0.0, sh / w.r - w.omega * ch]), Frame.COORDINATE
    )


def four_acceleration(w: CircularWorldline) -> FrameVector:
    """Closed-form four-acceleration: purely radial, a^r = -sinh^2(xi)/r."""
    sh = w.sinh_xi
    return FrameVector(np.array([0.0, -sh * sh / w.r, 0.0, 0.0]), Frame.COORDINATE)


def four_acceleration_covariant(
    w: CircularWorldline, provider: MetricProvider | None = None
) -> FrameVector:
    """Four-acceleration from the connection: a^mu = Gamma^mu_nu_sig u^nu u^sig.

    The partial-derivative term of u^nu d_nu u^mu vanishes on the circle
    (components depend on r only).  This is the numeric route; the closed
    form above is its check.
    """
    prov = w.provider() if provider is None else provider
    gamma = christoffel_at(prov, w.point())
    u = four_velocity(w, Frame.COORDINATE).components
    return FrameVector(np.einsum("mns,n,s->m", gamma, u, u), Frame.COORDINATE)


# ============================================================
# Lap timing and the Sagnac delay
# ============================================================

@dataclass(frozen=True)
class BranchTiming:
    """Coordinate and proper duration of one lap back to the detector."""

    t_lap: float
    tau_lap: float


def branch_timing(w: CircularWorldline, detector_phi: float = TWO_PI) -> BranchTiming:
    """Time for the branch to first reach a detector fixed at detector_phi.

    A detector azimuth congruent to the launch azimuth means a full lap,
    t_lap = 2 pi / |Omega|.  Raises DegenerateBranchError when the branch
    co-rotates with the platform (Omega = 0) and never arrives.
    """
    cap_omega = w.angular_velocity
    scale = abs(w.u) / w.r + abs(w.omega)
    if cap_omega == 0.0 or abs(cap_omega) < 1e-15 * scale:
        raise DegenerateBranchError(
            "branch co-rotates with the detector (u = omega r): no lap time exists"
        )
    sweep = (detector_phi - w.phi0) if cap_omega > 0.0 else (w.phi0 - detector_phi)
    sweep %= TWO_PI
    if sweep == 0.0:
        sweep = TWO_PI
    t_lap = sweep / abs(cap_omega)
    return BranchTiming(t_lap=t_lap, tau_lap=t_lap / w.cosh_xi)


def sagnac_delay(r: float, omega: float) -> float:
    """Detector-clock gap between counter-propagating arrivals (length units).

    delta_tau = 4 pi r^2 omega / sqrt(1 - omega^2 r^2); odd in omega and
    independent of the launch speed.
    """
    if not r > 0.0:
        raise LightCylinderError(f"require r > 0, got r = {r}")
    x = omega * r
    if abs(x) >= 1.0:
        raise LightCylinderError(f"|omega| r = {abs(x)} >= 1: outside light cylinder")
    return 4.0 * math.pi * r * r * omega / math.sqrt(1.0 - x * x)


def platform_speed(r: float, omega: float) -> float:
    """Local speed of a platform-riding point, u = omega r."""
    return omega * r


def platform_symmetric_branches(
    r: float, omega: float, v: float
) -> tuple[CircularWorldline, CircularWorldline]:
    """Co/counter-rotating arms launched at equal speed v relative to the platform.

    Relativistic velocity addition against the platform speed V = omega r
    gives the ZAMO-frame speeds u_+/- = (V +/- v) / (1 +/- V v).
    """
    cap_v = platform_speed(r, omega)
    if not 0.0 < v < 1.0:
        raise LightCylinderError(f"require 0 < v < 1, got v = {v}")
    u_plus = (cap_v + v) / (1.0 + cap_v * v)
    u_minus = (cap_v - v) / (1.0 - cap_v * v)
    return (
        CircularWorldline(r=r, omega=omega, u=u_plus),
        CircularWorldline(r=r, omega=omega, u=u_minus),
    )


def detector_proper_rate(r: float, omega: float) -> float:
    """dtau/dt of a detector riding the platform at radius r."""
    x = omega * r
    if abs(x) >= 1.0:
        raise LightCylinderError(f"|omega| r = {abs(x)} >= 1: outside light cylinder")
    return math.sqrt(1.0 - x * x)


def detector_arrival_delay(r: float, omega: float, v: float) -> float:
    """Sagnac delay assembled from per-branch lap times, in detector proper time.

    Both arms leave the detector with equal platform-relative speed v; the
    co-rotating arm arrives later by (t_lap+ - t_lap-) of coordinate time,
    which the detector clock registers scaled by dtau/dt.  The result
    equals sagnac_delay(r, omega) for every v.

    The lap times agree to a relative v * omega * r, so in double precision
    their difference resolves the delay only while that product sits well
    above machine epsilon; far below it the subtraction returns rounding
    noise and sagnac_delay is the stable route.
    """
    w_plus, w_minus = platform_symmetric_branches(r, omega, v)
    t_plus = branch_timing(w_plus).t_lap
    t_minus = branch_timing(w_minus).t_lap
    return (t_plus - t_minus) * detector_proper_rate(r, omega)
