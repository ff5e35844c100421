"""Spacetime geometry of a uniformly rotating platform in flat spacetime.

Chart and conventions
---------------------
Cylindrical coordinates x^mu = (t, r, z, phi) co-rotating with the platform
at angular velocity omega (geometric units, c = 1, omega in 1/m).  The line
element is

    ds^2 = -(1 - omega^2 r^2) dt^2 + dr^2 + dz^2 + r^2 dphi^2
           + 2 omega r^2 dt dphi,

valid inside the light cylinder omega * r < 1.  Metric signature (-,+,+,+),
eta = diag(-1, 1, 1, 1).

Local frames are defined by an orthonormal tetrad e^a_mu whose timelike leg
is the zero-angular-momentum observer (ZAMO): an observer at fixed r that
does not rotate with respect to the inertial frame.  Tetrad arrays are
stored row-major as [a][mu]; `e_fwd[a][mu]` is e^a_mu and `e_inv[a][mu]`
is e_a^mu.

Providers supply the metric, its analytic first derivatives, the tetrad,
and the tetrad's analytic first derivatives; everything downstream
(Christoffel symbols, spin connection) is computed generically from those.
Finite differencing is reserved for test oracles.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import FrameMismatchError, LightCylinderError

# Index order of the chart, used throughout.
T, R, Z, PHI = 0, 1, 2, 3

# Minkowski metric of the local frames.
ETA = np.diag([-1.0, 1.0, 1.0, 1.0])


# ============================================================
# Points, frames, vectors
# ============================================================

@dataclass(frozen=True)
class SpacetimePoint:
    """Event in the rotating chart (t, r, z, phi), geometric units (m)."""

    t: float
    r: float
    z: float
    phi: float

    def __post_init__(self) -> None:
        if not self.r > 0.0:
            raise LightCylinderError(f"require r > 0, got r = {self.r}")


class Frame(Enum):
    COORDINATE = "coordinate"
    LOCAL = "local"


@dataclass(frozen=True)
class FrameVector:
    """Four-vector tagged with the frame its components refer to.

    Mixing frames in arithmetic is an error; convert explicitly with
    `local_components` / `coordinate_components`.
    """

    components: np.ndarray
    frame: Frame

    def __post_init__(self) -> None:
        comps = np.asarray(self.components, dtype=float)
        if comps.shape != (4,):
            raise ValueError(f"four-vector needs shape (4,), got {comps.shape}")
        object.__setattr__(self, "components", comps)

    def _check_same_frame(self, other: "FrameVector") -> None:
        if self.frame is not other.frame:
            raise FrameMismatchError(
                f"cannot combine {self.frame.value} with {other.frame.value} components"
            )

    def __add__(self, other: "FrameVector") -> "FrameVector":
        self._check_same_frame(other)
        return FrameVector(self.components + other.components, self.frame)

    def __sub__(self, other: "FrameVector") -> "FrameVector":
        self._check_same_frame(other)
        return FrameVector(self.components - other.components, self.frame)

    def __mul__(self, scalar: float) -> "FrameVector":
        return FrameVector(self.components * float(scalar), self.frame)

    __rmul__ = __mul__


# ============================================================
# Metric and tetrad containers
# ============================================================

@dataclass(frozen=True)
class MetricValue:
    """Metric and its analytic first derivatives at a point.

    g[mu][nu] = g_mu_nu; dg[rho][mu][nu] = d_rho g_mu_nu (symmetric in the
    last two indices).
    """

    g: np.ndarray
    dg: np.ndarray


@dataclass(frozen=True)
class Tetrad:
    """Orthonormal frame at a point; e_fwd[a][mu] = e^a_mu, e_inv[a][mu] = e_a^mu."""

    e_fwd: np.ndarray
    e_inv: np.ndarray


@dataclass(frozen=True)
class SpinConnection:
    """Connection coefficients of the local frame, omega[nu][a][b] = w_nu^a_b."""

    omega: np.ndarray


# ============================================================
# Providers
# ============================================================

class MetricProvider(ABC):
    """Chart-specific inputs: metric, tetrad, and their analytic derivatives."""

    @abstractmethod
    def metric_at(self, p: SpacetimePoint) -> MetricValue: ...

    @abstractmethod
    def tetrad_at(self, p: SpacetimePoint) -> Tetrad: ...

    @abstractmethod
    def tetrad_derivatives(self, p: SpacetimePoint) -> np.ndarray:
        """de[nu][a][mu] = d_nu e_a^mu (derivatives of the inverse tetrad)."""


class RotatingMinkowskiProvider(MetricProvider):
    """Flat spacetime in the co-rotating cylindrical chart, ZAMO tetrad.

    Parameters
    ----------
    omega : float
        Platform angular velocity in geometric units (1/m).  May be zero,
        in which case the chart is plain cylindrical Minkowski.
    """

    def __init__(self, omega: float):
        self.omega = float(omega)

    def _check(self, p: SpacetimePoint) -> None:
        if abs(self.omega) * p.r >= 1.0:
            raise LightCylinderError(
                f"point at r = {p.r} outside light cylinder: require |omega| r < 1, "
                f"got omega r = {self.omega * p.r}"
            )

    def metric_at(self, p: SpacetimePoint) -> MetricValue:
        self._check(p)
        w, r = self.omega, p.r
        g = np.zeros((4, 4))
        g[T, T] = -(1.0 - w * w * r * r)
        g[R, R] = 1.0
        g[Z, Z] = 1.0
        g[PHI, PHI] = r * r
        g[T, PHI] = g[PHI, T] = w * r * r
        # Only radial derivatives are nonzero in this chart.
        dg = np.zeros((4, 4, 4))
        dg[R, T, T] = 2.0 * w * w * r
        dg[R, PHI, PHI] = 2.0 * r
        dg[R, T, PHI] = dg[R, PHI, T] = 2.0 * w * r
        return MetricValue(g=g, dg=dg)

    def tetrad_at(self, p: SpacetimePoint) -> Tetrad:
        self._check(p)
        w, r = self.omega, p.r
        e_fwd = np.zeros((4, 4))
        e_fwd[0, T] = 1.0
        e_fwd[1, R] = 1.0
        e_fwd[2, Z] = 1.0
        e_fwd[3, T] = w * r
        e_fwd[3, PHI] = r
        e_inv = np.zeros((4, 4))
        e_inv[0, T] = 1.0
        e_inv[0, PHI] = -w
        e_inv[1, R] = 1.0
        e_inv[2, Z] = 1.0
        e_inv[3, PHI] = 1.0 / r
        return Tetrad(e_fwd=e_fwd, e_inv=e_inv)

    def tetrad_derivatives(self, p: SpacetimePoint) -> np.ndarray:
        self._check(p)
        de = np.zeros((4, 4, 4))
        de[R, 3, PHI] = -1.0 / (p.r * p.r)  # d_r (1/r)
        return de


# ============================================================
# Generic derived quantities
# ============================================================

def christoffel_at(provider: MetricProvider, p: SpacetimePoint) -> np.ndarray:
    """Levi-Civita connection Gamma[rho][mu][nu] from the provider's g and dg.

    Gamma^rho_mu_nu = 1/2 g^rho_sigma (d_mu g_sigma_nu + d_nu g_sigma_mu
    - d_sigma g_mu_nu).
    """
    mv = provider.metric_at(p)
    if abs(np.linalg.det(mv.g)) < 1e-300:
        raise LightCylinderError(f"metric singular at r = {p.r}")
    ginv = np.linalg.inv(mv.g)
    dg = mv.dg
    # brackets[sigma][mu][nu] = d_mu g_sigma_nu + d_nu g_sigma_mu - d_sigma g_mu_nu
    brackets = dg.transpose(1, 0, 2) + dg.transpose(1, 2, 0) - dg
    return 0.5 * np.einsum("rs,smn->rmn", ginv, brackets)


def spin_connection_at(provider: MetricProvider, p: SpacetimePoint) -> SpinConnection:
    """Spin connection w_nu^a_b = e^a_lam (d_nu e_b^lam + Gamma^lam_nu_sig e_b^sig)."""
    tet = provider.tetrad_at(p)
    de = provider.tetrad_derivatives(p)
    gamma = christoffel_at(provider, p)
    # grad[nu][b][lam] = covariant derivative of the frame fields e_b
    grad = de + np.einsum("lns,bs->nbl", gamma, tet.e_inv)
    omega = np.einsum("al,nbl->nab", tet.e_fwd, grad)
    return SpinConnection(omega=omega)


def local_components(v: FrameVector, tetrad: Tetrad) -> FrameVector:
    """Project coordinate components onto the local frame: v^a = e^a_mu v^mu."""
    if v.frame is not Frame.COORDINATE:
        raise FrameMismatchError("local_components expects coordinate components")
    return FrameVector(tetrad.e_fwd @ v.components, Frame.LOCAL)


def coordinate_components(v: FrameVector, tetrad: Tetrad) -> FrameVector:
    """Reassemble coordinate components from the local frame: v^mu = e_a^mu v^a."""
    if v.frame is not Frame.LOCAL:
        raise FrameMismatchError("coordinate_components expects local components")
    return FrameVector(tetrad.e_inv.T @ v.components, Frame.COORDINATE)


def frame_inner(u: FrameVector, v: FrameVector, metric: np.ndarray | None = None) -> float:
    """Invariant inner product; metric defaults to eta for local components."""
    u._check_same_frame(v)
    if u.frame is Frame.LOCAL:
        m = ETA if metric is None else metric
    else:
        if metric is None:
            raise ValueError("coordinate inner product needs the metric g")
        m = metric
    return float(u.components @ m @ v.components)
