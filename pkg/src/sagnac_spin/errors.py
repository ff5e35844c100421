"""Exception types shared across the package.

PhysicsDomainError marks inputs that are syntactically fine but outside the
physical domain of the model (light-cylinder violations, degenerate branches,
off-shell momenta).  The CLI maps it to its own exit code, distinct from
configuration errors.
"""

from __future__ import annotations


class PhysicsDomainError(ValueError):
    """Input lies outside the physical domain of the model."""


class LightCylinderError(PhysicsDomainError):
    """Radius at or beyond the light cylinder: requires omega * r < 1 (c = 1)."""


class DegenerateBranchError(PhysicsDomainError):
    """Branch co-rotates with the platform (Omega = 0): it never returns to the detector."""


class OffShellError(PhysicsDomainError):
    """Four-momentum does not satisfy eta_ab p^a p^b = -m^2."""


class FrameMismatchError(ValueError):
    """Vectors tagged with different frames were combined without conversion."""


class NonUnitaryOperatorError(ValueError):
    """Spin operator failed the unitarity check."""


class ConfigError(ValueError):
    """Run configuration failed validation."""
