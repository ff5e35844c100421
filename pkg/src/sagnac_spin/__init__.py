"""Wigner rotation and Sagnac spin interferometry on a rotating platform.

Simulation of a massive spin-1/2 quanton on co- and counter-rotating
circular paths in the rotating chart of flat spacetime: local frames and
connections, transport and Wigner rotation generators, spinor transport,
and the interferometric observables (detection probabilities, visibility
deficit, spin-momentum entanglement entropy).
"""

from .errors import (
    ConfigError,
    DegenerateBranchError,
    FrameMismatchError,
    LightCylinderError,
    NonUnitaryOperatorError,
    OffShellError,
    PhysicsDomainError,
)
from .geometry import (
    ETA,
    Frame,
    FrameVector,
    MetricProvider,
    MetricValue,
    RotatingMinkowskiProvider,
    SpacetimePoint,
    SpinConnection,
    Tetrad,
    christoffel_at,
    coordinate_components,
    local_components,
    spin_connection_at,
)
from .interferometer import (
    BranchedSpinState,
    InterferometerOutput,
    Spinor,
    SplitterMode,
    beam_split,
    binary_entropy_bits,
    detect,
    entanglement_entropy,
    entropy_from_deficit,
    evolve_branches,
    momentum_density_matrix,
    simulate_interferometer,
    spin_density_matrix,
    visibility_deficit,
)
from .kinematics import (
    BranchTiming,
    CircularWorldline,
    branch_timing,
    detector_arrival_delay,
    detector_proper_rate,
    four_acceleration,
    four_acceleration_covariant,
    four_velocity,
    platform_speed,
    platform_symmetric_branches,
    sagnac_delay,
)
from .sweep import (
    Range,
    SingleResult,
    SweepConfig,
    build_config,
    canonical_echo,
    evaluate_point,
    load_config,
    parse_config_text,
    run_single,
    run_sweep,
    sweep_records,
    validate_config,
)
from .units import (
    C_LIGHT,
    omega_from_geometric,
    omega_to_geometric,
    time_from_si,
    time_to_si,
)
from .wigner import (
    LLTGenerator,
    SpinorOperator,
    WignerGenerator,
    axis_angle_operator,
    llt_generator,
    rotation_about_2,
    spinor_step,
    thomas_precession_rate,
    transport_spinor,
    wigner_generator,
    wigner_generator_for,
)

__version__ = "0.1.0"
