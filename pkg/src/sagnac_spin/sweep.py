"""Run configuration, the sweep engine, and the CSV contract.

Config files are flat key = value text; `--set key=value` overrides them.
Physics keys take SI values (omega_hz in rad/s, r_m in meters, v_over_c
dimensionless, upsilon_rad in radians) and exactly one of them may be a
range `start:stop[:points]` per sweep; conversion to geometric units
happens here and nowhere downstream.

CSV output is the contract and is byte-for-byte deterministic:

    row 1: `# config: <canonical echo of the resolved configuration>`
    row 2: headers (omega_hz, r_m, v_over_c, theta_per_m, delta_tau_s,
           alpha_rad, visibility_deficit, entropy_bits, p_plus, p_minus
           for the default output selection)
    rows:  one per grid point

visibility_deficit and entropy_bits are printed in scientific notation
with 17 significant digits; entropies below 1e-300 bits are emitted as 0
with the entropy_underflow flag column set.  A swept upsilon adds an
upsilon_rad parameter column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterator, Mapping

from .errors import ConfigError
from .geometry import Frame
from .interferometer import SplitterMode, simulate_interferometer
from .kinematics import CircularWorldline, four_velocity, sagnac_delay
from .units import C_LIGHT, omega_to_geometric, time_to_si
from .wigner import llt_generator, wigner_generator

ENTROPY_FLOOR = 1e-300

OUTPUT_COLUMNS: dict[str, tuple[str, ...]] = {
    "theta": ("theta_per_m",),
    "lambda": ("lambda_per_m",),
    "chi": ("chi_per_m",),
    "delta_tau": ("delta_tau_s",),
    "visibility": ("visibility",),
    "deficit": ("alpha_rad", "visibility_deficit"),
    "entropy": ("entropy_bits",),
    "probabilities": ("p_plus", "p_minus"),
}
OUTPUT_ORDER = (
    "theta",
    "lambda",
    "chi",
    "delta_tau",
    "visibility",
    "deficit",
    "entropy",
    "probabilities",
)
DEFAULT_OUTPUTS = ("theta", "delta_tau", "deficit", "entropy", "probabilities")
SWEEPABLE = ("omega_hz", "r_m", "v_over_c", "upsilon_rad")
# Columns carrying quantities that vanish to working precision long before
# they stop being meaningful; printed with 17 significant digits.
SCI17_COLUMNS = frozenset({"visibility_deficit", "entropy_bits"})


# ============================================================
# Configuration
# ============================================================

@dataclass(frozen=True)
class Range:
    """Inclusive linear range start:stop:points."""

    start: float
    stop: float
    points: int | None = None


@dataclass(frozen=True)
class SweepConfig:
    omega_hz: float | Range = 10.0
    r_m: float | Range = 3.0
    v_over_c: float | Range = 0.6e-5
    upsilon_rad: float | Range = 0.0
    grid_points: int = 100
    mode: SplitterMode = SplitterMode.NONENTANGLING
    outputs: tuple[str, ...] = DEFAULT_OUTPUTS

    def range_keys(self) -> list[str]:
        return [k for k in SWEEPABLE if isinstance(getattr(self, k), Range)]


def _parse_scalar_or_range(key: str, text: str) -> float | Range:
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise ConfigError(f"{key}: range must be start:stop[:points], got {text!r}")
        try:
            start, stop = float(parts[0]), float(parts[1])
        except ValueError:
            raise ConfigError(f"{key}: bad range bounds in {text!r}") from None
        points: int | None = None
        if len(parts) == 3:
            try:
                points = int(parts[2])
            except ValueError:
                raise ConfigError(f"{key}: bad range point count in {text!r}") from None
        return Range(start=start, stop=stop, points=points)
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"{key}: expected a number or range, got {text!r}") from None


def parse_config_text(text: str) -> dict[str, str]:
    """Flat key = value lines; '#' starts a comment; later keys win."""
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected key = value, got {line!r}")
        key, value = (part.strip() for part in stripped.split("=", 1))
        if not key or not value:
            raise ConfigError(f"line {lineno}: expected key = value, got {line!r}")
        raw[key] = value
    return raw


def build_config(raw: Mapping[str, str]) -> SweepConfig:
    """Resolve raw key/value strings into a SweepConfig (unvalidated)."""
    cfg = SweepConfig()
    for key, value in raw.items():
        if key in SWEEPABLE:
            cfg = replace(cfg, **{key: _parse_scalar_or_range(key, value)})
        elif key == "grid_points":
            try:
                cfg = replace(cfg, grid_points=int(value))
            except ValueError:
                raise ConfigError(f"grid_points: expected an integer, got {value!r}") from None
        elif key == "mode":
            try:
                cfg = replace(cfg, mode=SplitterMode(value.lower()))
            except ValueError:
                names = ", ".join(m.value for m in SplitterMode)
                raise ConfigError(f"mode: expected one of {names}, got {value!r}") from None
        elif key == "outputs":
            if value.strip().lower() == "all":
                cfg = replace(cfg, outputs=OUTPUT_ORDER)
            else:
                chosen = tuple(v.strip() for v in value.split(",") if v.strip())
                bad = [c for c in chosen if c not in OUTPUT_COLUMNS]
                if bad:
                    raise ConfigError(
                        f"outputs: unknown selection {', '.join(bad)}; "
                        f"valid: {', '.join(OUTPUT_ORDER)}"
                    )
                ordered = tuple(o for o in OUTPUT_ORDER if o in chosen)
                cfg = replace(cfg, outputs=ordered)
        else:
            valid = ", ".join(list(SWEEPABLE) + ["grid_points", "mode", "outputs"])
            raise ConfigError(f"unknown config key {key!r}; valid keys: {valid}")
    return cfg


def apply_overrides(raw: dict[str, str], sets: list[str]) -> dict[str, str]:
    for item in sets:
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        key, value = (part.strip() for part in item.split("=", 1))
        if not key or not value:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        raw[key] = value
    return raw


def _scalar_bounds(value: float | Range) -> tuple[float, float]:
    if isinstance(value, Range):
        return (min(value.start, value.stop), max(value.start, value.stop))
    return (value, value)


def validate_config(cfg: SweepConfig, *, require_scalar: bool = False) -> list[str]:
    """Collect constraint violations; empty list means valid."""
    errors: list[str] = []
    ranges = cfg.range_keys()
    if require_scalar and ranges:
        errors.append(f"single run forbids ranges; got range on {', '.join(ranges)}")
    if not require_scalar and len(ranges) > 1:
        errors.append(f"exactly one range allowed per sweep; got {', '.join(ranges)}")

    r_lo, r_hi = _scalar_bounds(cfg.r_m)
    if not r_lo > 0.0:
        errors.append(f"r_m: require r > 0, got {r_lo}")
    v_lo, v_hi = _scalar_bounds(cfg.v_over_c)
    if max(abs(v_lo), abs(v_hi)) >= 1.0:
        errors.append(f"v_over_c: require |v/c| < 1, got {cfg.v_over_c}")
    w_lo, w_hi = _scalar_bounds(cfg.omega_hz)
    max_wr = max(abs(w_lo), abs(w_hi)) / C_LIGHT * r_hi
    if max_wr >= 1.0:
        errors.append(
            f"omega_hz/r_m: light-cylinder bound requires |omega| r / c < 1, "
            f"got omega r / c = {max_wr}"
        )
    if cfg.grid_points < 2:
        errors.append(f"grid_points: require >= 2, got {cfg.grid_points}")
    for key in ranges:
        rng: Range = getattr(cfg, key)
        points = rng.points if rng.points is not None else cfg.grid_points
        if points < 2:
            errors.append(f"{key}: range needs >= 2 points, got {points}")
    return errors


def load_config(path: str | None, sets: list[str]) -> SweepConfig:
    raw: dict[str, str] = {}
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            raw = parse_config_text(fh.read())
    raw = apply_overrides(raw, sets)
    return build_config(raw)


def _fmt_value(value: float | Range) -> str:
    if isinstance(value, Range):
        points = "" if value.points is None else f":{value.points}"
        return f"{value.start!r}:{value.stop!r}{points}"
    return repr(value)


def canonical_echo(cfg: SweepConfig) -> str:
    parts = [f"{key}={_fmt_value(getattr(cfg, key))}" for key in SWEEPABLE]
    parts.append(f"grid_points={cfg.grid_points}")
    parts.append(f"mode={cfg.mode.value}")
    parts.append(f"outputs={','.join(cfg.outputs)}")
    return " ".join(parts)


# ============================================================
# Single-point evaluation
# ============================================================

@dataclass(frozen=True)
class SingleResult:
    """One grid point: SI inputs, geometric intermediates, detector outputs."""

    omega_hz: float
    r_m: float
    v_over_c: float
    upsilon_rad: float
    omega_per_m: float
    theta_per_m: float
    lambda_per_m: float
    chi_per_m: float
    delta_tau_m: float
    delta_tau_s: float
    alpha_rad: float
    visibility: float
    visibility_deficit: float
    entropy_bits: float
    entropy_underflow: bool
    p_plus: float
    p_minus: float


def evaluate_point(
    omega_hz: float,
    r_m: float,
    v_over_c: float,
    upsilon_rad: float,
    mode: SplitterMode,
) -> SingleResult:
    """Full pipeline at one parameter point; no closed-form shortcuts.

    Generators come from the geometry route (tetrad -> Christoffels ->
    spin connection -> transport generator -> Wigner generator) and the
    detector outputs from the state-vector simulation.
    """
    omega_geo = omega_to_geometric(omega_hz)
    w = CircularWorldline(r=r_m, omega=omega_geo, u=v_over_c)
    gen_llt = llt_generator(w)
    gen_wig = wigner_generator(gen_llt, four_velocity(w, Frame.LOCAL), m=1.0)
    theta13 = float(gen_wig.theta[0, 2])
    lam13 = float(gen_llt.lam[1, 3])
    chi13 = float(gen_llt.connection_part[1, 3])

    delta_tau_m = sagnac_delay(r_m, omega_geo)
    out = simulate_interferometer(theta13, delta_tau_m, upsilon=upsilon_rad, mode=mode)

    entropy = out.entropy_bits
    underflow = bool(out.wigner_angle_diff != 0.0 and 0.0 < entropy < ENTROPY_FLOOR)
    if underflow:
        entropy = 0.0
    return SingleResult(
        omega_hz=omega_hz,
        r_m=r_m,
        v_over_c=v_over_c,
        upsilon_rad=upsilon_rad,
        omega_per_m=omega_geo,
        theta_per_m=theta13,
        lambda_per_m=lam13,
        chi_per_m=chi13,
        delta_tau_m=delta_tau_m,
        delta_tau_s=time_to_si(delta_tau_m),
        alpha_rad=out.wigner_angle_diff,
        visibility=out.visibility,
        visibility_deficit=out.visibility_deficit,
        entropy_bits=entropy,
        entropy_underflow=underflow,
        p_plus=out.p_plus,
        p_minus=out.p_minus,
    )


def run_single(cfg: SweepConfig) -> SingleResult:
    errors = validate_config(cfg, require_scalar=True)
    if errors:
        raise ConfigError("; ".join(errors))
    return evaluate_point(
        cfg.omega_hz, cfg.r_m, cfg.v_over_c, cfg.upsilon_rad, cfg.mode
    )


# ============================================================
# Sweep engine and CSV emission
# ============================================================

def _grid(rng: Range, default_points: int) -> list[float]:
    n = rng.points if rng.points is not None else default_points
    if n < 2:
        raise ConfigError(f"range needs >= 2 points, got {n}")
    step = (rng.stop - rng.start) / (n - 1)
    values = [rng.start + step * i for i in range(n)]
    values[-1] = rng.stop  # endpoint exact regardless of rounding
    return values


def sweep_records(cfg: SweepConfig) -> tuple[str, list[SingleResult]]:
    """Evaluate the grid; returns (sweep key, one record per grid point)."""
    errors = validate_config(cfg)
    if errors:
        raise ConfigError("; ".join(errors))
    ranges = cfg.range_keys()
    if len(ranges) != 1:
        raise ConfigError(f"sweep requires exactly one range; got {len(ranges)}")
    key = ranges[0]
    grid = _grid(getattr(cfg, key), cfg.grid_points)
    scalars = {
        k: getattr(cfg, k) for k in SWEEPABLE if k != key
    }
    records = []
    for value in grid:
        params = dict(scalars)
        params[key] = value
        records.append(
            evaluate_point(
                params["omega_hz"],
                params["r_m"],
                params["v_over_c"],
                params["upsilon_rad"],
                cfg.mode,
            )
        )
    return key, records


def csv_columns(cfg: SweepConfig, sweep_key: str | None = None) -> list[str]:
    cols = ["omega_hz", "r_m", "v_over_c"]
    if sweep_key == "upsilon_rad":
        cols.append("upsilon_rad")
    for output in cfg.outputs:
        cols.extend(OUTPUT_COLUMNS[output])
    if "entropy" in cfg.outputs:
        cols.append("entropy_underflow")
    return cols


def _cell(record: SingleResult, column: str) -> str:
    value = getattr(record, column)
    if column == "entropy_underflow":
        return "1" if value else "0"
    if column in SCI17_COLUMNS:
        return f"{value:.16e}"
    return repr(float(value))


def csv_lines(cfg: SweepConfig, records: list[SingleResult], sweep_key: str | None) -> Iterator[str]:
    yield f"# config: {canonical_echo(cfg)}"
    columns = csv_columns(cfg, sweep_key)
    yield ", ".join(columns)
    for record in records:
        yield ", ".join(_cell(record, col) for col in columns)


def run_sweep(cfg: SweepConfig) -> Iterator[str]:
    """CSV stream for the configured sweep (the delimited contract)."""
    key, records = sweep_records(cfg)
    yield from csv_lines(cfg, records, key)


# ============================================================
# Human-readable rendering
# ============================================================

def human_single(cfg: SweepConfig, record: SingleResult) -> Iterator[str]:
    yield f"config: {canonical_echo(cfg)}"
    columns = csv_columns(cfg, None)
    width = max(len(c) for c in columns)
    for col in columns:
        yield f"{col:<{width}}  {_cell(record, col)}"


def human_sweep(cfg: SweepConfig, records: list[SingleResult], sweep_key: str) -> Iterator[str]:
    yield f"config: {canonical_echo(cfg)}"
    columns = csv_columns(cfg, sweep_key)
    rows = [[_cell(r, c) for c in columns] for r in records]
    widths = [
        max(len(col), *(len(row[i]) for row in rows)) for i, col in enumerate(columns)
    ]
    yield "  ".join(col.ljust(widths[i]) for i, col in enumerate(columns))
    for row in rows:
        yield "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row))
