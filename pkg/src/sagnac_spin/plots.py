"""Optional figure rendering for sweep results.

The CSV stream is the contract; this module is the convenience layer that
draws the same records to a file when `sweep --plot PATH` is given.
matplotlib is imported lazily so the CLI does not pay for it otherwise.
"""

from __future__ import annotations

from .sweep import SingleResult, SweepConfig, csv_columns

# Parameter columns never plotted against themselves.
_SKIP = {"omega_hz", "r_m", "v_over_c", "upsilon_rad", "entropy_underflow"}


def _spans_decades(values: list[float]) -> bool:
    positive = [v for v in values if v > 0.0]
    return len(positive) == len(values) and len(values) > 0 and max(positive) > 1e3 * min(
        positive
    )


def render_sweep_plot(
    cfg: SweepConfig,
    sweep_key: str,
    records: list[SingleResult],
    path: str,
) -> None:
    """Line plot of every requested output column against the sweep variable."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    x = [getattr(r, sweep_key) for r in records]
    columns = [c for c in csv_columns(cfg, sweep_key) if c not in _SKIP]
    series = {c: [getattr(r, c) for r in records] for c in columns}

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for name, values in series.items():
        ax.plot(x, values, label=name)
    if all(_spans_decades(v) for v in series.values()):
        ax.set_yscale("log")
    if _spans_decades(x):
        ax.set_xscale("log")
    ax.set_xlabel(sweep_key)
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
