"""Series output: capacity ratios as CSV plus rendered figures.

One row per size: both capacities, their midpoint, the bound-per-size
ratio and the cells-per-domino ratio.  Ratio columns carry a 12
significant digit decimal and an exact p/q twin; sizes where a ratio is
undefined (a zero bound) emit ``undef``.  Figures are drawn with
matplotlib (imported lazily) next to the CSV: the bound-per-size sawtooth
and the global occupancy descending toward its limit of six cells per
domino.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .bounds import SeriesRow, series_rows

SERIES_HEADER = (
    "n,psi,psi_bar,psi_tilde,psi_tilde_exact,"
    "ratio_psibar_n,ratio_psibar_n_exact,"
    "ratio_Dn_psibar,ratio_Dn_psibar_exact"
)


def _decimal(value: Fraction | None) -> str:
    if value is None:
        return "undef"
    return f"{float(value):.12g}"


def _exact(value: Fraction | None) -> str:
    if value is None:
        return "undef"
    return f"{value.numerator}/{value.denominator}"


def series_csv(n_max: int) -> str:
    lines = [SERIES_HEADER]
    for row in series_rows(n_max):
        lines.append(
            ",".join(
                (
                    str(row.n),
                    str(row.psi),
                    str(row.psi_bar),
                    _decimal(row.psi_tilde),
                    _exact(row.psi_tilde),
                    _decimal(row.ratio_bound_to_n),
                    _exact(row.ratio_bound_to_n),
                    _decimal(row.ratio_cells_to_bound),
                    _exact(row.ratio_cells_to_bound),
                )
            )
        )
    return "\n".join(lines) + "\n"


def _plot(rows: list[SeriesRow], value_of, ylabel: str, path: Path, hline=None) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs, ys = [], []
    for row in rows:
        v = value_of(row)
        if v is None:
            continue
        xs.append(row.n)
        ys.append(float(v))
    fig, ax = plt.subplots(figsize=(7.0, 4.2))
    ax.plot(xs, ys, lw=0.8, color="#2f6ba8")
    ax.plot(xs, ys, ".", ms=2.5, color="#1a1a2e")
    if hline is not None:
        ax.axhline(hline, color="#b04a4a", lw=1.0, ls="--")
    ax.set_xlabel("n")
    ax.set_ylabel(ylabel)
    ax.grid(True, lw=0.3, alpha=0.5)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_series(n_max: int, out_csv: Path, figures: bool = True) -> list[Path]:
    """Write the series CSV and, by default, its two figures alongside."""
    out_csv = Path(out_csv)
    out_csv.write_text(series_csv(n_max))
    written = [out_csv]
    if figures:
        rows = series_rows(n_max)
        stem = out_csv.with_suffix("")
        bound_fig = Path(f"{stem}_bound_per_n.png")
        occ_fig = Path(f"{stem}_occupancy.png")
        _plot(rows, lambda r: r.ratio_bound_to_n, "upper capacity / n", bound_fig)
        _plot(
            rows,
            lambda r: r.ratio_cells_to_bound,
            "cells per domino (upper bound)",
            occ_fig,
            hline=6.0,
        )
        written += [bound_fig, occ_fig]
    return written
