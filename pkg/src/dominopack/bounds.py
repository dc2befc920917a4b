"""Upper capacity bounds from controlled disorder, and ratio series.

The deterministic construction is tight in places but not everywhere: in a
disordered arrangement two lacunar voids can merge and admit one more
domino.  Counting the voids the construction is known to free (flattened
wedge tips for odd sizes, the staircase voids accumulating every fourth p
step for even sizes) gives a per-class upper capacity; where it collapses
onto the constructive count, that count is exact.

Only the odd-size tip flattening is realized as an actual configuration
transformation here (``flatten_ridges``); every other contribution enters
at count level through ``upper_capacity``.  The midpoint of the two bounds
serves as a point estimate when a void pairing is taken to succeed half
the time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import DIAMOND, diamond_cardinality
from .dominoes import Configuration
from .diamonds import (
    build_diamond,
    classify,
    core_side,
    diamond_capacity,
    wedge_capacity_even,
    wedge_capacity_odd,
)
from .squares import square_capacity


def upper_capacity(n: int) -> int:
    """Disorder-extended capacity bound for the size-n diamond."""
    sc = classify(n)
    psi = diamond_capacity(n)
    if sc.parity:
        if sc.residue == 0:
            return psi + 2 if sc.p > 1 else psi
        if sc.residue == 1:
            return psi + 2 if sc.p > 0 else psi
        return psi + 2 * (1 - sc.mu_p) if sc.p > 0 else psi
    if sc.residue == 0:
        return psi + 2 * (sc.p // 4)
    if sc.residue == 1:
        return psi + 2 * ((sc.p + 1) // 4)
    slack = 2 * ((sc.p + 2) // 4)
    lam = 1 if sc.r_hat == 1 else 0
    return psi + slack - lam


def capacity_midpoint(n: int) -> Fraction:
    """Halfway between the constructive count and the upper bound."""
    return Fraction(diamond_capacity(n) + upper_capacity(n), 2)


# ---------------------------------------------------------------------------
# ridge flattening (configuration level, odd sizes)
# ---------------------------------------------------------------------------

class RidgeFlatteningInapplicable(ValueError):
    pass


def ridge_flattening_applicable(n: int) -> bool:
    """True when each wedge ends in a two-domino tip that can be laid flat."""
    if n % 2 == 0:
        return False
    sc = classify(n)
    if sc.mu_p != 0:
        return False
    if sc.residue == 0:
        return sc.p > 1
    return sc.p > 0


def flatten_ridges(config: Configuration) -> Configuration:
    """Rotate the two tip dominoes of every wedge flat against the slope.

    Keeps the domino count and validity, and frees exactly one extra
    lacunar void per wedge.  Only defined on the deterministic packing of
    an odd-size diamond whose wedge tips hold two dominoes (p even).
    """
    shape = config.shape
    if shape.kind != DIAMOND:
        raise RidgeFlatteningInapplicable("ridge flattening acts on diamonds")
    n = shape.n
    if not ridge_flattening_applicable(n):
        raise RidgeFlatteningInapplicable(
            f"size {n}: no two-domino wedge tip to flatten"
        )
    reference = build_diamond(n)
    if frozenset(config.dominos) != frozenset(reference.dominos):
        raise RidgeFlatteningInapplicable(
            "ridge flattening is defined on the deterministic packing"
        )
    return build_diamond(n, flatten_tips=True)


# ---------------------------------------------------------------------------
# reporting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundsReport:
    n: int
    label: str
    core_side: int | None
    core_capacity: int | None
    wedge: int | None          # odd sizes
    wedge_inner: int | None    # even sizes (W')
    wedge_staircase: int | None
    psi: int
    psi_bar: int
    psi_tilde: Fraction


def bounds_report(n: int) -> BoundsReport:
    sc = classify(n)
    f = core_side(sc)
    core_cap = None if f is None else square_capacity(f)
    if sc.parity:
        wedge = wedge_capacity_odd(sc)
        inner = staircase = None
    else:
        wedge = None
        inner, staircase = wedge_capacity_even(sc)
    return BoundsReport(
        n=n,
        label=sc.label,
        core_side=f,
        core_capacity=core_cap,
        wedge=wedge,
        wedge_inner=inner,
        wedge_staircase=staircase,
        psi=diamond_capacity(n),
        psi_bar=upper_capacity(n),
        psi_tilde=capacity_midpoint(n),
    )


@dataclass(frozen=True)
class SeriesRow:
    n: int
    psi: int
    psi_bar: int
    psi_tilde: Fraction
    ratio_bound_to_n: Fraction | None     # psi_bar / n
    ratio_cells_to_bound: Fraction | None  # |D_n| / psi_bar


def series_rows(n_max: int) -> list[SeriesRow]:
    if n_max < 1:
        raise ValueError("the series needs n_max >= 1")
    rows = []
    for n in range(n_max + 1):
        psi = diamond_capacity(n)
        bar = upper_capacity(n)
        rows.append(
            SeriesRow(
                n=n,
                psi=psi,
                psi_bar=bar,
                psi_tilde=capacity_midpoint(n),
                ratio_bound_to_n=Fraction(bar, n) if n else None,
                ratio_cells_to_bound=(
                    Fraction(diamond_cardinality(n), bar) if bar else None
                ),
            )
        )
    return rows
