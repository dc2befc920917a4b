"""Capacity formulas and constructions for dominoes packed in diamonds.

Sizes fall into six congruence classes indexed by (n mod 2, m mod 3) with
m = n // 2; all formulas below are driven by p = m // 3 and small
residues.  The packing itself is always a centered square core wrapped by
four rotation-symmetric triangular wedges:

* odd n   - wedges hold rows of vertical dominoes (perpendicular to the
            adjacent core side), rows stacked three cells apart, each row
            packed at the two-cell horizontal pitch.  Row j (counting from
            the core) holds h - 3j + 2 dominoes, where h is the wedge
            height; the total is the wedge capacity W.
* even n  - wedges hold rows of horizontal dominoes (parallel to the
            adjacent core side) at the three-cell pitch, rows two cells
            apart, every row filled left-aligned to its maximum.  The
            resulting count splits as W' (inner triangular block) plus W''
            (outer staircase block) in the closed forms below.

One corner case: in the (0,2) class at r = 3 the fully packed base row
would touch the neighboring wedge's kernels, so its last horizontal
domino is placed vertically instead (same count, one cell narrower).

The core side f is chosen per class so that the wedge geometry is an
exact function of p.  Sizes n <= 5 have no core/wedge structure and use
six literal seed configurations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import DIAMOND, Cell, Shape, grid_to_cell
from .dominoes import (
    Configuration,
    Domino,
    HORIZONTAL,
    VERTICAL,
    rotate_domino_cw,
)
from .squares import square_capacity, square_placements

_ODD_SEEDS = {1: 0, 3: 1, 5: 2}
_EVEN_SEEDS = {0: 0, 2: 1, 4: 2}


@dataclass(frozen=True)
class SizeClass:
    """Modular bookkeeping for one diamond size."""

    n: int
    m: int
    p: int
    parity: int      # n mod 2
    residue: int     # m mod 3
    mu_p: int        # p mod 2 (odd classes)
    p_hat: int | None = None   # shifted p for even classes (p+1, p, p-1)
    q_hat: int | None = None   # p_hat // 4
    r_hat: int | None = None   # p_hat mod 4

    @property
    def label(self) -> str:
        return f"{self.parity}{self.residue}"


def classify(n: int) -> SizeClass:
    if n < 0:
        raise ValueError("size must be non-negative")
    m = n // 2
    p = m // 3
    parity = n % 2
    residue = m % 3
    mu_p = p % 2
    if parity:
        return SizeClass(n, m, p, parity, residue, mu_p)
    p_hat = p + 1 - residue
    if p_hat < 0:
        return SizeClass(n, m, p, parity, residue, mu_p, p_hat, None, None)
    q_hat, r_hat = divmod(p_hat, 4)
    return SizeClass(n, m, p, parity, residue, mu_p, p_hat, q_hat, r_hat)


def core_side(sc: SizeClass) -> int | None:
    """Side f of the square core; None when no core exists (size 1)."""
    if sc.parity:
        f = sc.m - 1 + sc.residue - sc.mu_p
        return f if f >= 0 else None
    if sc.r_hat is None:
        return 0  # size 4: two bare dominoes, degenerate empty core
    return sc.m + 1 - sc.r_hat


def wedge_capacity_odd(sc: SizeClass) -> int:
    if not sc.parity:
        raise ValueError("vertical-wedge capacity is defined for odd sizes")
    p, mu = sc.p, sc.mu_p
    return (p + mu) * (3 * p + 2 - mu) // 8


def _nearest_int_third(k: int) -> int:
    # round k/3 to the nearest integer (no half-way cases arise)
    return (2 * k + 3) // 6


def staircase_row_capacity(sc: SizeClass) -> int | None:
    """Dominoes per row of the outer staircase block (even classes)."""
    if sc.parity or sc.r_hat is None:
        return None
    return (sc.q_hat - 1) + _nearest_int_third(sc.r_hat + sc.residue)


def wedge_capacity_even(sc: SizeClass) -> tuple[int | None, int]:
    """(W', W'') for even sizes; W' is None in the degenerate size-4 case."""
    if sc.parity:
        raise ValueError("split-wedge capacities are defined for even sizes")
    if sc.r_hat is None:
        return None, 0
    k = sc.p - sc.q_hat
    w1 = k * (k + 1) // 2
    if sc.p <= 1:
        return w1, 0
    b2 = staircase_row_capacity(sc)
    w2 = b2 * ((k - 3) + (k - 3 * b2)) // 2
    return w1, w2


def diamond_capacity(n: int) -> int:
    """Dominoes placed by the deterministic construction (the lower bound)."""
    if n < 0:
        raise ValueError("size must be non-negative")
    if n <= 5:
        return _ODD_SEEDS[n] if n % 2 else _EVEN_SEEDS[n]
    sc = classify(n)
    if sc.parity:
        if sc.residue == 1:
            return (n - 3) * (n + 3) // 12
        return (n - 1) * (n + 1) // 12
    offsets = {
        0: (24, 0, 12, 24),
        1: (4, 16, 16, 4),
        2: (24, 12, 0, 24),
    }[sc.residue]
    return (n * n + 2 * n + offsets[sc.r_hat]) // 12


def capacity_by_parts(n: int) -> int:
    """Core capacity plus four wedge capacities; agrees with diamond_capacity."""
    sc = classify(n)
    f = core_side(sc)
    if f is None:
        return 0
    core = square_capacity(f)
    if sc.parity:
        return core + 4 * wedge_capacity_odd(sc)
    w1, w2 = wedge_capacity_even(sc)
    return core + 4 * ((w1 or 0) + w2)


def recurrence_applicable(n: int) -> bool:
    sc = classify(n)
    if sc.parity:
        if n < 7:
            return False
        return not (sc.residue == 1 and sc.p < 2)
    if sc.residue == 2:
        return sc.p > 4
    return sc.p >= 4


def diamond_recurrence_check(n: int) -> bool | None:
    """Growth step check; None when the size is below the rule's range.

    Odd sizes grow by n - 3 over a six-step; even sizes by 4(n - 11) over
    a twenty-four-step.
    """
    if not recurrence_applicable(n):
        return None
    if n % 2:
        return diamond_capacity(n) - diamond_capacity(n - 6) == n - 3
    return diamond_capacity(n) == diamond_capacity(n - 24) + 4 * (n - 11)


# ---------------------------------------------------------------------------
# expansion ledger (even classes): how one p step splits across regions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExpansionLedger:
    delta_core: int
    delta_inner_x4: int      # 4 * (W' step)
    delta_staircase_x4: int  # 4 * (W'' step)
    delta_total: int         # capacity step over six sizes


def expansion_ledger(n: int) -> ExpansionLedger | None:
    """Region-by-region capacity growth for even sizes; None for odd or p = 0."""
    sc = classify(n)
    if sc.parity or sc.r_hat is None or sc.p < 1:
        return None
    p, q, r = sc.p, sc.q_hat, sc.r_hat
    spread = 4 * (p - q)
    if sc.residue == 0:
        rows = {
            0: (6 * p - 2, 0, 0, n - 2),
            1: (2 * p, spread, 4 * (q - 1), n - 4),
            2: (2 * p - 1, spread, 4 * q, n - 1),
            3: (2 * p - 1, spread, 4 * q, n - 1),
        }
    elif sc.residue == 1:
        rows = {
            0: (6 * p, 0, 0, n - 2),
            1: (2 * p + 1, spread, 4 * q, n - 1),
            2: (2 * p, spread, 4 * q, n - 2),
            3: (2 * p - 1, spread, 4 * q, n - 3),
        }
    else:
        rows = {
            0: (6 * p + 2, 0, 0, n - 2),
            1: (2 * p + 1, spread, 4 * q, n - 3),
            2: (2 * p + 1, spread, 4 * q, n - 3),
            3: (2 * p, spread, 4 * (q + 1), n),
        }
    return ExpansionLedger(*rows[r])


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

_SEED_PLACEMENTS: dict[int, tuple[tuple[int, int, str], ...]] = {
    0: (),
    1: (),
    2: ((-1, 1, HORIZONTAL),),
    3: ((0, 0, VERTICAL),),
    4: ((-1, 1, HORIZONTAL), (-1, -3, HORIZONTAL)),
    5: ((0, 2, VERTICAL), (0, -4, VERTICAL)),
}


def wedge_height(sc: SizeClass) -> int | None:
    f = core_side(sc)
    if f is None:
        return None
    return (sc.n - f - 2) // 2


@dataclass(frozen=True)
class WedgeSpec:
    """Median and baserow bookkeeping for one wedge."""

    height: int                 # cells in the median column
    median_capacity: int        # domino rows stacked along the median
    baserow_length: int         # cells in the row adjacent to the core
    baserow_capacity: int       # dominoes in that row
    inner_row_capacity: int | None = None      # even sizes: inner-block share
    staircase_row_capacity: int | None = None  # even sizes: staircase share


def wedge_spec(sc: SizeClass) -> WedgeSpec:
    if sc.p < 1:
        raise ValueError("wedge structure needs p >= 1")
    h = wedge_height(sc)
    if sc.parity:
        return WedgeSpec(
            height=h,
            median_capacity=(sc.p + sc.mu_p) // 2,
            baserow_length=2 * h - 1,
            baserow_capacity=h - 1,
        )
    inner = sc.p - sc.q_hat
    stair = staircase_row_capacity(sc)
    return WedgeSpec(
        height=h,
        median_capacity=inner,
        baserow_length=2 * h,
        baserow_capacity=inner + stair,
        inner_row_capacity=inner,
        staircase_row_capacity=stair,
    )


def _north_wedge_odd(sc: SizeClass, flatten_tips: bool) -> list[Domino]:
    f = core_side(sc)
    h = wedge_height(sc)
    rows = (sc.p + sc.mu_p) // 2
    border = f + 1
    out: list[Domino] = []
    for j in range(1, rows + 1):
        count = h - 3 * j + 2
        dy = border + 2 * (3 * j - 2)
        left = -2 * (h - 3 * j + 1)
        if flatten_tips and j == rows:
            # tip flattening: lay the two tip dominoes down, freeing the row
            # of cells above them (one new void per wedge inside the domain)
            out.append(Domino(Cell(-4, dy), HORIZONTAL))
            out.append(Domino(Cell(2, dy), HORIZONTAL))
            continue
        for t in range(count):
            out.append(Domino(Cell(left + 4 * t, dy), VERTICAL))
    return out


def _north_wedge_even(sc: SizeClass) -> list[Domino]:
    f = core_side(sc)
    h = wedge_height(sc)
    border = f + 1
    twist = sc.residue == 2 and sc.r_hat == 3
    out: list[Domino] = []
    for j in range(1, h + 1, 2):
        width = 2 * h - 2 * j + 2
        count = (width + 1) // 3
        left = -(2 * h - 2 * j + 1)
        dy = border + 2 * j
        for t in range(count):
            dx = left + 6 * t
            if twist and j == 1 and t == count - 1:
                # last base-row domino turned upright to clear the east wedge
                out.append(Domino(Cell(dx, dy), VERTICAL))
            else:
                out.append(Domino(Cell(dx, dy), HORIZONTAL))
    return out


def north_wedge(sc: SizeClass, flatten_tips: bool = False) -> list[Domino]:
    if sc.parity:
        return _north_wedge_odd(sc, flatten_tips)
    return _north_wedge_even(sc)


def _core_dominoes(f: int) -> list[Domino]:
    out = []
    for orient, r, c in square_placements(f):
        if orient == HORIZONTAL:
            out.append(Domino(grid_to_cell(f, r, c), HORIZONTAL))
        else:
            out.append(Domino(grid_to_cell(f, r + 1, c), VERTICAL))
    return out


def build_diamond(n: int, flatten_tips: bool = False) -> Configuration:
    """The deterministic packing of the size-n diamond: core plus four wedges.

    Dominoes are emitted core first (outermost crown inward), then the
    north, east, south and west wedges, each row by row from the core
    outward and left to right.
    """
    shape = Shape(DIAMOND, n)
    if n <= 5:
        if flatten_tips:
            raise ValueError("tip flattening needs a structured wedge (n > 5)")
        dominos = tuple(
            Domino(Cell(dx, dy), o) for dx, dy, o in _SEED_PLACEMENTS[n]
        )
        return Configuration(shape, dominos)
    sc = classify(n)
    dominos = _core_dominoes(core_side(sc))
    wedge = north_wedge(sc, flatten_tips)
    for _ in range(4):
        dominos.extend(wedge)
        wedge = [rotate_domino_cw(d) for d in wedge]
    return Configuration(shape, tuple(dominos))


def wedge_tip_rows(sc: SizeClass) -> int:
    """Number of vertical-domino rows in an odd wedge (h-bar)."""
    if not sc.parity:
        raise ValueError("row count is defined for odd sizes")
    return (sc.p + sc.mu_p) // 2


# ---------------------------------------------------------------------------
# alternate formula routes, kept for cross-checking
# ---------------------------------------------------------------------------

def odd_capacity_split(sc: SizeClass) -> int:
    """Odd capacity assembled from the parity-split core and wedge values."""
    if not sc.parity:
        raise ValueError("odd sizes only")
    p, mu, m = sc.p, sc.mu_p, sc.m
    if mu == 0:
        core6 = {0: m * m, 1: (m - 1) * (m + 3), 2: m * (m + 4)}[sc.residue]
        wedge2 = p * (3 * p + 2)
    else:
        core6 = {
            0: (m - 3) * (m + 1),
            1: (m - 2) * (m + 2),
            2: (m + 1) ** 2,
        }[sc.residue]
        wedge2 = (p + 1) * (3 * p + 1)
    return _exact_div(core6, 6) + _exact_div(wedge2, 2)


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def even_inner_scaled_piecewise(sc: SizeClass) -> int:
    """4 W' from the per-class case formulas (cross-check route)."""
    if sc.parity or sc.r_hat is None:
        raise ValueError("defined for structured even sizes")
    p = sc.p
    base = {0: 3 * p - 1, 1: 3 * p, 2: 3 * p + 1}[sc.residue] + sc.r_hat
    return _exact_div(base * (base + 4), 8)


def even_staircase_scaled_piecewise(sc: SizeClass) -> int:
    """4 W'' from the per-class case formulas (cross-check route)."""
    if sc.parity or sc.r_hat is None:
        raise ValueError("defined for structured even sizes")
    p = sc.p
    if sc.p <= 1:
        return 0
    if sc.residue == 0:
        table = {
            0: (p - 3) * (3 * p - 5),
            1: (p - 4) * (3 * p),
            2: (p - 1) * (3 * p - 7),
            3: (p - 2) * (3 * p - 2),
        }
    elif sc.residue == 1:
        table = {
            0: 3 * p * (p - 4),
            1: (p - 1) * (3 * p - 7),
            2: (p - 2) * (3 * p - 2),
            3: (p - 3) * (3 * p + 3),
        }
    else:
        table = {
            0: (p - 1) * (3 * p - 7),
            1: (p - 2) * (3 * p - 2),
            2: (p - 3) * (3 * p + 3),
            3: p * (3 * p - 4),
        }
    return _exact_div(table[sc.r_hat], 8)
