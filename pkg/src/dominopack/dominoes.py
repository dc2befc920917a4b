"""Dominoes with a hard 2-cell kernel and a soft 10-cell hull.

A domino is the union of the two Moore neighborhoods around a pair of
adjacent kernel cells: a 4 x 3 footprint of 12 cells.  Kernels repel every
other domino's hull (no hull may cover a kernel cell), while hulls of
distinct dominoes are free to overlap.  Each covered cell carries a cover
level v in 1..4; per-domino density is measured by

* the overlap index   nu  = 2 + sum of v over the 10 hull cells,
* the occupancy index rho = 2 + sum of 1/v over the 10 hull cells.

Cover levels never exceed 4, so every 1/v is a multiple of 1/12 and rho is
kept exact: internally as integer twelfths, externally as a Fraction.
Summing rho over a population and adding the count of uncovered cells
(lacunar voids) recovers the hull-domain area exactly, whatever the
population; ``occupancy_identity_holds`` checks that bookkeeping.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from .lattice import (
    DIAMOND,
    Cell,
    Shape,
    hull_domain,
    kernel_domain,
)

HORIZONTAL = "H"
VERTICAL = "V"

# doubled-coordinate kernel steps and footprint/hull offset tables; hot loops
# below work on bare (dx, dy) tuples, which hash and compare equal to Cell
_STEP = {HORIZONTAL: (2, 0), VERTICAL: (0, 2)}
_FOOT_OFFSETS = {
    HORIZONTAL: tuple((ox, oy) for ox in (-2, 0, 2, 4) for oy in (-2, 0, 2)),
    VERTICAL: tuple((ox, oy) for ox in (-2, 0, 2) for oy in (-2, 0, 2, 4)),
}
_HULL_OFFSETS = {
    o: tuple(off for off in offs if off not in ((0, 0), _STEP[o]))
    for o, offs in _FOOT_OFFSETS.items()
}


class Domino(NamedTuple):
    anchor: Cell  # first kernel cell; the second sits one step east (H) or north (V)
    orient: str


def domino(dx: int, dy: int, orient: str) -> Domino:
    if orient not in _STEP:
        raise ValueError(f"orientation must be 'H' or 'V', got {orient!r}")
    return Domino(Cell(dx, dy), orient)


def kernel_cells(d: Domino) -> tuple[Cell, Cell]:
    sx, sy = _STEP[d.orient]
    return d.anchor, Cell(d.anchor.dx + sx, d.anchor.dy + sy)


def footprint_cells(d: Domino) -> tuple[Cell, ...]:
    ax, ay = d.anchor
    if d.orient == HORIZONTAL:
        xs = (ax - 2, ax, ax + 2, ax + 4)
        ys = (ay - 2, ay, ay + 2)
    else:
        xs = (ax - 2, ax, ax + 2)
        ys = (ay - 2, ay, ay + 2, ay + 4)
    return tuple(Cell(x, y) for x in xs for y in ys)


def hull_cells(d: Domino) -> tuple[Cell, ...]:
    kernel = set(kernel_cells(d))
    return tuple(c for c in footprint_cells(d) if c not in kernel)


def is_compatible(d1: Domino, d2: Domino) -> bool:
    """Exclusion test: kernels disjoint and neither hull covers the other kernel."""
    if d1 == d2:
        raise ValueError("exclusion test needs two distinct dominoes")
    k1 = set(kernel_cells(d1))
    k2 = set(kernel_cells(d2))
    if k1 & k2:
        return False
    f1 = set(footprint_cells(d1))
    if f1 & k2:
        return False
    f2 = set(footprint_cells(d2))
    return not (f2 & k1)


def rotate_domino_cw(d: Domino) -> Domino:
    a, b = kernel_cells(d)
    ra = Cell(a.dy, -a.dx)
    rb = Cell(b.dy, -b.dx)
    if ra.dy == rb.dy:
        anchor = ra if ra.dx < rb.dx else rb
        return Domino(anchor, HORIZONTAL)
    anchor = ra if ra.dy < rb.dy else rb
    return Domino(anchor, VERTICAL)


def transform_domino(d: Domino, fn) -> Domino:
    a, b = (fn(c) for c in kernel_cells(d))
    if a.dy == b.dy:
        return Domino(a if a.dx < b.dx else b, HORIZONTAL)
    return Domino(a if a.dy < b.dy else b, VERTICAL)


# ---------------------------------------------------------------------------
# configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Configuration:
    shape: Shape
    dominos: tuple[Domino, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dominos", tuple(self.dominos))


@dataclass(frozen=True)
class Violation:
    kind: str  # "kernel_outside_domain" | "kernel_overlap" | "exclusion"
    dominoes: tuple[int, ...]  # indices into Configuration.dominos
    cell: Cell

    def __str__(self) -> str:
        which = ",".join(str(i) for i in self.dominoes)
        return f"{self.kind} at {tuple(self.cell)} (domino {which})"


class InvalidConfiguration(ValueError):
    def __init__(self, violations: list[Violation]):
        super().__init__("; ".join(str(v) for v in violations[:5]))
        self.violations = violations


def validate(config: Configuration) -> list[Violation]:
    """All exclusion-rule and domain violations; empty list means valid."""
    domain = kernel_domain(config.shape)
    violations: list[Violation] = []
    owner: dict[tuple[int, int], int] = {}
    for i, d in enumerate(config.dominos):
        (ax, ay), orient = d
        sx, sy = _STEP[orient]
        for cell in ((ax, ay), (ax + sx, ay + sy)):
            if cell not in domain:
                violations.append(Violation("kernel_outside_domain", (i,), Cell(*cell)))
            j = owner.get(cell)
            if j is None:
                owner[cell] = i
            else:
                violations.append(Violation("kernel_overlap", (j, i), Cell(*cell)))
    for i, d in enumerate(config.dominos):
        (ax, ay), orient = d
        for ox, oy in _HULL_OFFSETS[orient]:
            cell = (ax + ox, ay + oy)
            j = owner.get(cell)
            if j is not None and j != i:
                # hull of i covers a kernel cell of j
                violations.append(Violation("exclusion", (i, j), Cell(*cell)))
    return violations


def _cover_counts(config: Configuration) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for d in config.dominos:
        (ax, ay), orient = d
        for ox, oy in _FOOT_OFFSETS[orient]:
            cell = (ax + ox, ay + oy)
            counts[cell] = counts.get(cell, 0) + 1
    return counts


@lru_cache(maxsize=64)
def _checked_cover(config: Configuration) -> dict[Cell, int]:
    bad = validate(config)
    if bad:
        raise InvalidConfiguration(bad)
    return _cover_counts(config)


def cover_grid(config: Configuration) -> dict[Cell, int]:
    """Cover level of every hull-domain cell (0 for lacunar voids).

    Raises InvalidConfiguration when the exclusion rule is broken.
    """
    counts = _checked_cover(config)
    return {cell: counts.get(cell, 0) for cell in hull_domain(config.shape)}


def _require_member(config: Configuration, d: Domino) -> None:
    if d not in config.dominos:
        raise ValueError(f"domino {d} is not part of the configuration")


def overlap_index(config: Configuration, d: Domino) -> int:
    _require_member(config, d)
    counts = _checked_cover(config)
    (ax, ay), orient = d
    return 2 + sum(counts[ax + ox, ay + oy] for ox, oy in _HULL_OFFSETS[orient])


def occupancy_index(config: Configuration, d: Domino) -> Fraction:
    _require_member(config, d)
    counts = _checked_cover(config)
    (ax, ay), orient = d
    twelfths = sum(12 // counts[ax + ox, ay + oy] for ox, oy in _HULL_OFFSETS[orient])
    return 2 + Fraction(twelfths, 12)


def density_metrics(config: Configuration) -> list[tuple[int, Fraction]]:
    """(nu, rho) for every domino, in placement order."""
    counts = _checked_cover(config)
    out = []
    for d in config.dominos:
        (ax, ay), orient = d
        nu = 2
        twelfths = 0
        for ox, oy in _HULL_OFFSETS[orient]:
            v = counts[ax + ox, ay + oy]
            nu += v
            twelfths += 12 // v
        out.append((nu, 2 + Fraction(twelfths, 12)))
    return out


def lacunar_voids(config: Configuration) -> int:
    counts = _checked_cover(config)
    domain = hull_domain(config.shape)
    covered = sum(1 for cell in counts if cell in domain)
    if covered != len(counts):
        # footprint escaped the hull domain; with kernels in the kernel
        # domain this cannot happen, so treat it as a hard error
        stray = next(cell for cell in counts if cell not in domain)
        raise ValueError(f"footprint cell {tuple(stray)} outside the hull domain")
    return len(domain) - covered


def occupancy_total(config: Configuration) -> Fraction:
    counts = _checked_cover(config)
    total = 24 * len(config.dominos)
    for d in config.dominos:
        (ax, ay), orient = d
        for ox, oy in _HULL_OFFSETS[orient]:
            total += 12 // counts[ax + ox, ay + oy]
    return Fraction(total, 12)


def occupancy_identity_holds(config: Configuration) -> bool:
    """Exact check: total occupancy plus voids equals the hull-domain area."""
    area = len(hull_domain(config.shape))
    return occupancy_total(config) + lacunar_voids(config) == area


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

def to_json(config: Configuration) -> str:
    payload = {
        "shape": {"kind": config.shape.kind, "n": config.shape.n},
        "dominos": [
            {"x": d.anchor.dx, "y": d.anchor.dy, "orient": d.orient}
            for d in config.dominos
        ],
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def from_json(text: str) -> Configuration:
    payload = json.loads(text)
    shape = Shape(payload["shape"]["kind"], int(payload["shape"]["n"]))
    if shape.kind not in (DIAMOND, "square"):
        raise ValueError(f"unknown shape kind {shape.kind!r}")
    dominos = tuple(
        domino(int(e["x"]), int(e["y"]), str(e["orient"])) for e in payload["dominos"]
    )
    return Configuration(shape, dominos)


def rotate_configuration_cw(config: Configuration) -> Configuration:
    return Configuration(
        config.shape, tuple(rotate_domino_cw(d) for d in config.dominos)
    )


def dominoes_as_set(dominos: Iterable[Domino]) -> frozenset[Domino]:
    return frozenset(dominos)
