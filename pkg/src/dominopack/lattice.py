"""Cellular shapes: square fields and diamonds.

A shape of size n lives inside an (n+2) x (n+2) square field: the nominal
n x n interior plus a one-cell border that hulls may spill into.  The
diamond of size n is the pi/4-rotated square inscribed in that field.  For
odd n it is a von Neumann ball with a single center cell (cell centers on
integer coordinates); for even n it is an Aztec diamond with a 4-cell
center (cell centers on half-integer coordinates).

To keep both parities on one integer lattice, every cell stores *doubled*
coordinates: the cell centered at (x, y) is stored as (2x, 2y).  Odd-size
shapes use even doubled coordinates, even-size shapes odd ones; dx and dy
always share a parity.  Neighboring cells differ by 2 along an axis.

Three nested cell domains matter for packing:

* kernel domain  - where domino kernels may sit (the shape shrunk by 2),
* full shape     - the nominal shape itself,
* hull domain    - everything a hull may touch: the square field clipped
                   against the diamond grown by 2 (its four tips fall
                   outside the field and are truncated).
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable, NamedTuple

SQUARE = "square"
DIAMOND = "diamond"


class Cell(NamedTuple):
    """Lattice cell in doubled coordinates (dx = 2x, dy = 2y)."""

    dx: int
    dy: int


class Shape(NamedTuple):
    kind: str  # SQUARE or DIAMOND
    n: int


class DomainRole(Enum):
    KERNEL_DOMAIN = "kernel"
    FULL_SHAPE = "shape"
    HULL_DOMAIN = "hull"


def diamond_span(n: int) -> int:
    """Doubled radius of the diamond of size n: cells satisfy |dx|+|dy| <= span."""
    return n + 1 if n % 2 else n + 2


def _axis_values(n: int) -> range:
    # doubled coordinates of the n+2 columns (or rows) of the square field
    return range(-(n + 1), n + 2, 2)


@lru_cache(maxsize=None)
def square_cells(n: int) -> frozenset[Cell]:
    if n < 0:
        return frozenset()
    return frozenset(Cell(dx, dy) for dx in _axis_values(n) for dy in _axis_values(n))


@lru_cache(maxsize=None)
def diamond_cells(n: int) -> frozenset[Cell]:
    if n < 0:
        return frozenset()
    span = diamond_span(n)
    # even sizes live on the odd doubled sublattice, odd sizes on the even one
    start = -span if span % 2 == (n + 1) % 2 else -span + 1
    out = []
    for dx in range(start, span + 1, 2):
        rest = span - abs(dx)
        for dy in range(-rest, rest + 1, 2):
            out.append(Cell(dx, dy))
    return frozenset(out)


def diamond_cardinality(n: int) -> int:
    if n < 0:
        return 0
    if n % 2:
        return (n * n + 4 * n + 5) // 2
    return (n * n + 6 * n + 8) // 2


def cardinality_delta(n: int) -> int:
    """Cell-count growth from size n-1 to n: 1 when n is odd, 2n+3 when even."""
    if n < 1:
        raise ValueError("delta needs n >= 1")
    return 1 if n % 2 else 2 * n + 3


def hull_domain_size(n: int) -> int:
    """Cells reachable by hulls over the diamond of size n (tipless grown diamond)."""
    if n < 0:
        return 0
    if n % 2:
        r = (n + 1) // 2
        return 2 * r * r + 6 * r + 1
    r = (n + 2) // 2
    return 2 * r * r + 6 * r - 4


@lru_cache(maxsize=None)
def shape_cells(shape: Shape) -> frozenset[Cell]:
    if shape.kind == SQUARE:
        return square_cells(shape.n)
    if shape.kind == DIAMOND:
        return diamond_cells(shape.n)
    raise ValueError(f"unknown shape kind: {shape.kind!r}")


@lru_cache(maxsize=None)
def kernel_domain(shape: Shape) -> frozenset[Cell]:
    n = shape.n
    if shape.kind == SQUARE:
        if n < 1:
            return frozenset()
        return frozenset(
            Cell(dx, dy)
            for dx in range(-(n - 1), n, 2)
            for dy in range(-(n - 1), n, 2)
        )
    if shape.kind == DIAMOND:
        return diamond_cells(n - 2)
    raise ValueError(f"unknown shape kind: {shape.kind!r}")


@lru_cache(maxsize=None)
def hull_domain(shape: Shape) -> frozenset[Cell]:
    n = shape.n
    if shape.kind == SQUARE:
        return square_cells(n)
    if shape.kind == DIAMOND:
        bound = n + 1
        span = diamond_span(n) + 2
        out = []
        for dx in range(-bound, bound + 1, 2):
            rest = min(bound, span - abs(dx))
            for dy in range(-rest, rest + 1, 2):
                out.append(Cell(dx, dy))
        return frozenset(out)
    raise ValueError(f"unknown shape kind: {shape.kind!r}")


def contains(shape: Shape, role: DomainRole, cell: Cell) -> bool:
    if role is DomainRole.KERNEL_DOMAIN:
        return cell in kernel_domain(shape)
    if role is DomainRole.FULL_SHAPE:
        return cell in shape_cells(shape)
    return cell in hull_domain(shape)


# ---------------------------------------------------------------------------
# grid indexing and symmetries
# ---------------------------------------------------------------------------

def grid_to_cell(n: int, row: int, col: int) -> Cell:
    """Map (row, col) of the (n+2) x (n+2) field grid to a cell.

    Row 0 is the topmost border row, column 0 the leftmost border column.
    """
    return Cell(2 * col - (n + 1), (n + 1) - 2 * row)


def cell_to_grid(n: int, cell: Cell) -> tuple[int, int]:
    row, rem_r = divmod((n + 1) - cell.dy, 2)
    col, rem_c = divmod(cell.dx + n + 1, 2)
    if rem_r or rem_c:
        raise ValueError(f"cell {cell} is not on the size-{n} field lattice")
    return row, col


def rotate_cw(cell: Cell) -> Cell:
    """Quarter turn, clockwise, about the shape center."""
    return Cell(cell.dy, -cell.dx)


# the 8 symmetries of a centered square or diamond, as 2x2 integer matrices
_SYMMETRY_MATRICES: tuple[tuple[int, int, int, int], ...] = (
    (1, 0, 0, 1),
    (0, 1, -1, 0),
    (-1, 0, 0, -1),
    (0, -1, 1, 0),
    (-1, 0, 0, 1),
    (1, 0, 0, -1),
    (0, 1, 1, 0),
    (0, -1, -1, 0),
)


def symmetry_maps() -> tuple[Callable[[Cell], Cell], ...]:
    """The dihedral symmetry group shared by centered squares and diamonds."""

    def make(m: tuple[int, int, int, int]) -> Callable[[Cell], Cell]:
        a, b, c, d = m
        return lambda cell: Cell(a * cell.dx + b * cell.dy, c * cell.dx + d * cell.dy)

    return tuple(make(m) for m in _SYMMETRY_MATRICES)


def transform_cells(cells: Iterable[Cell], fn: Callable[[Cell], Cell]) -> frozenset[Cell]:
    return frozenset(fn(c) for c in cells)
