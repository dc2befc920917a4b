"""Capacity and construction for dominoes packed in a square field.

The capacity xi(n) of the size-n square obeys xi(n) = xi(n-6) + 2(n-2):
stripping a three-cell-thick ring (a "crown") from the field removes
exactly 2(n-2) dominoes.  Six seed motifs (n = 0..5) plus that crown
recursion produce a valid packing achieving xi(n) for every n.

Crown layout.  Kernels of crown dominoes live in the two cell rows nearest
each edge, so a crown never interferes with anything placed deeper inside:
its hulls reach exactly one cell past its own band, onto the border ring
of the next inner square, where no kernels ever sit.  Each side carries a
ladder of dominoes lying flat against the edge (horizontal along the west
and east edges, vertical along the north and south), spaced two cells
apart.  Even n: four ladders of (n-2)/2 dominoes, one per side, rotated
copies of each other.  Odd n: the west/east ladders hold (n-1)/2, the
north/south ladders (n-5)/2, and one extra domino tucks into each of the
north-east and south-west corners, which restores the 2(n-2) total.

Placements below are written on the field grid (row 0 = top border row);
``build_square`` converts them to centered cells.  An ("H", r, c) entry
anchors a horizontal kernel at grid (r, c)-(r, c+1); ("V", r, c) anchors a
vertical kernel at (r, c)-(r+1, c).
"""

from __future__ import annotations

from functools import lru_cache

from .lattice import SQUARE, Shape, grid_to_cell
from .dominoes import Configuration, Domino, HORIZONTAL, VERTICAL

Placement = tuple[str, int, int]

_SEEDS = (0, 0, 1, 2, 4, 6)

# hand-placed motifs for n <= 5, one list per size
_BASE_MOTIFS: dict[int, list[Placement]] = {
    0: [],
    1: [],
    2: [("H", 1, 1)],
    3: [("V", 2, 1), ("V", 2, 3)],
    4: [("H", 1, 1), ("V", 1, 4), ("H", 4, 3), ("V", 3, 1)],
    5: [
        ("V", 1, 1), ("V", 1, 3), ("V", 1, 5),
        ("V", 4, 1), ("V", 4, 3), ("V", 4, 5),
    ],
}


def square_capacity(n: int) -> int:
    """Dominoes packed in the size-n square field (xi)."""
    if n < 0:
        raise ValueError("size must be non-negative")
    if n <= 5:
        return _SEEDS[n]
    m = n // 2
    if n % 2:
        if m % 3 == 2:
            return (n + 1) ** 2 // 6
        return (n - 1) * (n + 3) // 6
    if m % 3 == 1:
        return (n * (n + 2) - 2) // 6
    return n * (n + 2) // 6


def capacity_recurrence_holds(n: int) -> bool:
    """Crown step check: xi(n) - xi(n-6) == 2(n-2)."""
    if n < 6:
        raise ValueError("the crown recurrence starts at n = 6")
    return square_capacity(n) - square_capacity(n - 6) == 2 * (n - 2)


def _crown_placements(n: int) -> list[Placement]:
    out: list[Placement] = []
    if n % 2 == 0:
        out += [("H", r, 1) for r in range(1, n - 2, 2)]          # west ladder
        out += [("V", 1, c) for c in range(n, 3, -2)]             # north ladder
        out += [("H", r, n - 1) for r in range(n, 3, -2)]         # east ladder
        out += [("V", n - 1, c) for c in range(1, n - 2, 2)]      # south ladder
    else:
        out += [("H", r, 1) for r in range(1, n - 1, 2)]          # west ladder
        out += [("V", 1, c) for c in range(n - 3, 3, -2)]         # north ladder
        out.append(("H", 1, n - 1))                               # north-east corner
        out += [("H", r, n - 1) for r in range(n, 2, -2)]         # east ladder
        out += [("V", n - 1, c) for c in range(4, n - 2, 2)]      # south ladder
        out.append(("H", n, 1))                                   # south-west corner
    return out


@lru_cache(maxsize=None)
def square_placements(n: int) -> tuple[Placement, ...]:
    """Grid placements for the size-n packing, outermost crown first."""
    if n < 0:
        raise ValueError("size must be non-negative")
    if n <= 5:
        return tuple(_BASE_MOTIFS[n])
    inner = square_placements(n - 6)
    shifted = tuple((o, r + 3, c + 3) for (o, r, c) in inner)
    return tuple(_crown_placements(n)) + shifted


def _placement_to_domino(n: int, placement: Placement) -> Domino:
    orient, r, c = placement
    if orient == HORIZONTAL:
        return Domino(grid_to_cell(n, r, c), HORIZONTAL)
    # vertical kernels anchor at their lower cell, which is the larger grid row
    return Domino(grid_to_cell(n, r + 1, c), VERTICAL)


def build_square(n: int) -> Configuration:
    """A valid packing of the size-n square field with square_capacity(n) dominoes."""
    dominos = tuple(_placement_to_domino(n, p) for p in square_placements(n))
    return Configuration(Shape(SQUARE, n), dominos)
