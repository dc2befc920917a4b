"""Four reference overlap scenarios around a marked domino.

Each scenario places a small cluster on an oversized square field and
marks one central domino whose density indices summarize the coupling:

==============  ==========================  ====  ======
scenario        hull cover profile          nu    rho
==============  ==========================  ====  ======
spaced          ten cells at level 1        12    12
orthotropic     six at 2, four at 4         30    6
staggered       four at 2, six at 3         28    6
pinwheel        six at 2, four at 3         26    19/3
==============  ==========================  ====  ======

"spaced" is the loose physical-distancing pattern, "orthotropic" the
tight grid of aligned dominoes, "staggered" the same with alternate rows
shifted, and "pinwheel" the tight mixed-orientation packing that the
diamond cores use.
"""

from __future__ import annotations

from .lattice import SQUARE, Shape
from .dominoes import Configuration, Domino, domino

SCENARIO_NAMES = ("spaced", "orthotropic", "staggered", "pinwheel")


def _config(n: int, placements: list[tuple[int, int, str]], red: int) -> tuple[Configuration, Domino]:
    dominos = tuple(domino(dx, dy, o) for dx, dy, o in placements)
    return Configuration(Shape(SQUARE, n), dominos), dominos[red]


def _spaced() -> tuple[Configuration, Domino]:
    rows = [(-8, 0, "H"), (0, 0, "H"), (8, 0, "H")]
    return _config(11, rows, 1)


def _orthotropic() -> tuple[Configuration, Domino]:
    grid = [(6 * i, 4 * j, "H") for j in (1, 0, -1) for i in (-1, 0, 1)]
    return _config(11, grid, 4)


def _staggered() -> tuple[Configuration, Domino]:
    rows = [
        (-4, 4, "H"), (2, 4, "H"),
        (-6, 0, "H"), (0, 0, "H"), (6, 0, "H"),
        (-4, -4, "H"), (2, -4, "H"),
    ]
    return _config(11, rows, 3)


def _pinwheel() -> tuple[Configuration, Domino]:
    cluster = [
        (-5, 1, "H"),   # the marked domino
        (-5, 5, "H"),   # flat neighbor above
        (1, 3, "V"),    # upright neighbor right
        (-1, -5, "V"),  # upright below
        (-5, -5, "V"),  # upright below left
        (-9, -1, "V"),  # upright left
    ]
    return _config(14, cluster, 0)


def overlap_scenarios() -> dict[str, tuple[Configuration, Domino]]:
    """Scenario name -> (configuration, marked domino)."""
    return {
        "spaced": _spaced(),
        "orthotropic": _orthotropic(),
        "staggered": _staggered(),
        "pinwheel": _pinwheel(),
    }
