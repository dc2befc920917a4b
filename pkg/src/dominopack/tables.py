"""Capacity tables in CSV form, one per congruence class.

Cells that the published enumeration leaves undefined (the core of size 1
and the split-wedge column of size 4) are rendered as ``--``.  Output is
newline-terminated, comma-separated, and byte-stable; the test suite pins
every emitted cell against transcribed golden files.
"""

from __future__ import annotations

from .squares import square_capacity
from .diamonds import (
    classify,
    core_side,
    wedge_capacity_even,
    wedge_capacity_odd,
    diamond_capacity,
)
from .bounds import upper_capacity

SQUARE_ODD = "square-odd"
SQUARE_EVEN = "square-even"
DIAMOND_CLASSES = ("10", "11", "12", "00", "01", "02")
TABLE_IDS = (SQUARE_ODD, SQUARE_EVEN) + DIAMOND_CLASSES

_DEFAULT_MAX_N = {
    "10": 199,
    "11": 201,
    "12": 203,
    "00": 198,
    "01": 200,
    "02": 202,
    SQUARE_ODD: 103,
    SQUARE_EVEN: 102,
}


def default_max_n(table_id: str) -> int:
    return _DEFAULT_MAX_N[table_id]


def _cell(value) -> str:
    return "--" if value is None else str(value)


def _diamond_rows(table_id: str, n_max: int) -> list[list[str]]:
    parity = int(table_id[0])
    residue = int(table_id[1])
    rows = []
    p = 0
    while True:
        n = 2 * (3 * p + residue) + parity
        if n > n_max:
            break
        sc = classify(n)
        f = core_side(sc)
        xi_f = None if f is None else square_capacity(f)
        lead = [str(n), str(sc.m), str(p)]
        if parity:
            body = [
                str(sc.mu_p),
                _cell(f),
                _cell(xi_f),
                str(wedge_capacity_odd(sc)),
            ]
        else:
            w1, w2 = wedge_capacity_even(sc)
            body = [
                _cell(sc.r_hat),
                _cell(f),
                _cell(xi_f),
                _cell(w1),
                str(w2),
            ]
        rows.append(lead + body + [str(diamond_capacity(n)), str(upper_capacity(n))])
        p += 1
    return rows


def _square_rows(table_id: str, n_max: int) -> list[list[str]]:
    parity = 1 if table_id == SQUARE_ODD else 0
    rows = []
    p = 0
    while True:
        n_first = 6 * p + parity
        if n_first > n_max:
            break
        row = [str(p)]
        for residue in (0, 1, 2):
            m = 3 * p + residue
            n = 2 * m + parity
            row += [str(m), str(n), str(square_capacity(n))]
        rows.append(row)
        p += 1
    return rows


def table_header(table_id: str) -> list[str]:
    if table_id in (SQUARE_ODD, SQUARE_EVEN):
        a, b, c = ("10", "11", "12") if table_id == SQUARE_ODD else ("00", "01", "02")
        return ["p"] + [
            col for cls in (a, b, c) for col in (f"m_{cls}", f"n_{cls}", f"xi_{cls}")
        ]
    if table_id in ("10", "11", "12"):
        return ["n", "m", "p", "mu", "f", "xi_f", "W", "psi", "psi_bar"]
    if table_id in ("00", "01", "02"):
        return ["n", "m", "p", "r", "f", "xi_f", "W1", "W2", "psi", "psi_bar"]
    raise ValueError(f"unknown table id {table_id!r}")


def table_rows(table_id: str, n_max: int | None = None) -> list[list[str]]:
    if table_id not in TABLE_IDS:
        raise ValueError(f"unknown table id {table_id!r}")
    n_max = default_max_n(table_id) if n_max is None else n_max
    if table_id in (SQUARE_ODD, SQUARE_EVEN):
        return _square_rows(table_id, n_max)
    return _diamond_rows(table_id, n_max)


def emit_table(table_id: str, n_max: int | None = None) -> str:
    lines = [",".join(table_header(table_id))]
    lines += [",".join(row) for row in table_rows(table_id, n_max)]
    return "\n".join(lines) + "\n"
