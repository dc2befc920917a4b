"""Acceptance gate: every shipped guarantee at its stated tolerance.

Each criterion prints exactly one line, ``criterion N PASS ...`` or
``criterion N FAIL ...`` (visible with ``pytest -s``), and fails the suite
on any miss.  Tolerances are zero except where a range is stated.
"""

import functools
import time
from fractions import Fraction
from pathlib import Path

from dominopack.bounds import flatten_ridges, upper_capacity
from dominopack.diamonds import (
    build_diamond,
    diamond_capacity,
    diamond_recurrence_check,
    recurrence_applicable,
)
from dominopack.dominoes import (
    lacunar_voids,
    occupancy_identity_holds,
    occupancy_index,
    occupancy_total,
    overlap_index,
    validate,
)
from dominopack.lattice import diamond_cardinality
from dominopack.oracle import SearchBudget, sandwich_check
from dominopack.scenarios import overlap_scenarios
from dominopack.squares import build_square, capacity_recurrence_holds, square_capacity
from dominopack.tables import TABLE_IDS, emit_table

FIXTURES = Path(__file__).parent / "fixtures"
SWEEP_MAX = 200

_sweep_cache: dict = {}


def criterion(number: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                print(f"criterion {number} FAIL {title}: {exc}")
                raise
            print(f"criterion {number} PASS {title}" + (f": {detail}" if detail else ""))

        return run

    return wrap


def _sweep():
    if not _sweep_cache:
        start = time.perf_counter()
        _sweep_cache["squares"] = {n: build_square(n) for n in range(SWEEP_MAX + 1)}
        _sweep_cache["diamonds"] = {n: build_diamond(n) for n in range(SWEEP_MAX + 1)}
        for family in ("squares", "diamonds"):
            for n, config in _sweep_cache[family].items():
                assert validate(config) == [], f"{family} n={n} invalid"
        _sweep_cache["elapsed"] = time.perf_counter() - start
    return _sweep_cache


@criterion(1, "capacity tables reproduce the transcribed golden files")
def test_criterion_1_tables():
    files = {
        "square-odd": "table_square_odd.csv",
        "square-even": "table_square_even.csv",
        "10": "table_class_10.csv",
        "11": "table_class_11.csv",
        "12": "table_class_12.csv",
        "00": "table_class_00.csv",
        "01": "table_class_01.csv",
        "02": "table_class_02.csv",
    }
    start = time.perf_counter()
    cells = 0
    for table_id in TABLE_IDS:
        emitted = emit_table(table_id)
        golden = (FIXTURES / files[table_id]).read_text()
        assert emitted == golden, f"table {table_id} drifted from the golden file"
        cells += sum(len(line.split(",")) for line in golden.splitlines()[1:])
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"table emission took {elapsed:.2f}s"
    return f"{cells} cells, {elapsed:.2f}s"


@criterion(2, "constructions hit the capacity formulas and validate cleanly")
def test_criterion_2_constructions():
    sweep = _sweep()
    for n, config in sweep["squares"].items():
        assert len(config.dominos) == square_capacity(n), f"square n={n}"
    for n, config in sweep["diamonds"].items():
        assert len(config.dominos) == diamond_capacity(n), f"diamond n={n}"
    assert sweep["elapsed"] < 30.0, f"sweep took {sweep['elapsed']:.1f}s"
    return f"n <= {SWEEP_MAX}, built and validated in {sweep['elapsed']:.1f}s"


@criterion(3, "occupancy identity is exact, including both worked examples")
def test_criterion_3_identity():
    sweep = _sweep()
    for n in range(SWEEP_MAX + 1):
        assert occupancy_identity_holds(sweep["diamonds"][n]), f"diamond n={n}"
        assert occupancy_identity_holds(sweep["squares"][n]), f"square n={n}"
    nine = sweep["diamonds"][9]
    assert occupancy_total(nine) == Fraction(59) and lacunar_voids(nine) == 22
    ten = sweep["diamonds"][10]
    assert occupancy_total(ten) == Fraction(96) and lacunar_voids(ten) == 8
    return f"all sizes through {SWEEP_MAX}, plus the size 9/10 ledgers"


@criterion(4, "capacity recurrences hold with zero tolerance")
def test_criterion_4_recurrences():
    for n in range(6, 301):
        assert capacity_recurrence_holds(n), f"square step n={n}"
    odd_checked = even_checked = 0
    for n in range(7, 301, 2):
        if recurrence_applicable(n):
            assert diamond_recurrence_check(n) is True, f"odd step n={n}"
            odd_checked += 1
        else:
            assert n == 9, f"unexpected inapplicable odd size {n}"
    for n in range(0, 301, 2):
        if recurrence_applicable(n):
            assert diamond_recurrence_check(n) is True, f"even step n={n}"
            even_checked += 1
    return f"squares 6..300, {odd_checked} odd and {even_checked} even diamond steps"


@criterion(5, "exact search sandwiches the bounds for sizes 0..10")
def test_criterion_5_oracle_sandwich():
    budget = SearchBudget(max_seconds=60.0)
    proven = {}
    for n in range(11):
        start = time.perf_counter()
        report = sandwich_check(n, budget=budget)
        elapsed = time.perf_counter() - start
        assert elapsed <= 60.0, f"size {n} exceeded the per-instance budget"
        assert report.proven, f"size {n} not proven"
        assert report.consistent, f"size {n}: {report.notes}"
        assert report.psi <= report.oracle_count <= report.psi_bar
        if report.psi == report.psi_bar:
            assert report.oracle_count == report.psi, f"size {n} misses coinciding bounds"
        proven[n] = report.oracle_count
    assert proven[9] == 7 and upper_capacity(9) == 8
    assert proven[10] == 12
    return f"maxima {proven}"


@criterion(6, "ratios behave asymptotically at size 200")
def test_criterion_6_asymptotics():
    n = 200
    cells = diamond_cardinality(n)
    psi, bar = diamond_capacity(n), upper_capacity(n)
    ratio_bar = Fraction(cells, bar)
    assert Fraction(6) < ratio_bar < Fraction(612, 100), f"|D|/bound = {float(ratio_bar):.4f}"
    ratio_psi = Fraction(cells, psi)
    assert Fraction(6) < ratio_psi < 6 * (1 + Fraction(5, n))
    deviation = Fraction(bar - psi, psi)
    assert deviation < Fraction(5, 1000), f"relative deviation {float(deviation):.5f}"
    return (
        f"|D|/bound = {float(ratio_bar):.4f}, |D|/count = {float(ratio_psi):.4f}, "
        f"deviation = {float(deviation):.5f}"
    )


@criterion(7, "ridge flattening keeps validity and count, frees four voids")
def test_criterion_7_ridge_flattening():
    deltas = {}
    for n in (13, 15, 17):
        base = build_diamond(n)
        flat = flatten_ridges(base)
        assert validate(flat) == [], f"size {n} flattening broke validity"
        assert len(flat.dominos) == len(base.dominos), f"size {n} changed the count"
        deltas[n] = lacunar_voids(flat) - lacunar_voids(base)
        assert deltas[n] == 4, f"size {n} freed {deltas[n]} voids"
    return f"void gains {deltas}"


@criterion(8, "the four overlap scenarios reproduce their density indices")
def test_criterion_8_overlap_metrics():
    expected = {
        "spaced": (12, Fraction(12)),
        "orthotropic": (30, Fraction(6)),
        "staggered": (28, Fraction(6)),
        "pinwheel": (26, Fraction(19, 3)),
    }
    seen = {}
    for name, (config, red) in overlap_scenarios().items():
        assert validate(config) == []
        seen[name] = (overlap_index(config, red), occupancy_index(config, red))
        assert seen[name] == expected[name], f"{name}: {seen[name]}"
    return "nu in (12, 30, 28, 26); rho in (12, 6, 6, 19/3)"
