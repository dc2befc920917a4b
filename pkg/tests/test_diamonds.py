import pytest

from dominopack.dominoes import (
    lacunar_voids,
    occupancy_identity_holds,
    rotate_configuration_cw,
    validate,
)
from dominopack.diamonds import (
    build_diamond,
    capacity_by_parts,
    classify,
    core_side,
    diamond_capacity,
    diamond_recurrence_check,
    even_inner_scaled_piecewise,
    even_staircase_scaled_piecewise,
    expansion_ledger,
    north_wedge,
    odd_capacity_split,
    recurrence_applicable,
    wedge_capacity_even,
    wedge_capacity_odd,
)
from dominopack.squares import square_capacity


def test_classify_examples():
    sc = classify(31)
    assert (sc.label, sc.m, sc.p, sc.mu_p) == ("10", 15, 5, 1)
    sc = classify(60)
    assert (sc.label, sc.p, sc.r_hat) == ("00", 10, 3)
    sc = classify(0)
    assert (sc.label, sc.p) == ("00", 0)
    assert classify(16).r_hat == 1
    assert classify(4).r_hat is None


def test_classify_decomposition():
    for n in range(0, 301, 2):
        sc = classify(n)
        if sc.r_hat is None:
            continue
        assert sc.p_hat == 4 * sc.q_hat + sc.r_hat
        assert 0 <= sc.r_hat < 4


@pytest.mark.parametrize("n,f", [(31, 13), (60, 28), (16, 8), (9, 3), (1, None), (4, 0)])
def test_core_side(n, f):
    assert core_side(classify(n)) == f


def test_core_side_parity_matches_lattice():
    # odd diamonds need odd cores, even diamonds even cores
    for n in range(6, 241):
        f = core_side(classify(n))
        assert f % 2 == n % 2


@pytest.mark.parametrize("p_n,w", [(13, 2), (31, 12), (199, 425)])
def test_wedge_capacity_odd(p_n, w):
    assert wedge_capacity_odd(classify(p_n)) == w


def test_wedge_capacity_odd_step_rule():
    for n in range(7, 421, 6):
        sc = classify(n)
        prev = classify(n - 6)
        step = wedge_capacity_odd(sc) - wedge_capacity_odd(prev)
        assert 2 * step == sc.p * (1 + sc.mu_p)


@pytest.mark.parametrize("n,w1,w2", [(60, 36, 7), (200, 325, 92), (4, None, 0), (24, 6, 0)])
def test_wedge_capacity_even(n, w1, w2):
    assert wedge_capacity_even(classify(n)) == (w1, w2)


@pytest.mark.parametrize(
    "n,psi",
    [(9, 6), (31, 80), (200, 3368), (0, 0), (1, 0), (2, 1), (3, 1), (4, 2), (5, 2), (11, 10)],
)
def test_capacity_values(n, psi):
    assert diamond_capacity(n) == psi


def test_capacity_by_parts_and_split_forms():
    for n in range(6, 421):
        assert capacity_by_parts(n) == diamond_capacity(n)
        sc = classify(n)
        if sc.parity and sc.p >= 1:
            assert odd_capacity_split(sc) == diamond_capacity(n)
        if not sc.parity and sc.r_hat is not None:
            w1, w2 = wedge_capacity_even(sc)
            assert even_inner_scaled_piecewise(sc) == 4 * w1
            assert even_staircase_scaled_piecewise(sc) == 4 * w2


def test_recurrence_examples():
    assert diamond_capacity(31) - diamond_capacity(25) == 28 == 31 - 3
    assert diamond_capacity(60) == diamond_capacity(36) + 4 * 49
    assert diamond_recurrence_check(5) is None
    assert diamond_recurrence_check(9) is None  # the one odd seed anomaly
    for n in range(0, 301):
        assert diamond_recurrence_check(n) in (None, True)


def test_recurrence_applicability_ranges():
    assert not recurrence_applicable(28)  # even residue-2 needs p > 4
    assert recurrence_applicable(34)
    assert recurrence_applicable(7) and recurrence_applicable(15)
    assert recurrence_applicable(24)  # p = 4 opens the even rule elsewhere


def test_expansion_ledger_rows():
    row = expansion_ledger(18)  # class 00, r = 0
    assert (row.delta_inner_x4, row.delta_staircase_x4, row.delta_total) == (0, 0, 16)
    assert expansion_ledger(44).delta_total == 44 - 3  # class 01, r = 3
    assert expansion_ledger(28).delta_total == 28      # class 02, r = 3
    assert expansion_ledger(9) is None


def test_expansion_ledger_consistency():
    for n in range(6, 361, 2):
        row = expansion_ledger(n)
        if row is None:
            continue
        assert row.delta_core + row.delta_inner_x4 + row.delta_staircase_x4 == row.delta_total
        sc = classify(n)
        if sc.p >= 2:
            assert row.delta_total == diamond_capacity(n) - diamond_capacity(n - 6)
            prev = classify(n - 6)
            assert row.delta_core == square_capacity(core_side(sc)) - square_capacity(
                core_side(prev)
            )
            w1, w2 = wedge_capacity_even(sc)
            pw1, pw2 = wedge_capacity_even(prev)
            assert row.delta_inner_x4 == 4 * (w1 - pw1)
            assert row.delta_staircase_x4 == 4 * (w2 - pw2)


def test_builds_agree_with_capacity():
    for n in range(0, 81):
        config = build_diamond(n)
        assert len(config.dominos) == diamond_capacity(n)
        assert validate(config) == []
        assert occupancy_identity_holds(config)


def test_wedges_are_rotated_copies():
    for n in (13, 16, 28, 31, 52, 60):
        sc = classify(n)
        core = square_capacity(core_side(sc))
        config = build_diamond(n)
        wedge = len(north_wedge(sc))
        assert core + 4 * wedge == len(config.dominos)
        north = frozenset(config.dominos[core:core + wedge])
        rest = config.dominos[core + wedge:]
        turned = north
        for k in range(3):
            turned = frozenset(
                rotate_configuration_cw(
                    type(config)(config.shape, tuple(turned))
                ).dominos
            )
            chunk = frozenset(rest[k * wedge:(k + 1) * wedge])
            assert chunk == turned


def test_emission_order_is_stable():
    first = build_diamond(31).dominos
    second = build_diamond(31).dominos
    assert first == second


def test_voids_of_worked_examples():
    assert lacunar_voids(build_diamond(9)) == 22
    assert lacunar_voids(build_diamond(10)) == 8


def test_wedge_spec_invariants():
    from dominopack.diamonds import wedge_spec

    for n in range(6, 241):
        sc = classify(n)
        if sc.p < 1:
            continue
        spec = wedge_spec(sc)
        if sc.parity:
            assert 2 * spec.height == 3 * sc.p + sc.mu_p
            assert spec.baserow_length % 2 == 1
            assert spec.baserow_capacity == (spec.baserow_length - 1) // 2
        else:
            assert spec.baserow_capacity == spec.inner_row_capacity + spec.staircase_row_capacity
        # the built wedge's bottom row holds exactly the claimed baserow count
        rows = {}
        for d in north_wedge(sc):
            rows.setdefault(d.anchor.dy, 0)
            rows[d.anchor.dy] += 1
        assert rows[min(rows)] == spec.baserow_capacity
        if sc.parity:
            assert len(rows) == spec.median_capacity
