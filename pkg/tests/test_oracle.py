import pytest

from dominopack.lattice import DIAMOND, SQUARE, Shape, diamond_cells
from dominopack.dominoes import domino, validate
from dominopack.oracle import (
    SearchBudget,
    enumerate_candidates,
    exact_max,
    sandwich_check,
)
from dominopack.squares import square_capacity


def test_candidates_small_diamond():
    cands = enumerate_candidates(Shape(DIAMOND, 3))
    assert domino(0, 0, "H") in cands or domino(-2, 0, "H") in cands
    assert domino(0, 0, "V") in cands or domino(0, -2, "V") in cands
    assert enumerate_candidates(Shape(DIAMOND, 1)) == []


def test_candidates_count_matches_adjacency():
    # one candidate per adjacent cell pair of the kernel domain
    cells = diamond_cells(7)
    edges = 0
    for (dx, dy) in cells:
        if (dx + 2, dy) in cells:
            edges += 1
        if (dx, dy + 2) in cells:
            edges += 1
    assert len(enumerate_candidates(Shape(DIAMOND, 9))) == edges


def test_candidate_order_is_row_major():
    cands = enumerate_candidates(Shape(DIAMOND, 5))
    keyed = [(-d.anchor.dy, d.anchor.dx, d.orient) for d in cands]
    assert keyed == sorted(keyed, key=lambda t: (t[0], t[1], t[2] != "H"))


@pytest.mark.parametrize("n,best", [(0, 0), (1, 0), (2, 1), (3, 1), (4, 2), (5, 2), (6, 5), (7, 4), (8, 8)])
def test_exact_small_diamonds(n, best):
    result = exact_max(Shape(DIAMOND, n))
    assert result.proven and result.count == best
    assert validate(result.witness) == []
    assert len(result.witness.dominos) == best


def test_exact_diamond_nine_and_ten():
    nine = exact_max(Shape(DIAMOND, 9))
    assert nine.proven and nine.count == 7
    ten = exact_max(Shape(DIAMOND, 10))
    assert ten.proven and ten.count == 12


def test_symmetry_reduction_preserves_optimum():
    for n in (6, 7, 8, 9):
        on = exact_max(Shape(DIAMOND, n), symmetry_reduction=True)
        off = exact_max(Shape(DIAMOND, n), symmetry_reduction=False)
        assert on.count == off.count
        assert on.proven and off.proven


def test_budget_exhaustion_returns_lower_bound():
    result = exact_max(Shape(DIAMOND, 10), budget=SearchBudget(max_nodes=40))
    assert not result.proven
    assert result.count >= 0
    assert validate(result.witness) == []
    assert "proven=false" in result.proof_line()


def test_exact_squares_match_capacity():
    for n in range(0, 9):
        result = exact_max(Shape(SQUARE, n))
        assert result.proven
        assert result.count == square_capacity(n), f"claimed capacity wrong at n={n}"


def test_exact_diamond_eleven_hits_coinciding_bounds():
    result = exact_max(Shape(DIAMOND, 11))
    assert result.proven and result.count == 10


def test_sandwich_reports():
    rep = sandwich_check(9)
    assert rep.consistent and rep.proven and rep.oracle_count == 7
    assert rep.psi == 6 and rep.psi_bar == 8
    rep = sandwich_check(5)
    assert rep.consistent and rep.oracle_count == 2 == rep.psi == rep.psi_bar


def test_sandwich_beyond_desk_scale_stays_consistent():
    # size 12 cannot be proven within a desk budget; the bound pair must
    # still sandwich whatever the truncated search returns
    rep = sandwich_check(12, budget=SearchBudget(max_nodes=500_000))
    assert rep.consistent
    assert rep.psi <= rep.oracle_count <= rep.psi_bar


def test_proof_line_format():
    result = exact_max(Shape(DIAMOND, 4))
    assert result.proof_line() == f"n=4 optimum=2 proven=true nodes={result.nodes}"
