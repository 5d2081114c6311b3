import pytest

from wklr import presets
from wklr.abacus import swap_count
from wklr.cellular import (
    GradedMatrix,
    branch_induce,
    branch_restrict,
    braid_interpolation_degree,
    cartan_matrix,
    decomposition_matrix,
    graded_cell_dim,
    graded_hom_dim,
    interpolation_degree,
    peel_canonical_basis,
    standard_multiplicity_columns,
)
from wklr.errors import PeelFailure
from wklr.fock import FockVector, apply_F
from wklr.partition import Weighting, content, enumerate_block, enumerate_by_size, uglov_weighting
from wklr.ring import ONE, ZERO, LaurentPoly
from wklr.tableau import Loading, canonical_loading

W1 = Weighting.make(-4, [0, 9], [0, 1], 2)
qi = LaurentPoly.monomial


def test_cell_dim_on_canonical_loading_has_constant_term_one():
    for xi in enumerate_by_size(3, 2, W1):
        f = graded_cell_dim(xi, canonical_loading(xi, W1), W1)
        assert f.coeff(0) == 1


def test_cell_dim_zero_for_wrong_content():
    assert graded_cell_dim(((1,), (1,)), Loading.of([(1, 0), (10, 0)]), W1) == ZERO


def test_hom_dim_is_symmetric():
    p = presets.get("big-example-2-case1")
    for a in p.loadings:
        for b in p.loadings:
            assert graded_hom_dim(a, b, p.weighting) == graded_hom_dim(b, a, p.weighting)


def test_example_two_case_one_standard_columns_are_already_canonical():
    p = presets.get("big-example-2-case1")
    S = standard_multiplicity_columns(p.shapes, p.weighting, p.loadings)
    assert peel_canonical_basis(S, p.weighting) == S
    assert S.at(0, 1) == qi(-1) and S.at(2, 4) == qi(-2)


def test_decomposition_matrix_unitriangular():
    w = uglov_weighting((0, 3), 2)
    for n in range(1, 4):
        for xi in enumerate_by_size(n, 2, w):
            block = enumerate_block(w, content(xi, w))
            D = decomposition_matrix(block, w)
            for c in range(len(block)):
                assert D.at(c, c) == ONE
                for r in range(len(block)):
                    if r != c and D.at(r, c):
                        assert D.at(r, c).max_exp() < 0
                        assert all(v > 0 for v in D.at(r, c).terms().values())


def test_peel_rejects_bad_diagonal():
    block = [((1,), ()), ((), (1,))]
    M = GradedMatrix(block, block, [[qi(1), ZERO], [ZERO, ONE]])
    with pytest.raises(PeelFailure):
        peel_canonical_basis(M, W1)


def test_peel_removes_bar_invariant_part():
    p = presets.get("big-example-2-case1")
    D = decomposition_matrix(p.shapes, p.weighting, p.loadings)
    # add 1 * column 0 to column 1: peeling must undo it
    cols = [D.column(c) for c in range(5)]
    cols[1] = [a + b for a, b in zip(cols[1], cols[0])]
    M = GradedMatrix(D.rows, D.cols, [[cols[c][r] for c in range(5)] for r in range(5)])
    assert peel_canonical_basis(M, p.weighting) == D


def test_cartan_matrix_symmetric():
    p = presets.get("big-example-2-case2")
    C = cartan_matrix(decomposition_matrix(p.shapes, p.weighting))
    for a in range(5):
        for b in range(5):
            assert C[a][b] == C[b][a]


def test_graded_matrix_json_shape():
    p = presets.get("big-example-2-case1")
    obj = decomposition_matrix(p.shapes, p.weighting, p.loadings).to_json()
    assert obj["rows"][0] == [[2], []]
    assert obj["entries"][0][1] == {"-1": 1}


def test_branching_sizes():
    xi = ((1,), ())
    ind = branch_induce(xi, W1)
    assert [eta for eta, _ in ind] and all(sum(map(sum, eta)) == 2 for eta, _ in ind)
    res = branch_restrict(((2,), (1,)), W1, 1)
    assert all(sum(map(sum, eta)) == 2 for eta, _ in res)


def test_interpolation_degree_identity_vanishes():
    w = uglov_weighting((0, 3), 2)
    for xi in enumerate_by_size(3, 2, w):
        assert interpolation_degree(xi, w, w) == 0


@pytest.mark.parametrize("s,e", [((0, 3), 2), ((0, 1, 3), 2), ((1, 0, 2), 3)])
def test_braid_degree_matches_swap_count(s, e):
    # for 1 <= g < l: 2 d = m(xi) - m(empty)
    for sign in (1, -1):
        w = uglov_weighting(s, e, sign)
        empty = tuple(() for _ in s)
        for g in range(1, len(s)):
            m0 = swap_count(empty, w.charges, g, e)
            for n in range(4):
                for xi in enumerate_by_size(n, len(s), w):
                    assert 2 * braid_interpolation_degree(xi, g, w) == swap_count(xi, w.charges, g, e) - m0


def test_induce_from_empty_adds_each_corner():
    w = uglov_weighting((0, 1, 3), 2)
    empty = ((), (), ())
    assert sorted(eta for eta, _ in branch_induce(empty, w)) == sorted([((1,), (), ()), ((), (1,), ()), ((), (), (1,))])


def test_induce_shifts_match_fock_exponents():
    for w in (W1, uglov_weighting((0, 3), 2), uglov_weighting((1, 0, 2), 3)):
        for n in range(4):
            for xi in enumerate_by_size(n, w.level, w):
                for i in range(w.e):
                    v = apply_F(i, FockVector.basis(xi, w))
                    got = {eta: LaurentPoly.monomial(-d) for eta, d in branch_induce(xi, w, i)}
                    assert got == dict(v.terms)
