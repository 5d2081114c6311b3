import itertools

import pytest

from wklr.abacus import (
    Abacus,
    bead_displacement,
    e_core,
    e_weight,
    from_abacus,
    koszul_flip,
    matrix_u,
    push_count,
    runner_join,
    runner_split,
    swap_count,
    swap_rows,
    to_abacus,
)
from wklr.partition import enumerate_by_size, partitions_of


def test_abacus_json_matches_documented_shape():
    a = to_abacus((3,), 0)
    assert a.to_json() == {"charge": 0, "extraBeads": [2], "missingBeads": [-1]}
    assert Abacus.from_json(a.to_json()) == a
    with pytest.raises(ValueError, match="charge"):
        Abacus.from_json({"extraBeads": []})


@pytest.mark.parametrize("charge", [-2, 0, 3])
def test_abacus_round_trip(charge):
    for n in range(7):
        for lam in partitions_of(n):
            assert from_abacus(to_abacus(lam, charge)) == (lam, charge)


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_runner_split_join_inverse(e):
    for n in range(7):
        for lam in partitions_of(n):
            for c in (-1, 0, 2):
                a = to_abacus(lam, c)
                runners = runner_split(a, e)
                assert sum(r.charge for r in runners) == c
                assert runner_join(runners, e) == a


def test_cores_and_weights():
    assert e_core((2,), 2) == ()
    assert e_core((2, 1), 2) == (2, 1)
    assert e_weight((4, 2), 2) == 3
    for n in range(8):
        for lam in partitions_of(n):
            core = e_core(lam, 3)
            assert sum(lam) - sum(core) == 3 * e_weight(lam, 3)
            assert e_core(core, 3) == core


def test_matrix_u_rows_sum_to_charges():
    xi, s = ((3, 1), (2,), ()), (0, 1, -1)
    R = matrix_u(xi, s, 2)
    assert R.row_charges == s
    assert sum(R.column_charges) == sum(s)


@pytest.mark.parametrize("ell,e", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_flip_is_involution(ell, e):
    for s in itertools.product(range(-1, 2), repeat=ell):
        for n in range(4):
            for xi in enumerate_by_size(n, ell):
                dual, t = koszul_flip(xi, s, e)
                assert len(dual) == e
                assert koszul_flip(dual, t, ell) == (xi, tuple(s))


def test_flip_transposes_runner_matrix():
    xi, s = ((2, 1), (1,)), (0, 1)
    dual, t = koszul_flip(xi, s, 2)
    u = matrix_u(xi, s, 2).u
    v = matrix_u(dual, t, 2).u
    assert v == tuple(zip(*u))


def test_bead_displacement_counts_boxes():
    xi, s = ((3, 1), (2, 2)), (1, -1)
    assert bead_displacement(xi, s) == 8


def test_push_count_vacuum():
    # empty rows with charges 0 and 2 differ at positions 0 and 1
    assert push_count(((), ()), (0, 2), 1) == 2
    assert push_count(((), ()), (3, 3), 1) == 0


def test_swap_rows_exchanges_charges():
    xi, s = ((2,), (1, 1), ()), (0, 1, 2)
    eta, t = swap_rows(xi, s, 1, 2)
    assert eta == ((1, 1), (2,), ()) and t == (1, 0, 2)
    eta, t = swap_rows(xi, s, 0, 2)
    assert t == (4, 1, -2)
    assert swap_rows(eta, t, 0, 2) == (xi, s)
    assert swap_count(xi, s, 1, 2) == push_count(xi, s, 1)
