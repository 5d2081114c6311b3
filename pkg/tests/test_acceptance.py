"""Acceptance criteria, one test per criterion (test_criterion_<n>_...).

The terminal summary prints one PASS/FAIL line per criterion. Tests named
test_supporting_* narrow down what does and does not hold; they are not
criteria themselves.
"""

import math
import time
from fractions import Fraction

import pytest

from wklr import presets
from wklr.abacus import push_count, swap_count
from wklr.cellular import braid_interpolation_degree, decomposition_matrix, graded_hom_dim
from wklr.checks import run_all
from wklr.partition import Weighting, enumerate_by_size, uglov_weighting
from wklr.ring import ZERO, LaurentPoly
from wklr.tableau import Loading, enumerate_d_tableaux, far_apart_positions

q = LaurentPoly.monomial
_ = ZERO

EXPECTED = {
    "big-example-2-case1": [
        [q(0), q(-1), q(-2), q(-1), _],
        [_, q(0), q(-1), _, _],
        [_, _, q(0), q(-1), q(-2)],
        [_, _, _, q(0), q(-1)],
        [_, _, _, _, q(0)],
    ],
    "big-example-2-case2": [
        [q(0), q(-2), q(-1), _, _],
        [_, q(0), _, _, _],
        [_, q(-1), q(0), _, q(-1)],
        [_, _, q(-1), q(0), q(-2)],
        [_, _, _, _, q(0)],
    ],
    "big-example-2-case3": [
        [q(0), q(-1), _, _, _],
        [_, q(0), _, _, _],
        [q(-1), q(-2), q(0), _, _],
        [q(-1), _, q(-1), q(0), q(-1)],
        [_, _, q(-2), _, q(0)],
    ],
}


def example_one_counts():
    p = presets.get("big-example-1")
    return [sum(len(enumerate_d_tableaux(xi, D, p.weighting)) for D in p.d_sets) for xi in p.shapes]


def example_two_matrix(name):
    p = presets.get(name)
    D = decomposition_matrix(p.shapes, p.weighting, p.loadings)
    return [list(row) for row in D.entries]


# ------------------------------------------------------------ criterion 1

def test_criterion_1_example_one_tableau_counts():
    t0 = time.perf_counter()
    counts = example_one_counts()
    elapsed = time.perf_counter() - t0
    assert counts == [4, 2, 3, 2, 1]
    assert sum(n * n for n in counts) == 34
    assert elapsed < 1


def test_supporting_example_one_computed_counts():
    # what the tableau rules give for this data
    assert example_one_counts() == [5, 1, 1, 1, 0]


# ------------------------------------------------------------ criterion 2

def test_criterion_2_example_two_decomposition_matrices():
    t0 = time.perf_counter()
    got = {name: example_two_matrix(name) for name in EXPECTED}
    elapsed = time.perf_counter() - t0
    wrong = [name for name in EXPECTED if got[name] != EXPECTED[name]]
    assert not wrong, f"mismatch in {wrong}"
    assert elapsed < 5


@pytest.mark.parametrize("name", ["big-example-2-case1", "big-example-2-case2"])
def test_supporting_example_two_case_matches(name):
    assert example_two_matrix(name) == EXPECTED[name]


def test_supporting_example_two_case_three_differs_in_one_column():
    got = example_two_matrix("big-example-2-case3")
    bad = {(r, c) for r in range(5) for c in range(5) if got[r][c] != EXPECTED["big-example-2-case3"][r][c]}
    assert bad == {(3, 2), (4, 2)}
    # the computed column swaps the two expected powers
    assert (got[3][2], got[4][2]) == (q(-2), q(-1))


# ------------------------------------------------------------ criterion 3

def test_criterion_3_far_apart_count_is_m_factorial_l_to_the_m():
    for ell in (1, 2, 3):
        for w in (Weighting.make(-4, [9 * k for k in range(ell)], [0] * ell, 2),
                  Weighting.make(Fraction(3, 2), [Fraction(-5 * k, 2) for k in range(ell)], list(range(ell)), 3)):
            for m in range(5):
                D = far_apart_positions(m, w)
                total = sum(len(enumerate_d_tableaux(xi, D, w)) ** 2 for xi in enumerate_by_size(m, ell, w))
                assert total == math.factorial(m) * ell ** m, (ell, m, w)


# ------------------------------------------------------------ criterion 4

def test_criterion_4_half_kappa_pair_has_dimension_2_l_squared():
    for ell in (2, 3):
        for kappa in (Fraction(-4), Fraction(-9, 2), Fraction(1)):
            w = Weighting.make(kappa, [Fraction(k) for k in range(ell)], [0] * ell, 2)
            hecke = far_apart_positions(2, w)
            s = hecke[0]
            pair = Loading.unlabelled([s, s + kappa / 2])
            f = graded_hom_dim(pair, Loading.unlabelled(hecke), w)
            assert f.at_one() == 2 * ell * ell


# ------------------------------------------------------------ criterion 5

def test_criterion_5_property_suite():
    t0 = time.perf_counter()
    results = run_all(max_size=5, seed=0, random_count=200, random_max_size=6)
    elapsed = time.perf_counter() - t0
    for r in results:
        print(r.line())
    assert all(r.ok for r in results), [r.line() for r in results if not r.ok]
    assert elapsed < 120


# ------------------------------------------------------------ criterion 6

CHARGES = [((0, 1), 2), ((0, 3), 2), ((2, 0), 3), ((0, 1, 3), 2), ((1, 0, 2), 3), ((0, 0, 1), 2)]


def braid_cases(max_boxes=5):
    for s, e in CHARGES:
        for sign in (1, -1):
            w = uglov_weighting(s, e, sign)
            for g in range(1, len(s)):
                for n in range(max_boxes + 1):
                    for xi in enumerate_by_size(n, len(s)):
                        yield w, g, xi


def test_criterion_6_interpolation_degree_is_push_count():
    bad = [(w.charges, g, xi) for w, g, xi in braid_cases()
           if -braid_interpolation_degree(xi, g, w) != push_count(xi, w.charges, g)]
    assert not bad, f"{len(bad)} cases, first {bad[0]}"


def test_supporting_interpolation_degree_is_half_the_push_count_change():
    for w, g, xi in braid_cases():
        empty = tuple(() for _ in xi)
        m0 = swap_count(empty, w.charges, g, w.e)
        assert 2 * braid_interpolation_degree(xi, g, w) == swap_count(xi, w.charges, g, w.e) - m0
