import itertools
from fractions import Fraction

import pytest

from wklr.errors import WklrError
from wklr.partition import (
    Box,
    Order,
    Weighting,
    add_box,
    addable_boxes,
    between_check,
    boxes,
    braid_on_weighting,
    braid_permutation,
    c_function,
    content,
    dominance_compare,
    enumerate_block,
    enumerate_by_size,
    i_boxes,
    multipartition,
    permute_components,
    removable_boxes,
    residue,
    uglov_weighting,
    uglovate,
    uglovation_order,
    x_coord,
)

W1 = Weighting.make(-4, [0, 9], [0, 1], 2)


def test_multipartition_normalizes():
    assert multipartition([[3, 1, 0], []]) == ((3, 1), ())
    with pytest.raises(ValueError):
        multipartition([[1, 2]])


def test_box_key_round_trip():
    b = Box(2, 3, 1)
    assert b.key() == "2,3,1"
    assert Box.parse("2,3,1") == b


def test_residue_and_x():
    # residue s_m + j - i mod e; x = theta_m + kappa (j - i)
    assert residue(Box(1, 2, 1), W1) == 1
    assert residue(Box(1, 1, 2), W1) == 1
    assert x_coord(Box(1, 2, 1), W1) == -4
    assert x_coord(Box(2, 1, 2), W1) == 13


def test_content_counts_residues():
    assert content(((2, 1), (1,)), W1) == {0: 1, 1: 3}
    assert content(((), ()), W1) == {}


def test_addable_removable_partition_i_boxes():
    xi = ((2, 1), (1,))
    for i in range(2):
        add, rem = i_boxes(xi, i, W1)
        assert add == addable_boxes(xi, i, W1)
        assert rem == removable_boxes(xi, i, W1)
        assert all(residue(b, W1) == i for b in add + rem)
        assert not set(add) & set(rem)


def test_dominance_size_two():
    shapes = enumerate_by_size(2, 2, W1)
    assert shapes[0] == ((2,), ())
    for a in shapes:
        assert dominance_compare(a, a, W1) is Order.EQUAL
    assert dominance_compare(((2,), ()), ((), (2,)), W1) is Order.GREATER
    assert dominance_compare(((), (2,)), ((2,), ()), W1) is Order.LESS


def test_dominance_is_antisymmetric_and_transitive():
    w = uglov_weighting((0, 1, 1), 3)
    shapes = enumerate_by_size(3, 3, w)
    rel = {(a, b): dominance_compare(a, b, w) for a in shapes for b in shapes}
    for a, b in itertools.product(shapes, repeat=2):
        if rel[a, b] is Order.GREATER:
            assert rel[b, a] is Order.LESS
    for a, b, c in itertools.product(shapes, repeat=3):
        if rel[a, b] is Order.GREATER and rel[b, c] is Order.GREATER:
            assert rel[a, c] is Order.GREATER


def test_c_function_respects_dominance():
    w = uglov_weighting((0, 2), 3)
    for n in range(4):
        shapes = enumerate_by_size(n, 2, w)
        for a, b in itertools.product(shapes, repeat=2):
            if dominance_compare(a, b, w) is Order.GREATER:
                assert c_function(a, w) > c_function(b, w)


def test_enumeration_counts():
    assert len(enumerate_by_size(2, 2)) == 5
    assert len(enumerate_by_size(3, 3)) == 22
    block = enumerate_block(W1, {0: 1, 1: 1})
    assert set(block) == {((2,), ()), ((1, 1), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1))}


def test_uglov_weighting_formula():
    w = uglov_weighting((0, 1), 2)
    assert w.kappa == Fraction(1, 2)
    assert w.theta == (Fraction(-1, 2), Fraction(-1, 2))
    assert w.is_uglov() and w.uglov_sign() == 1


def test_uglovation_is_idempotent_and_keeps_residues():
    for w in (W1, Weighting.make(Fraction(-9, 2), [0, Fraction(3, 2)], [0, 1], 2)):
        u = uglovate(w)
        assert u.is_uglov()
        assert uglovate(u) == u
        order = uglovation_order(w)
        xi = ((2, 1), (1,))
        moved = permute_components(xi, order)
        assert content(moved, u) == content(xi, w)


def test_uglovation_preserves_strict_dominance():
    w = W1
    u = uglovate(w)
    order = uglovation_order(w)
    for n in range(4):
        shapes = enumerate_by_size(n, 2, w)
        for a, b in itertools.product(shapes, repeat=2):
            if dominance_compare(a, b, w) is Order.GREATER:
                assert dominance_compare(permute_components(a, order), permute_components(b, order), u) is Order.GREATER


def test_braid_generators():
    w = uglov_weighting((0, 1, 3), 2)
    assert braid_permutation(1, 3) == (1, 0, 2)
    assert braid_permutation(0, 3) == (2, 1, 0)
    for g in range(3):
        top = braid_on_weighting(g, w)
        assert top.is_uglov()
        assert sorted(top.charges) != [] and top.e == w.e


def test_between_check_reflexive():
    w = uglov_weighting((0, 1), 2)
    assert between_check(w, w, w, 3)


def test_weighting_json_errors_name_field():
    with pytest.raises(ValueError, match="kappa"):
        Weighting.from_json({"theta": ["0"], "charges": [0]})
    with pytest.raises(ValueError, match="charges"):
        Weighting.from_json({"kappa": "1", "theta": ["0"], "charges": ["a"]})
    assert Weighting.from_json(W1.to_json()) == W1


def test_weighting_rejects_zero_kappa():
    with pytest.raises(WklrError):
        Weighting.make(0, [0], [0], 1)


def test_add_box_grows_size():
    xi = ((2,), ())
    for b in [Box(1, 3, 1), Box(2, 1, 1), Box(1, 1, 2)]:
        assert sum(1 for _ in boxes(add_box(xi, b))) == 3
