import itertools
from fractions import Fraction

import pytest

from wklr import presets
from wklr.cellular import decomposition_matrix
from wklr.errors import WklrError
from wklr.fock import (
    ALL_DUAL_CONVENTIONS,
    BlockBasisData,
    FockVector,
    apply_E,
    apply_F,
    bar_on_block,
    bilinear_form,
    calibrate_dual_convention,
    crystal_E,
    crystal_F,
    divided_power,
    dual_apply_E,
    dual_apply_F,
    dual_weight,
    gram_matrix,
    mutate_basis,
    quantum_weyl_t,
    sesqui_form,
    string_lengths,
    weight_pairing,
)
from wklr.abacus import swap_rows
from wklr.partition import Order, content, dominance_compare, enumerate_by_size, uglov_weighting
from wklr.ring import ONE, ZERO, LaurentPoly, q_int

UGLOV = [((0, 3), 2, 1), ((0, 1), 3, -1), ((0, 2, 1), 3, 1), ((1, 0, 0), 2, 1)]
DUAL_BLOCKS = [((0, 1), 2), ((0, 0), 2), ((1, 0, 0), 2), ((0, 1), 3), ((0, 2, 1), 3)]


def diff(a: FockVector, b: FockVector) -> FockVector:
    if a.is_zero():
        return -b if not b.is_zero() else a
    if b.is_zero():
        return a
    return a - b


def at_one(v: FockVector) -> dict:
    return {xi: c.at_one() for xi, c in v.terms.items() if c.at_one()}


def basis_vectors(max_n):
    for s, e, sign in UGLOV:
        w = uglov_weighting(s, e, sign)
        for n in range(max_n + 1):
            for xi in enumerate_by_size(n, len(s)):
                yield w, FockVector.basis(xi, w)


def test_vector_json_round_trip():
    w = uglov_weighting((0, 3), 2)
    v = apply_F(0, apply_F(1, FockVector.basis(((), ()), w)))
    assert FockVector.from_json(v.to_json()) == v
    with pytest.raises(ValueError, match="shape"):
        FockVector.from_json({"terms": [{"coeff": {"0": 1}}]}, w)


def test_vectors_of_different_weightings_do_not_add():
    a = FockVector.basis(((), ()), uglov_weighting((0, 3), 2))
    b = FockVector.basis(((), ()), uglov_weighting((0, 1), 3))
    with pytest.raises(WklrError):
        a + b


def test_chevalley_commutators():
    for w, u in basis_vectors(3):
        for i, j in itertools.product(range(w.e), repeat=2):
            lhs = diff(apply_E(i, apply_F(j, u)), apply_F(j, apply_E(i, u)))
            if i != j:
                assert lhs.is_zero()
            else:
                xi = next(iter(u.terms))
                assert lhs == u.scale(q_int(weight_pairing(i, xi, w)))


def test_divided_powers_integral():
    for w, u in basis_vectors(2):
        for i in range(w.e):
            for a in range(4):
                divided_power("F", i, a, u)
                divided_power("E", i, a, u)


def test_crystal_operators_invert_each_other():
    for w, u in basis_vectors(3):
        xi = next(iter(u.terms))
        for i in range(w.e):
            eps, phi = string_lengths(i, xi, w)
            assert phi - eps == weight_pairing(i, xi, w)
            f = crystal_F(i, xi, w)
            if f is not None:
                assert crystal_E(i, f, w) == xi
            e = crystal_E(i, xi, w)
            assert (e is None) == (eps == 0)


def det_at(M, x):
    A = [[Fraction(f.at(x)) for f in row] for row in M]
    n, d = len(A), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        for r in range(c + 1, n):
            k = A[r][c] / A[c][c]
            A[r] = [a - k * b for a, b in zip(A[r], A[c])]
    return d


@pytest.mark.parametrize("s,e", [((0, 3), 2), ((0, 2, 1), 3)])
def test_weyl_t_reflects_weights_and_is_invertible(s, e):
    w = uglov_weighting(s, e)
    for n in range(4):
        shapes = enumerate_by_size(n, len(s))
        for i in range(e):
            spaces = {}
            for xi in shapes:
                key = (tuple(sorted(content(xi, w).items())), weight_pairing(i, xi, w))
                spaces.setdefault(key, []).append(xi)
            for (cont, mu), src in spaces.items():
                images = [quantum_weyl_t(i, FockVector.basis(xi, w)) for xi in src]
                targets = sorted({eta for v in images for eta in v.terms})
                for eta in targets:
                    assert weight_pairing(i, eta, w) == -mu
                assert all(not v.is_zero() for v in images)
                if len(targets) == len(src):
                    M = [[v.coeff(eta) for v in images] for eta in targets]
                    assert det_at(M, 2) != 0


def test_dual_weights_sum_to_e():
    for s, e in DUAL_BLOCKS:
        w = uglov_weighting(s, e)
        assert sum(dual_weight(j, w) for j in range(len(s))) == e


def test_dual_commutator_with_itself():
    for s, e in DUAL_BLOCKS:
        for sign in (1, -1):
            w = uglov_weighting(s, e, sign)
            for n in range(4):
                for xi in enumerate_by_size(n, len(s)):
                    u = FockVector.basis(xi, w)
                    for j in range(len(s)):
                        lhs = diff(dual_apply_E(j, dual_apply_F(j, u)), dual_apply_F(j, dual_apply_E(j, u)))
                        assert lhs.terms == u.scale(q_int(dual_weight(j, w))).terms


def _commutator_cases():
    for s, e in DUAL_BLOCKS:
        w = uglov_weighting(s, e)
        for n in range(3):
            for xi in enumerate_by_size(n, len(s)):
                u = FockVector.basis(xi, w)
                for i in range(e):
                    for j in range(len(s)):
                        for dual in (dual_apply_E, dual_apply_F):
                            yield u, i, j, dual


def test_dual_action_commutes_with_chevalley_at_q_one():
    for u, i, j, dual in _commutator_cases():
        a = dual(j, apply_F(i, u))
        b = apply_F(i, dual(j, u))
        assert at_one(a) == at_one(b)


def test_dual_action_commutes_with_chevalley():
    failures = sum(1 for u, i, j, dual in _commutator_cases()
                   if dual(j, apply_F(i, u)).terms != apply_F(i, dual(j, u)).terms)
    assert failures == 0


def test_exactly_one_dual_convention_calibrates():
    res = calibrate_dual_convention()
    assert set(res) == set(ALL_DUAL_CONVENTIONS)
    assert sum(res.values()) == 1


def test_dual_t_moves_to_swapped_charges():
    w = uglov_weighting((0, 1, 1), 2)
    for xi in enumerate_by_size(2, 3):
        for j in range(3):
            t = quantum_weyl_t(j, FockVector.basis(xi, w), dual=True)
            eta, s2 = swap_rows(xi, w.charges, j, w.e)
            if not t.is_zero():
                assert t.weighting.charges == s2
                assert t.coeff(eta).at_one() in (1, -1)


# ---------------------------------------------------------------- forms

@pytest.fixture(scope="module")
def example_block():
    p = presets.get("big-example-2-case2")
    D = decomposition_matrix(p.shapes, p.weighting)
    return p, BlockBasisData.build(p.shapes, p.weighting, D)


def test_canonical_vectors_are_bar_invariant(example_block):
    p, data = example_block
    for xi in p.shapes:
        b = data.canonical_vector(xi)
        assert bar_on_block(data, b) == b


def test_bar_is_an_involution(example_block):
    p, data = example_block
    for xi in p.shapes:
        u = FockVector.basis(xi, p.weighting).scale(LaurentPoly({-1: 2, 3: 1}))
        assert bar_on_block(data, bar_on_block(data, u)) == u


def test_standard_basis_is_semi_orthonormal(example_block):
    # <u_xi, u_eta> vanishes unless eta dominates xi
    p, data = example_block
    G = gram_matrix(data, [FockVector.basis(xi, p.weighting) for xi in p.shapes])
    for a, xi in enumerate(p.shapes):
        assert G[a][a] == ONE
        for b, eta in enumerate(p.shapes):
            if a != b and G[a][b]:
                assert dominance_compare(eta, xi, p.weighting) is Order.GREATER


def test_forms_agree_on_bar_invariant_vectors(example_block):
    p, data = example_block
    b0 = data.canonical_vector(p.shapes[1])
    for xi in p.shapes:
        u = FockVector.basis(xi, p.weighting)
        assert sesqui_form(data, b0, u) == bilinear_form(b0, u)


def test_mutation_to_own_order_is_identity(example_block):
    p, data = example_block
    M = mutate_basis(data, p.weighting)
    n = len(p.shapes)
    assert all(M.at(r, c) == (ONE if r == c else ZERO) for r in range(n) for c in range(n))


def test_mutation_to_reversed_weighting_is_semi_orthogonal(example_block):
    p, data = example_block
    other = presets.get("big-example-2-case3").weighting
    M = mutate_basis(data, other)
    vecs = [data.vector(M.column(c)) for c in range(len(p.shapes))]
    for a, b in itertools.product(range(len(vecs)), repeat=2):
        if a != b and sesqui_form(data, vecs[a], vecs[b]):
            assert dominance_compare(p.shapes[b], p.shapes[a], other) is Order.GREATER
