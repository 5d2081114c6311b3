"""Invariant suites shared by ``wklr check`` and the test-suite.

Each suite runs over an exhaustive family of small cases plus optional
seeded random instances, and reports how many cases failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .abacus import koszul_flip
from .cellular import crossing_degree, decomposition_matrix
from .errors import DegenerateWeighting, WklrError
from .fock import (
    BlockBasisData,
    FockVector,
    apply_E,
    apply_F,
    crystal_E,
    crystal_F,
    divided_power,
    sesqui_form,
    string_lengths,
    weight_pairing,
)
from .partition import (
    Multipartition,
    Order,
    Weighting,
    content,
    dominance_compare,
    enumerate_block,
    enumerate_by_size,
    permute_components,
    uglov_weighting,
    uglovate,
    uglovation_order,
)
from .parallel import ordered_map
from .presets import PRESETS
from .ring import ONE, q_int
from .tableau import canonical_loading, enumerate_i_tableaux, tableau_degree


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: int = 0
    first: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def record(self, good: bool, what) -> None:
        self.cases += 1
        if not good:
            self.failures += 1
            if self.first is None:
                self.first = str(what() if callable(what) else what)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f"  first failure: {self.first}"
        return f"{status}  {self.name}: {self.cases} cases, {self.failures} failures{tail}"


# weightings used by the exhaustive sweeps; all generic for sizes <= 6
def fixed_weightings() -> list[Weighting]:
    return [
        uglov_weighting((0,), 3),
        uglov_weighting((0, 1), 2),
        uglov_weighting((1, 0), 3, -1),
        uglov_weighting((0, 0, 1), 2),
        uglov_weighting((0, 0), 2),
        uglov_weighting((0, 2, 1), 3),
        Weighting.make(-4, (0, 9), (0, 1), 2),
        Weighting.make(Fraction(-9, 2), (0, Fraction(3, 2)), (0, 1), 2),
    ]


def random_weighting(rng: random.Random, ell: int | None = None) -> Weighting:
    """A random weighting; Uglov about half of the time."""
    ell = ell or rng.randint(1, 3)
    e = rng.randint(2, 4)
    if rng.random() < 0.5:
        return uglov_weighting([rng.randint(-3, 3) for _ in range(ell)], e, rng.choice((1, -1)))
    kappa = Fraction(rng.choice((1, -1)) * rng.randint(1, 9), rng.randint(1, 3))
    theta = [Fraction(rng.randint(-40, 40), rng.randint(1, 7)) for _ in range(ell)]
    return Weighting.make(kappa, theta, [rng.randint(-3, 3) for _ in range(ell)], e)


def random_shape(rng: random.Random, ell: int, max_size: int) -> Multipartition:
    shapes = enumerate_by_size(rng.randint(0, max_size), ell)
    return rng.choice(shapes)


def _cases(max_size: int, weightings=None) -> Iterator[tuple[Weighting, Multipartition]]:
    for w in weightings or fixed_weightings():
        for n in range(max_size + 1):
            for xi in enumerate_by_size(n, w.level):
                yield w, xi


def _random_cases(seed: int, count: int, max_size: int) -> Iterator[tuple[Weighting, Multipartition]]:
    rng = random.Random(seed)
    made = 0
    while made < count:
        w = random_weighting(rng)
        xi = random_shape(rng, w.level, max_size)
        made += 1
        yield w, xi


# ------------------------------------------------------------------ suites

def check_fock_commutators(cases) -> SuiteResult:
    res = SuiteResult("Fock commutators [E_i,F_j] = delta_ij [mu_i]")
    for w, xi in cases:
        v = FockVector.basis(xi, w)
        for i in range(w.e):
            for j in range(w.e):
                try:
                    lhs = apply_E(i, apply_F(j, v)) - apply_F(j, apply_E(i, v))
                except DegenerateWeighting:
                    continue
                rhs = v.scale(q_int(weight_pairing(i, xi, w))) if i == j else FockVector.zero(w)
                res.record(lhs == rhs, lambda: (w.to_json(), xi, i, j))
    return res


def check_divided_powers(cases) -> SuiteResult:
    res = SuiteResult("divided powers are integral")
    for w, xi in cases:
        v = FockVector.basis(xi, w)
        for i in range(w.e):
            try:
                eps, phi = string_lengths(i, xi, w)
            except DegenerateWeighting:
                continue
            for op, top in (("F", phi), ("E", eps)):
                for a in range(top + 1):
                    try:
                        out = divided_power(op, i, a, v)
                        good = not out.is_zero()
                    except WklrError:
                        good = False
                    res.record(good, lambda: (w.to_json(), xi, op, i, a))
    return res


def check_crystal(cases) -> SuiteResult:
    res = SuiteResult("crystal inverses and string lengths")
    for w, xi in cases:
        for i in range(w.e):
            try:
                eps, phi = string_lengths(i, xi, w)
                f = crystal_F(i, xi, w)
                e_ = crystal_E(i, xi, w)
                mu = weight_pairing(i, xi, w)
            except DegenerateWeighting:
                continue
            good = phi - eps == mu
            good &= (f is None) == (phi == 0) and (e_ is None) == (eps == 0)
            if f is not None:
                good &= crystal_E(i, f, w) == xi and string_lengths(i, f, w) == (eps + 1, phi - 1)
            if e_ is not None:
                good &= crystal_F(i, e_, w) == xi
            res.record(good, lambda: (w.to_json(), xi, i))
    return res


def check_degrees(cases) -> SuiteResult:
    """tableauDegree = crossingDegree on every tableau for every canonical loading of the block."""
    res = SuiteResult("tableau degree equals crossing degree")
    for w, xi in cases:
        try:
            block = enumerate_block(w, content(xi, w))
            L = canonical_loading(xi, w)
        except DegenerateWeighting:
            continue
        for eta in block:
            try:
                ts = enumerate_i_tableaux(eta, L, w)
                for t in ts:
                    res.record(tableau_degree(t) == crossing_degree(t), lambda: (w.to_json(), t.to_json()))
            except DegenerateWeighting:
                continue
    return res


def check_uglovation(weightings: Iterable[Weighting], max_size: int) -> SuiteResult:
    res = SuiteResult("Uglovation preserves dominance and is idempotent")
    for w in weightings:
        try:
            u = uglovate(w)
            order = uglovation_order(w)
        except DegenerateWeighting:
            continue
        res.record(uglovate(u) == u, lambda: ("not idempotent", w.to_json()))
        for n in range(1, max_size + 1):
            shapes = enumerate_by_size(n, w.level)
            for a in shapes:
                for b in shapes:
                    try:
                        r1 = dominance_compare(a, b, w)
                    except DegenerateWeighting:
                        continue
                    r2 = dominance_compare(permute_components(a, order), permute_components(b, order), u)
                    res.record(r1 == r2, lambda: (w.to_json(), a, b))
    return res


def check_flip(cases) -> SuiteResult:
    res = SuiteResult("Koszul flip is an involution")
    for w, xi in cases:
        dual, t = koszul_flip(xi, w.charges, w.e)
        back = koszul_flip(dual, t, w.level)
        res.record(back == (tuple(xi), tuple(w.charges)), lambda: (xi, w.charges, w.e))
    return res


def check_dominance(weightings: Iterable[Weighting], max_size: int) -> SuiteResult:
    res = SuiteResult("dominance is a partial order")
    for w in weightings:
        for n in range(max_size + 1):
            shapes = enumerate_by_size(n, w.level)
            try:
                cmp = {(a, b): dominance_compare(a, b, w) for a in shapes for b in shapes}
            except DegenerateWeighting:
                continue
            geq = lambda a, b: cmp[a, b] in (Order.GREATER, Order.EQUAL)
            for a in shapes:
                res.record(cmp[a, a] is Order.EQUAL, lambda: ("reflexive", a))
                for b in shapes:
                    flip = {Order.GREATER: Order.LESS, Order.LESS: Order.GREATER}.get(cmp[a, b], cmp[a, b])
                    res.record(cmp[b, a] is flip, lambda: ("antisymmetric", a, b))
                    if a != b and cmp[a, b] is Order.EQUAL:
                        res.record(False, lambda: ("distinct shapes compare equal", a, b))
                    if not geq(a, b):
                        continue
                    for c in shapes:
                        if geq(b, c):
                            res.record(geq(a, c), lambda: ("transitive", a, b, c))
    return res


def _blocks(w: Weighting, max_size: int) -> Iterator[list[Multipartition]]:
    seen = set()
    for n in range(1, max_size + 1):
        for xi in enumerate_by_size(n, w.level):
            key = tuple(sorted(content(xi, w).items()))
            if key in seen:
                continue
            seen.add(key)
            yield enumerate_block(w, dict(key))


def check_peeling(weightings: Iterable[Weighting], max_size: int, threads: int = 1) -> SuiteResult:
    res = SuiteResult("peeling is positive and unitriangular")
    jobs = [(w, b) for w in weightings for b in _blocks(w, max_size)]

    def one(job):
        w, block = job
        try:
            return w, block, decomposition_matrix(block, w), None
        except WklrError as exc:
            return w, block, None, exc

    skipped = 0
    for w, block, D, exc in ordered_map(one, jobs, threads):
        if isinstance(exc, DegenerateWeighting):
            skipped += 1  # two canonical loading points coincide
            continue
        if D is None:
            res.record(False, lambda: (w.to_json(), block, exc))
            continue
        n = len(block)
        good = all(D.at(r, r) == ONE for r in range(n))
        for r in range(n):
            for c in range(n):
                f = D.at(r, c)
                if r != c and f:
                    good &= f.max_exp() < 0 and all(x > 0 for x in f.terms().values())
                    good &= dominance_compare(block[r], block[c], w) is Order.GREATER
        res.record(good, lambda: (w.to_json(), block))
    if skipped:
        res.notes.append(f"{skipped} blocks skipped: coinciding loading points")
    return res


def check_semi_orthogonality(presets: Iterable[str] | None = None) -> SuiteResult:
    """<u_xi, u_eta> != 0 only when eta dominates xi (or equals it)."""
    res = SuiteResult("standard basis is semi-orthogonal on the example blocks")
    names = presets or [n for n in PRESETS if n.startswith("big-example-2")] + ["big-example-1"]
    for name in names:
        p = PRESETS[name]
        w = p.weighting
        for block in _blocks(w, 2):
            try:
                data = BlockBasisData.build(block, w)
            except WklrError as exc:
                res.record(False, lambda: (name, block, exc))
                continue
            for a in block:
                ua = FockVector.basis(a, w)
                for b in block:
                    f = sesqui_form(data, ua, FockVector.basis(b, w))
                    if a == b:
                        res.record(f == ONE, lambda: (name, a, "norm", str(f)))
                    elif f:
                        res.record(dominance_compare(b, a, w) is Order.GREATER, lambda: (name, a, b, str(f)))
                    else:
                        res.record(True, None)
    return res


def run_all(max_size: int = 5, seed: int = 0, random_count: int = 200, random_max_size: int = 6,
            threads: int = 1, degree_size: int | None = None, peel_size: int | None = None) -> list[SuiteResult]:
    """Every suite: exhaustive up to max_size plus random_count seeded random instances."""
    cases = list(_cases(max_size)) + list(_random_cases(seed, random_count, random_max_size))
    fixed = fixed_weightings()
    rng = random.Random(seed + 1)
    extra_w = [random_weighting(rng) for _ in range(20)]
    deg_n = max_size if degree_size is None else degree_size
    deg_cases = list(_cases(deg_n)) + list(_random_cases(seed + 2, random_count, random_max_size))
    peel_n = max_size if peel_size is None else peel_size
    peel_w = [w for w in fixed if w.is_uglov()] + [PRESETS["big-example-1"].weighting]
    return [
        check_fock_commutators(cases),
        check_divided_powers(cases),
        check_crystal(cases),
        check_degrees(deg_cases),
        check_uglovation(fixed + extra_w, max_size),
        check_flip(cases),
        check_dominance(fixed + extra_w[:5], max_size),
        check_peeling(peel_w, peel_n, threads),
        check_semi_orthogonality(),
    ]
