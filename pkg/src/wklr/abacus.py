"""Abaci of charged partitions, runner decompositions and the level-rank flip.

A partition with charge c has beads at the beta-numbers lambda_r - r + c
(r >= 1). Splitting into e runners sends position p = a*e + k (0 <= k < e)
to height a on runner k+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .partition import Multipartition, Partition, partition


@dataclass(frozen=True)
class Abacus:
    """Bead set stored as its difference from the vacuum {p < charge}."""

    charge: int
    extra: frozenset[int] = frozenset()
    missing: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "extra", frozenset(self.extra))
        object.__setattr__(self, "missing", frozenset(self.missing))
        if any(p < self.charge for p in self.extra) or any(p >= self.charge for p in self.missing):
            raise ValueError("extra beads must be >= charge and missing beads < charge")
        if len(self.extra) != len(self.missing):
            raise ValueError("bead count does not match the charge")

    def has(self, p: int) -> bool:
        if p >= self.charge:
            return p in self.extra
        return p not in self.missing

    def window(self) -> tuple[int, int]:
        """[lo, hi) outside of which the bead pattern is the vacuum one."""
        pts = set(self.extra) | set(self.missing) | {self.charge}
        return min(pts), max(pts) + 1

    def to_json(self) -> dict:
        return {"charge": self.charge, "extraBeads": sorted(self.extra), "missingBeads": sorted(self.missing)}

    @classmethod
    def from_json(cls, obj) -> "Abacus":
        try:
            return cls(int(obj["charge"]), frozenset(obj.get("extraBeads", [])), frozenset(obj.get("missingBeads", [])))
        except KeyError:
            raise ValueError("abacus is missing field 'charge'") from None


def to_abacus(lam: Partition, charge: int = 0) -> Abacus:
    lam = partition(lam)
    beads = {lam[r] - (r + 1) + charge for r in range(len(lam))}
    lo = charge - len(lam)
    extra = frozenset(p for p in beads if p >= charge)
    missing = frozenset(p for p in range(lo, charge) if p not in beads)
    return Abacus(charge, extra, missing)


def from_abacus(a: Abacus) -> tuple[Partition, int]:
    lo, hi = a.window()
    beads = [p for p in range(hi - 1, lo - 1, -1) if a.has(p)]
    parts = []
    for r, b in enumerate(beads, start=1):
        part = b + r - a.charge
        if part <= 0:
            break
        parts.append(part)
    return tuple(parts), a.charge


def _from_predicate(has, lo: int, hi: int) -> Abacus:
    """Abacus with beads given by has() on [lo, hi), full below, empty above."""
    lo, hi = min(lo, 0), max(hi, 0)

    def h(p):
        return p < lo or (p < hi and has(p))

    charge = sum(1 for p in range(0, hi) if h(p)) - sum(1 for p in range(lo, 0) if not h(p))
    span = range(min(lo, charge), max(hi, charge))
    extra = frozenset(p for p in span if p >= charge and h(p))
    missing = frozenset(p for p in span if p < charge and not h(p))
    return Abacus(charge, extra, missing)


def runner_split(a: Abacus, e: int) -> list[Abacus]:
    lo, hi = a.window()
    hlo, hhi = lo // e - 1, hi // e + 2
    out = []
    for k in range(e):
        out.append(_from_predicate(lambda h, k=k: a.has(h * e + k), hlo, hhi))
    return out


def runner_join(runners: Sequence[Abacus], e: int | None = None) -> Abacus:
    e = len(runners) if e is None else e
    if len(runners) != e:
        raise ValueError("need exactly e runners")
    lo = min(r.window()[0] for r in runners)
    hi = max(r.window()[1] for r in runners)
    return _from_predicate(lambda p: runners[p % e].has(p // e), lo * e - e, hi * e + e)


def e_core(lam: Partition, e: int, charge: int = 0) -> Partition:
    runners = runner_split(to_abacus(lam, charge), e)
    return from_abacus(runner_join([Abacus(r.charge) for r in runners], e))[0]


def e_weight(lam: Partition, e: int, charge: int = 0) -> int:
    return (sum(lam) - sum(e_core(lam, e, charge))) // e


@dataclass(frozen=True)
class RunnerMatrix:
    """l x e grid of runner abaci; u[i][j] is the charge of runner j+1 of row i+1."""

    grid: tuple[tuple[Abacus, ...], ...]
    w: int

    @property
    def u(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(r.charge for r in row) for row in self.grid)

    @property
    def row_charges(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.u)

    @property
    def column_charges(self) -> tuple[int, ...]:
        u = self.u
        return tuple(sum(row[j] for row in u) for j in range(len(u[0])))


def matrix_u(xi: Multipartition, s: Sequence[int], e: int) -> RunnerMatrix:
    if len(xi) != len(s):
        raise ValueError("need one charge per component")
    grid = tuple(tuple(runner_split(to_abacus(lam, c), e)) for lam, c in zip(xi, s))
    w = sum(e_weight(lam, e, c) for lam, c in zip(xi, s))
    return RunnerMatrix(grid, w)


def koszul_flip(xi: Multipartition, s: Sequence[int], e: int) -> tuple[Multipartition, tuple[int, ...]]:
    """Transpose the l x e runner grid; returns an e-multipartition and its charges."""
    grid = matrix_u(xi, s, e).grid
    ell = len(xi)
    dual, charges = [], []
    for j in range(e):
        lam, c = from_abacus(runner_join([grid[i][j] for i in range(ell)], ell))
        dual.append(lam)
        charges.append(c)
    return tuple(dual), tuple(charges)


def push_count(xi: Multipartition, s: Sequence[int], i: int, shift: int = 0) -> int:
    """Positions p where exactly one of row i (at p) and row i+1 (at p + shift) has a bead.

    Rows are 1-based; i = len(xi) pairs the last row with the first.
    """
    ell = len(xi)
    a = to_abacus(xi[i - 1], s[i - 1])
    b = to_abacus(xi[i % ell], s[i % ell])
    lo = min(a.window()[0], b.window()[0] - shift) - 1
    hi = max(a.window()[1], b.window()[1] - shift) + 1
    return sum(1 for p in range(lo, hi) if a.has(p) != b.has(p + shift))


def bead_displacement(xi: Multipartition, s: Sequence[int]) -> int:
    """Sum over rows of sum over beads p >= charge minus sum over gaps p < charge (of p - charge).

    Equals the total number of boxes; it is a convenient statistic to compare
    both sides of the flip.
    """
    total = 0
    for lam, c in zip(xi, s):
        a = to_abacus(lam, c)
        total += sum(p - c for p in a.extra) - sum(p - c for p in a.missing)
    return total


def swap_rows(xi: Multipartition, s: Sequence[int], j: int, e: int) -> tuple[Multipartition, tuple[int, ...]]:
    """Exchange abacus rows j and j+1 (1-based); j = 0 exchanges row l and row 1 with a shift by e.

    For j = 0 the beads of row l move to row 1 raised by e, and those of row 1
    move to row l lowered by e.
    """
    ell = len(xi)
    rows = [to_abacus(lam, c) for lam, c in zip(xi, s)]

    def moved(a: Abacus, d: int) -> Abacus:
        return Abacus(a.charge + d, frozenset(p + d for p in a.extra), frozenset(p + d for p in a.missing))

    if j % ell == 0:
        rows[0], rows[-1] = moved(rows[-1], e), moved(rows[0], -e)
    else:
        rows[j - 1], rows[j] = rows[j], rows[j - 1]
    out = [from_abacus(a) for a in rows]
    return tuple(lam for lam, _ in out), tuple(c for _, c in out)


def swap_count(xi: Multipartition, s: Sequence[int], j: int, e: int) -> int:
    """Positions where exactly one of the rows exchanged by swap_rows has a bead."""
    ell = len(xi)
    if j % ell == 0:
        return push_count(xi, s, ell, e)
    return push_count(xi, s, j)
