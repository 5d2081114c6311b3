"""Multipartitions, weightings, residues and the weighted dominance order.

Conventions used throughout the package:

* a box is ``Box(i, j, m)``: row ``i``, column ``j``, component ``m``, all 1-based;
* the residue of a box is ``(s_m + j - i) mod e``;
* the x-coordinate of a box is ``theta_m + kappa * (j - i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DegenerateWeighting, WklrError
from .ring import format_rational, rational

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


class Box(NamedTuple):
    i: int
    j: int
    m: int

    def key(self) -> str:
        return f"{self.i},{self.j},{self.m}"

    @classmethod
    def parse(cls, text: str) -> "Box":
        try:
            i, j, m = (int(t) for t in text.split(","))
        except ValueError:
            raise ValueError(f"bad box key {text!r}, expected 'i,j,m'") from None
        return cls(i, j, m)


def partition(parts: Iterable[int]) -> Partition:
    out = tuple(int(p) for p in parts)
    if any(p <= 0 for p in out):
        out = tuple(p for p in out if p != 0)
        if any(p < 0 for p in out):
            raise ValueError(f"negative part in {list(parts)}")
    if any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"parts {list(out)} are not weakly decreasing")
    return out


def multipartition(obj: Iterable[Iterable[int]]) -> Multipartition:
    return tuple(partition(p) for p in obj)


def size(xi: Multipartition) -> int:
    return sum(sum(p) for p in xi)


def boxes(xi: Multipartition) -> Iterator[Box]:
    for m, p in enumerate(xi, start=1):
        for i, row in enumerate(p, start=1):
            for j in range(1, row + 1):
                yield Box(i, j, m)


def contains(xi: Multipartition, b: Box) -> bool:
    if not 1 <= b.m <= len(xi) or b.i < 1 or b.j < 1:
        return False
    p = xi[b.m - 1]
    return b.i <= len(p) and b.j <= p[b.i - 1]


def add_box(xi: Multipartition, b: Box) -> Multipartition:
    p = list(xi[b.m - 1])
    if b.i == len(p) + 1:
        p.append(1)
    else:
        p[b.i - 1] += 1
    return xi[: b.m - 1] + (tuple(p),) + xi[b.m:]


def remove_box(xi: Multipartition, b: Box) -> Multipartition:
    p = list(xi[b.m - 1])
    p[b.i - 1] -= 1
    if p[b.i - 1] == 0:
        p.pop()
    return xi[: b.m - 1] + (tuple(p),) + xi[b.m:]


def addable_cells(xi: Multipartition) -> list[Box]:
    out = []
    for m, p in enumerate(xi, start=1):
        for i in range(1, len(p) + 2):
            j = (p[i - 1] if i <= len(p) else 0) + 1
            if i == 1 or p[i - 2] >= j:
                out.append(Box(i, j, m))
    return out


def removable_cells(xi: Multipartition) -> list[Box]:
    out = []
    for m, p in enumerate(xi, start=1):
        for i in range(1, len(p) + 1):
            if i == len(p) or p[i] < p[i - 1]:
                out.append(Box(i, p[i - 1], m))
    return out


@dataclass(frozen=True)
class Weighting:
    """kappa, the loading points theta_m of the components, integer charges, modulus e."""

    kappa: Fraction
    theta: tuple[Fraction, ...]
    charges: tuple[int, ...]
    e: int

    def __post_init__(self):
        object.__setattr__(self, "kappa", rational(self.kappa))
        object.__setattr__(self, "theta", tuple(rational(t) for t in self.theta))
        object.__setattr__(self, "charges", tuple(int(s) for s in self.charges))
        object.__setattr__(self, "e", int(self.e))
        if self.kappa == 0:
            raise WklrError("kappa must be nonzero")
        if self.e < 1:
            raise WklrError("the modulus e must be positive")
        if len(self.theta) != len(self.charges):
            raise WklrError("theta and charges must have the same length")
        if not self.theta:
            raise WklrError("a weighting needs at least one component")

    @classmethod
    def make(cls, kappa, theta: Sequence, charges: Sequence[int], e: int | None = None) -> "Weighting":
        kappa = rational(kappa)
        if e is None:
            e = kappa.denominator
        return cls(kappa, tuple(theta), tuple(charges), e)

    @property
    def level(self) -> int:
        return len(self.theta)

    def uglov_sign(self) -> int | None:
        """+1 or -1 if this is an Uglov weighting, else None."""
        for sign in (1, -1):
            if self == uglov_weighting(self.charges, self.e, sign):
                return sign
        return None

    def is_uglov(self) -> bool:
        return self.uglov_sign() is not None

    def to_json(self) -> dict:
        return {
            "kappa": format_rational(self.kappa),
            "theta": [format_rational(t) for t in self.theta],
            "charges": list(self.charges),
            "e": self.e,
        }

    @classmethod
    def from_json(cls, obj) -> "Weighting":
        if not isinstance(obj, dict):
            raise ValueError("weighting must be a JSON object")
        for key in ("kappa", "theta", "charges"):
            if key not in obj:
                raise ValueError(f"weighting is missing field '{key}'")
        try:
            kappa = rational(obj["kappa"])
        except (TypeError, ValueError, ZeroDivisionError):
            raise ValueError("weighting field 'kappa' is not a rational") from None
        try:
            theta = [rational(t) for t in obj["theta"]]
        except (TypeError, ValueError, ZeroDivisionError):
            raise ValueError("weighting field 'theta' must be a list of rationals") from None
        charges = obj["charges"]
        if not isinstance(charges, list) or not all(isinstance(s, int) for s in charges):
            raise ValueError("weighting field 'charges' must be a list of integers")
        e = obj.get("e")
        if e is not None and (not isinstance(e, int) or e < 1):
            raise ValueError("weighting field 'e' must be a positive integer")
        return cls.make(kappa, theta, charges, e)


class Order(Enum):
    EQUAL = "Equal"
    GREATER = "Greater"
    LESS = "Less"
    INCOMPARABLE = "Incomparable"


def residue(b: Box, w: Weighting) -> int:
    return (w.charges[b.m - 1] + b.j - b.i) % w.e


def x_coord(b: Box, w: Weighting) -> Fraction:
    return w.theta[b.m - 1] + w.kappa * (b.j - b.i)


def content(xi: Multipartition, w: Weighting) -> dict[int, int]:
    out: dict[int, int] = {}
    for b in boxes(xi):
        r = residue(b, w)
        out[r] = out.get(r, 0) + 1
    return dict(sorted(out.items()))


def _check_distinct_x(cells: Sequence[Box], w: Weighting) -> None:
    seen: dict[Fraction, Box] = {}
    for b in cells:
        x = x_coord(b, w)
        if x in seen:
            raise DegenerateWeighting(f"boxes {tuple(seen[x])} and {tuple(b)} share x-coordinate {format_rational(x)}")
        seen[x] = b


def i_boxes(xi: Multipartition, i: int, w: Weighting) -> tuple[list[Box], list[Box]]:
    """Addable and removable boxes of residue i, each sorted by x-coordinate.

    Raises DegenerateWeighting when any two of them share an x-coordinate.
    """
    i %= w.e
    add = [b for b in addable_cells(xi) if residue(b, w) == i]
    rem = [b for b in removable_cells(xi) if residue(b, w) == i]
    _check_distinct_x(add + rem, w)
    key = lambda b: x_coord(b, w)
    return sorted(add, key=key), sorted(rem, key=key)


def addable_boxes(xi: Multipartition, i: int, w: Weighting) -> list[Box]:
    return i_boxes(xi, i, w)[0]


def removable_boxes(xi: Multipartition, i: int, w: Weighting) -> list[Box]:
    return i_boxes(xi, i, w)[1]


def _x_profile(xi: Multipartition, w: Weighting) -> dict[int, list[Fraction]]:
    prof: dict[int, list[Fraction]] = {}
    for b in boxes(xi):
        prof.setdefault(residue(b, w), []).append(x_coord(b, w))
    for v in prof.values():
        v.sort()
    return prof


def _geq(p: dict[int, list[Fraction]], r: dict[int, list[Fraction]]) -> bool:
    # with equal counts per residue, prefix-count domination is a pointwise
    # comparison of the sorted coordinate lists
    return all(a <= b for res in p for a, b in zip(p[res], r[res]))


def dominance_compare(xi: Multipartition, eta: Multipartition, w: Weighting) -> Order:
    """Weighted dominance: more boxes of each residue further left is larger."""
    if xi == eta:
        return Order.EQUAL
    p, r = _x_profile(xi, w), _x_profile(eta, w)
    if {k: len(v) for k, v in p.items()} != {k: len(v) for k, v in r.items()}:
        return Order.INCOMPARABLE
    ge, le = _geq(p, r), _geq(r, p)
    if ge and not le:
        return Order.GREATER
    if le and not ge:
        return Order.LESS
    return Order.INCOMPARABLE


def c_function(xi: Multipartition, w: Weighting) -> Fraction:
    return -sum((x_coord(b, w) for b in boxes(xi)), Fraction(0))


def uglov_weighting(s: Sequence[int], e: int, sign: int = 1) -> Weighting:
    """kappa = sign/e and theta_j = kappa*s_j - j*e*kappa/l."""
    if e < 1:
        raise WklrError("e must be positive")
    if sign not in (1, -1):
        raise WklrError("sign must be +1 or -1")
    s = tuple(int(x) for x in s)
    ell = len(s)
    kappa = Fraction(sign, e)
    theta = tuple(kappa * s[j - 1] - j * e * kappa / ell for j in range(1, ell + 1))
    return Weighting(kappa, theta, s, e)


def _uglov_data(w: Weighting) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Charges and component order of the Uglovation of w."""
    e, k = w.e, w.kappa
    s1 = w.charges[0]
    t1 = w.theta[0] / k
    new_s = [s1]
    psi = [t1 - s1]
    for m in range(1, w.level):
        h = (w.charges[m] - s1) % e
        gap = (w.theta[0] - w.theta[m]) / k + h
        if gap % e == 0:
            raise DegenerateWeighting(f"components 1 and {m + 1} produce same-residue ties")
        # choose s_m = s_1 + h + e*n with psi_m inside (psi_1 - e, psi_1)
        n = -(gap // e)
        sm = s1 + h + e * int(n)
        new_s.append(sm)
        psi.append(w.theta[m] / k - sm)
    # the Uglov weighting has psi_j = -j*e/l, decreasing in j
    order = tuple(sorted(range(w.level), key=lambda m: -psi[m]))
    return tuple(new_s), order


def uglovate(w: Weighting) -> Weighting:
    """An Uglov weighting inducing the same orders on boxes.

    The components come out reordered; ``uglovation_order`` gives the order
    (a tuple of 0-based input indices) so that multipartitions can be moved
    along with ``permute_components``.
    """
    s, order = _uglov_data(w)
    return uglov_weighting([s[m] for m in order], w.e, 1 if w.kappa > 0 else -1)


def uglovation_order(w: Weighting) -> tuple[int, ...]:
    return _uglov_data(w)[1]


def permute_components(xi: Multipartition, order: Sequence[int]) -> Multipartition:
    return tuple(xi[m] for m in order)


def braid_on_weighting(g: int, w: Weighting) -> Weighting:
    """Generator sigma_g of the affine braid group acting on an Uglov weighting.

    Components travel with their charges, so slots g and g+1 (or l and 1 for
    g = 0) swap; a multipartition follows via ``braid_permutation``.
    """
    ell = w.level
    if not 0 <= g < ell:
        raise WklrError(f"generator index must be in 0..{ell - 1}")
    if not w.is_uglov():
        raise WklrError("the braid action is defined on Uglov weightings only")
    th, s = list(w.theta), list(w.charges)
    k, e = w.kappa, w.e
    if g == 0:
        if ell == 1:
            return w
        shift = k * e * (-1 + Fraction(1, ell))
        th[0], th[-1] = w.theta[-1] - shift, w.theta[0] + shift
        s[0], s[-1] = w.charges[-1], w.charges[0]
    else:
        i = g - 1
        th[i], th[i + 1] = w.theta[i + 1] + k * e / ell, w.theta[i] - k * e / ell
        s[i], s[i + 1] = w.charges[i + 1], w.charges[i]
    return Weighting(k, tuple(th), tuple(s), e)


def braid_permutation(g: int, ell: int) -> tuple[int, ...]:
    """Slot order after sigma_g, as 0-based indices of the old components."""
    order = list(range(ell))
    if g == 0:
        order[0], order[-1] = order[-1], order[0]
    else:
        order[g - 1], order[g] = order[g], order[g - 1]
    return tuple(order)


def star_weighting(w: Weighting) -> Weighting:
    """kappa -> -kappa, charges s -> (-s_l, ..., -s_1)."""
    sign = w.uglov_sign()
    if sign is None:
        raise WklrError("the star symmetry is defined on Uglov weightings only")
    return uglov_weighting([-x for x in reversed(w.charges)], w.e, -sign)


@lru_cache(maxsize=None)
def partitions_of(n: int, maxpart: int | None = None) -> tuple[Partition, ...]:
    if maxpart is None:
        maxpart = n
    if n == 0:
        return ((),)
    out = []
    for p in range(min(n, maxpart), 0, -1):
        for rest in partitions_of(n - p, p):
            out.append((p,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _multis(n: int, ell: int) -> tuple[Multipartition, ...]:
    if ell == 1:
        return tuple((p,) for p in partitions_of(n))
    out = []
    for k in range(n, -1, -1):
        for p in partitions_of(k):
            for rest in _multis(n - k, ell - 1):
                out.append((p,) + rest)
    return tuple(out)


def enumerate_by_size(n: int, ell: int, w: Weighting | None = None) -> list[Multipartition]:
    """All l-multipartitions of n; ordered by decreasing c-function when w is given."""
    out = list(_multis(n, ell))
    if w is not None:
        out.sort(key=lambda xi: (-c_function(xi, w), xi))
    return out


def enumerate_block(w: Weighting, cont: dict[int, int]) -> list[Multipartition]:
    """Multipartitions with the given residue content, by decreasing c-function."""
    cont = {r % w.e: c for r, c in cont.items() if c}
    n = sum(cont.values())
    out = [xi for xi in _multis(n, w.level) if content(xi, w) == cont]
    out.sort(key=lambda xi: (-c_function(xi, w), xi))
    return out


def _column_order_ok(xi: Multipartition, w: Weighting, w1: Weighting, w2: Weighting) -> bool:
    diags = sorted({(b.m, b.j - b.i) for b in boxes(xi)})
    pos = lambda ww, d: ww.theta[d[0] - 1] + ww.kappa * d[1]
    for a, b in itertools.permutations(diags, 2):
        if pos(w, a) > pos(w, b) and pos(w2, a) > pos(w2, b) and pos(w1, b) > pos(w1, a):
            return False
    return True


def between_check(w: Weighting, w1: Weighting, w2: Weighting, n: int) -> bool:
    """Is the column order of w1 between those of w and w2 for every size <= n?"""
    ell = w.level
    for k in range(n + 1):
        for xi in _multis(k, ell):
            if not _column_order_ok(xi, w, w1, w2):
                return False
    return True
