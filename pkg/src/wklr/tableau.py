"""Loadings, D-tableaux and i-tableaux, and the degree of a tableau.

Entries live in ``EntryPos``: a rational plus a formal infinitesimal
multiple ``eps``. The canonical loading of a shape puts box (i, j, m) at
``EntryPos(theta_m + kappa*(j - i), i + j)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DegenerateWeighting, WklrError
from .partition import (
    Box,
    Multipartition,
    Weighting,
    addable_cells,
    boxes,
    content,
    format_rational,
    residue,
    size,
)
from .ring import rational


@dataclass(frozen=True, order=True)
class EntryPos:
    real: Fraction
    eps: int = 0

    def __post_init__(self):
        object.__setattr__(self, "real", rational(self.real))
        object.__setattr__(self, "eps", int(self.eps))

    def shift(self, dx) -> "EntryPos":
        return EntryPos(self.real + dx, self.eps)

    def __str__(self):
        r = format_rational(self.real)
        return r if self.eps == 0 else f"{r}@{self.eps}"

    @classmethod
    def parse(cls, text) -> "EntryPos":
        if isinstance(text, EntryPos):
            return text
        if isinstance(text, str) and "@" in text:
            r, e = text.split("@", 1)
            return cls(rational(r), int(e))
        return cls(rational(text), 0)


@dataclass(frozen=True)
class Loading:
    """Finitely many distinct positions, each labelled by a residue (or None)."""

    points: tuple[tuple[EntryPos, int | None], ...]

    def __post_init__(self):
        pts = tuple(sorted((EntryPos.parse(p), l) for p, l in self.points))
        for (a, _), (b, _) in zip(pts, pts[1:]):
            if a == b:
                raise DegenerateWeighting(f"loading position {a} occurs twice")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, pairs: Iterable[tuple[object, int | None]]) -> "Loading":
        return cls(tuple((EntryPos.parse(p), l) for p, l in pairs))

    @classmethod
    def unlabelled(cls, positions: Iterable) -> "Loading":
        return cls(tuple((EntryPos.parse(p), None) for p in positions))

    def __len__(self):
        return len(self.points)

    def positions(self) -> list[EntryPos]:
        return [p for p, _ in self.points]

    def content(self, e: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for _, l in self.points:
            out[l % e] = out.get(l % e, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> list:
        return [[str(p), l] for p, l in self.points]

    @classmethod
    def from_json(cls, obj) -> "Loading":
        if not isinstance(obj, list):
            raise ValueError("loading must be a list of [position, residue] pairs")
        pairs = []
        for item in obj:
            if not isinstance(item, list) or len(item) != 2:
                raise ValueError("loading entries must be [position, residue] pairs")
            pairs.append((EntryPos.parse(item[0]), item[1]))
        return cls.of(pairs)


@dataclass(frozen=True)
class ITableau:
    shape: Multipartition
    fill: tuple[tuple[Box, EntryPos], ...]
    weighting: Weighting

    def entry(self, b: Box) -> EntryPos | None:
        return self._map().get(b)

    def _map(self) -> dict[Box, EntryPos]:
        m = self.__dict__.get("_fillmap")
        if m is None:
            m = dict(self.fill)
            object.__setattr__(self, "_fillmap", m)
        return m

    def as_dict(self) -> dict[Box, EntryPos]:
        return dict(self._map())

    def to_json(self) -> dict:
        return {
            "shape": [list(p) for p in self.shape],
            "entries": {b.key(): str(p) for b, p in self.fill},
        }

    @classmethod
    def from_json(cls, obj, w: Weighting) -> "ITableau":
        try:
            shape = tuple(tuple(p) for p in obj["shape"])
            entries = obj["entries"]
        except (KeyError, TypeError):
            raise ValueError("tableau needs fields 'shape' and 'entries'") from None
        fill = tuple(sorted((Box.parse(k), EntryPos.parse(v)) for k, v in entries.items()))
        return cls(shape, fill, w)


def canonical_position(b: Box, w: Weighting) -> EntryPos:
    return EntryPos(w.theta[b.m - 1] + w.kappa * (b.j - b.i), b.i + b.j)


def canonical_loading(xi: Multipartition, w: Weighting) -> Loading:
    return Loading(tuple((canonical_position(b, w), residue(b, w)) for b in boxes(xi)))


def far_apart_positions(m: int, w: Weighting, spacing=None) -> list[Fraction]:
    """m points, all to the right of every theta and pairwise further apart than |kappa|."""
    gap = spacing if spacing is not None else 2 * abs(w.kappa) + 1
    start = max(w.theta) + gap
    return [start + k * gap for k in range(m)]


def _valid_at(b: Box, v: EntryPos, fill: Mapping[Box, EntryPos], w: Weighting) -> bool:
    k = w.kappa
    if b.i == 1 and b.j == 1 and not v > EntryPos(w.theta[b.m - 1], 0):
        return False
    up = fill.get(Box(b.i - 1, b.j, b.m))
    if up is not None and not v > up.shift(-k):
        return False
    left = fill.get(Box(b.i, b.j - 1, b.m))
    if left is not None and not v > left.shift(k):
        return False
    return True


def is_tableau(xi: Multipartition, fill: Mapping[Box, EntryPos], w: Weighting, loading: Loading | None = None) -> bool:
    cells = list(boxes(xi))
    if set(cells) != set(fill) or len(set(fill.values())) != len(cells):
        return False
    if loading is not None:
        labels = dict(loading.points)
        if set(labels) != set(fill.values()):
            return False
        if any(labels[fill[b]] is not None and labels[fill[b]] != residue(b, w) for b in cells):
            return False
    return all(_valid_at(b, fill[b], fill, w) for b in cells)


def _enumerate(xi: Multipartition, loading: Loading, w: Weighting, check_labels: bool) -> list[ITableau]:
    cells = list(boxes(xi))  # row-major within each component: predecessors come first
    if len(cells) != len(loading):
        raise WklrError(f"shape has {len(cells)} boxes but the loading has {len(loading)} points")
    pts = loading.points
    res = [residue(b, w) for b in cells]
    used = [False] * len(pts)
    fill: dict[Box, EntryPos] = {}
    out: list[ITableau] = []

    def rec(k: int):
        if k == len(cells):
            out.append(ITableau(xi, tuple(sorted(fill.items())), w))
            return
        b = cells[k]
        for idx, (p, lab) in enumerate(pts):
            if used[idx]:
                continue
            if check_labels and lab % w.e != res[k]:
                continue
            if not _valid_at(b, p, fill, w):
                continue
            used[idx] = True
            fill[b] = p
            rec(k + 1)
            del fill[b]
            used[idx] = False

    rec(0)
    return out


def enumerate_d_tableaux(xi: Multipartition, D: Iterable, w: Weighting) -> list[ITableau]:
    """All D-tableaux of shape xi; residues are not checked."""
    return _enumerate(xi, Loading.unlabelled(D), w, check_labels=False)


def enumerate_i_tableaux(xi: Multipartition, L: Loading, w: Weighting) -> list[ITableau]:
    if len(L) == size(xi) and L.content(w.e) != content(xi, w):
        return []
    return _enumerate(xi, L, w, check_labels=True)


class Status(Enum):
    ADDABLE = "Addable"
    REMOVABLE = "Removable"
    NEITHER = "Neither"


def relative_status(S: ITableau, b: Box, h: EntryPos) -> Status:
    """Addable/removable status of a cell relative to the value h.

    Cells outside the shape have entry +infinity, so they can only be
    addable. Missing neighbours count as satisfying their inequality.
    """
    k = S.weighting.kappa
    fill = S._map()
    v = fill.get(b)
    if v is None or v > h:
        up = fill.get(Box(b.i - 1, b.j, b.m))
        left = fill.get(Box(b.i, b.j - 1, b.m))
        if b.i > 1 and up is None or b.j > 1 and left is None:
            return Status.NEITHER
        if b.i == 1 and b.j == 1 and not h > EntryPos(S.weighting.theta[b.m - 1]):
            return Status.NEITHER
        if (up is None or up < h.shift(k)) and (left is None or left < h.shift(-k)):
            return Status.ADDABLE
        return Status.NEITHER
    if v < h:
        right = fill.get(Box(b.i, b.j + 1, b.m))
        down = fill.get(Box(b.i + 1, b.j, b.m))
        if (right is None or right > h.shift(k)) and (down is None or down > h.shift(-k)):
            return Status.REMOVABLE
    return Status.NEITHER


def tableau_degree(S: ITableau) -> int:
    """Sum over boxes b (entry h) of addable minus removable same-residue cells right of b.

    "Right of" compares canonical loading positions. Besides the boxes of
    the shape, the addable cells just outside it take part (their entry is
    +infinity), which is how the red-line contributions show up.
    """
    w = S.weighting
    cells = list(boxes(S.shape)) + addable_cells(S.shape)
    pos = {c: canonical_position(c, w) for c in cells}
    res = {c: residue(c, w) for c in cells}
    fill = S._map()
    deg = 0
    for b, h in fill.items():
        for c in cells:
            if c == b or res[c] != res[b] or not pos[c] > pos[b]:
                continue
            st = relative_status(S, c, h)
            if st is Status.ADDABLE:
                deg += 1
            elif st is Status.REMOVABLE:
                deg -= 1
    return deg


def tautological_tableau(xi: Multipartition, w: Weighting) -> ITableau:
    return ITableau(xi, tuple(sorted((b, canonical_position(b, w)) for b in boxes(xi))), w)


def russian_reading_word(S: ITableau) -> list[int]:
    w = S.weighting
    return [residue(b, w) for b in sorted(boxes(S.shape), key=lambda b: canonical_position(b, w))]
