"""Graded cellular statistics: cell dimensions, decomposition matrices, degrees.

Graded dimensions are written as sums of q^(-deg T). With this convention
the decomposition matrices have entries in N[q^-1] off the diagonal and the
Fock operators act by F_i u_xi = sum q^(-m(eta/xi)) u_eta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateWeighting, PeelFailure
from .parallel import ordered_map
from .partition import (
    Box,
    Multipartition,
    Order,
    Weighting,
    addable_boxes,
    add_box,
    boxes,
    content,
    dominance_compare,
    removable_boxes,
    remove_box,
    residue,
    x_coord,
)
from .ring import ONE, ZERO, LaurentPoly, bar_symmetrize_head
from .tableau import EntryPos, ITableau, Loading, canonical_loading, canonical_position, enumerate_i_tableaux


# ---------------------------------------------------------------- degrees

def _crosses(a0, a1, b0, b1) -> bool:
    if a0 == b0 or a1 == b1:
        raise DegenerateWeighting("two strands meet at an end point")
    return (a0 < b0) != (a1 < b1)


def _strand_degree(strands, reds, kb: Fraction, kt: Fraction, e: int) -> int:
    """strands: (bottom, top, residue); reds: (bottom, top, charge); ghosts sit at +kappa."""
    d = 0
    n = len(strands)
    for x in range(n):
        b0, b1, rb = strands[x]
        for y in range(n):
            if x == y:
                continue
            c0, c1, rc = strands[y]
            if x < y and rb == rc and _crosses(b0, b1, c0, c1):
                d -= 2
            if rc == (rb - 1) % e and _crosses(b0, b1, c0.shift(kb), c1.shift(kt)):
                d += 1
        for r0, r1, s in reds:
            if rb == s % e and _crosses(b0, b1, r0, r1):
                d += 1
    return d


def crossing_degree(S: ITableau) -> int:
    """Degree of the diagram joining the entries of S to the canonical loading."""
    w = S.weighting
    strands = [(h, canonical_position(b, w), residue(b, w)) for b, h in S.fill]
    reds = [(EntryPos(t), EntryPos(t), s) for t, s in zip(w.theta, w.charges)]
    return _strand_degree(strands, reds, w.kappa, w.kappa, w.e)


def interpolation_degree(xi: Multipartition, w_top: Weighting, w_bottom: Weighting,
                         order: Sequence[int] | None = None) -> int:
    """Degree of the straight-line diagram from the loading of xi under w_bottom to w_top.

    ``order[k]`` is the component of xi (0-based, w_bottom indexing) placed
    in slot k of w_top; by default slots match.
    """
    ell = len(xi)
    order = tuple(range(ell)) if order is None else tuple(order)
    slot = {m: k for k, m in enumerate(order)}
    strands = []
    for b in boxes(xi):
        m = b.m - 1
        top_box = Box(b.i, b.j, slot[m] + 1)
        rb = residue(b, w_bottom)
        if residue(top_box, w_top) != rb:
            raise DegenerateWeighting("the two weightings assign different residues")
        strands.append((canonical_position(b, w_bottom), canonical_position(top_box, w_top), rb))
    reds = [(EntryPos(w_bottom.theta[m]), EntryPos(w_top.theta[slot[m]]), w_bottom.charges[m]) for m in range(ell)]
    return _strand_degree(strands, reds, w_bottom.kappa, w_top.kappa, w_bottom.e)


def braid_interpolation_degree(xi: Multipartition, g: int, w: Weighting) -> int:
    """Degree of the interpolation from w (bottom) to sigma_g . w (top), components following their charges."""
    from .partition import braid_on_weighting, braid_permutation

    top = braid_on_weighting(g, w)
    return interpolation_degree(xi, top, w, braid_permutation(g, w.level))


# ---------------------------------------------------------- graded counts

def _tableaux(xi: Multipartition, L: Loading, w: Weighting) -> list[ITableau]:
    from .tableau import enumerate_d_tableaux

    if len(L) != sum(sum(p) for p in xi):
        return []
    if all(lab is None for _, lab in L.points):
        return enumerate_d_tableaux(xi, L.positions(), w)
    return enumerate_i_tableaux(xi, L, w)


def graded_cell_dim(xi: Multipartition, L: Loading, w: Weighting) -> LaurentPoly:
    """Sum of q^(-deg T) over the L-tableaux T of shape xi.

    An unlabelled loading counts D-tableaux (no residue condition).
    """
    from .tableau import tableau_degree

    terms: dict[int, int] = {}
    for T in _tableaux(xi, L, w):
        d = -tableau_degree(T)
        terms[d] = terms.get(d, 0) + 1
    return LaurentPoly(terms)


def _shapes_for(L: Loading, w: Weighting) -> list[Multipartition]:
    from .partition import enumerate_block, enumerate_by_size

    if all(lab is None for _, lab in L.points):
        return enumerate_by_size(len(L), w.level, w)
    return enumerate_block(w, L.content(w.e))


def graded_hom_dim(L1: Loading, L2: Loading, w: Weighting) -> LaurentPoly:
    """Graded rank of e_L1 T e_L2 computed from the cellular basis."""
    if len(L1) != len(L2):
        return ZERO
    total = ZERO
    for xi in _shapes_for(L1, w):
        a = graded_cell_dim(xi, L1, w)
        if a:
            total = total + a * graded_cell_dim(xi, L2, w)
    return total


@dataclass(frozen=True)
class GradedMatrix:
    rows: tuple
    cols: tuple
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols) for r in self.entries):
            raise ValueError("matrix entries do not match the index sizes")

    def column(self, c: int) -> list[LaurentPoly]:
        return [row[c] for row in self.entries]

    def at(self, r: int, c: int) -> LaurentPoly:
        return self.entries[r][c]

    def to_json(self) -> dict:
        def label(x):
            if isinstance(x, Loading):
                return x.to_json()
            return [list(p) for p in x]

        return {
            "rows": [label(r) for r in self.rows],
            "cols": [label(c) for c in self.cols],
            "entries": [[f.to_json() for f in row] for row in self.entries],
        }

    def render(self) -> str:
        cells = [[str(f) for f in row] for row in self.entries]
        width = max([len(c) for row in cells for c in row] + [1])
        names = [_shape_str(r) if not isinstance(r, Loading) else str(r) for r in self.rows]
        nw = max(len(n) for n in names) if names else 0
        return "\n".join(n.ljust(nw) + "  " + "  ".join(c.rjust(width) for c in row) for n, row in zip(names, cells))


def _shape_str(xi) -> str:
    return "(" + "|".join(",".join(map(str, p)) if p else "-" for p in xi) + ")"


def standard_multiplicity_columns(block: Sequence[Multipartition], w: Weighting,
                                  loadings: Sequence[Loading] | None = None, threads: int = 1) -> GradedMatrix:
    """Entry (xi, L) is the graded multiplicity of S_xi in the projective P_L.

    Without explicit loadings the canonical loadings of the block are used,
    in block order.
    """
    block = list(block)
    if loadings is None:
        loadings = [canonical_loading(xi, w) for xi in block]
    rows = ordered_map(lambda xi: [graded_cell_dim(xi, L, w) for L in loadings], block, threads)
    return GradedMatrix(block, loadings, rows)


def decomposition_matrix(block: Sequence[Multipartition], w: Weighting,
                         loadings: Sequence[Loading] | None = None, threads: int = 1) -> GradedMatrix:
    """Canonical-basis coefficients: peel the standard multiplicity columns."""
    return peel_canonical_basis(standard_multiplicity_columns(block, w, loadings, threads), w)


def peel_canonical_basis(M: GradedMatrix, w: Weighting) -> GradedMatrix:
    """Strip bar-invariant multiples of other columns until each is canonical.

    Column c leads at row c. Every other nonzero entry of column c must sit
    on a shape strictly above rows[c] in the dominance order of w; those
    rows are visited nearest first (increasing c-function).
    """
    from .partition import c_function

    n = len(M.rows)
    if len(M.cols) != n:
        raise PeelFailure("peeling needs a square matrix")
    cval = [c_function(xi, w) for xi in M.rows]
    done: dict[int, list[LaurentPoly]] = {}
    for c in sorted(range(n), key=lambda k: -cval[k]):
        v = M.column(c)
        if v[c] != ONE:
            raise PeelFailure(f"diagonal entry {c} is {v[c]}, expected 1")
        above = []
        for r in range(n):
            if r == c or not v[r]:
                continue
            if dominance_compare(M.rows[r], M.rows[c], w) is not Order.GREATER:
                raise PeelFailure(f"column {c} has an entry at row {r}, which is not above its leading shape")
            above.append(r)
        for r in sorted(above, key=lambda k: cval[k]):
            f = v[r]
            if not f:
                continue
            coef = bar_symmetrize_head(f)
            if not coef:
                continue
            if any(x < 0 for x in coef.terms().values()):
                raise PeelFailure(f"negative peeling coefficient {coef} at row {r}, column {c}")
            v = [a - coef * b for a, b in zip(v, done[r])]
        if any(v[r] and v[r].max_exp() >= 0 for r in range(n) if r != c):
            raise PeelFailure(f"column {c} did not reach q^-1 Z[q^-1] off the diagonal")
        done[c] = v
    entries = [[done[c][r] for c in range(n)] for r in range(n)]
    return GradedMatrix(M.rows, M.cols, entries)


def cartan_matrix(M: GradedMatrix) -> list[list[LaurentPoly]]:
    """C = D^T D; symmetric by construction of its entries."""
    n = len(M.cols)
    out = []
    for a in range(n):
        row = []
        for b in range(n):
            acc = ZERO
            for r in range(len(M.rows)):
                acc = acc + M.entries[r][a] * M.entries[r][b]
            row.append(acc)
        out.append(row)
    return out


# ------------------------------------------------------------- branching

def _right_count(xi: Multipartition, b: Box, w: Weighting, side: int) -> int:
    """Addable minus removable boxes of b's residue strictly right (side=1) or left (side=-1) of b."""
    i = residue(b, w)
    x = x_coord(b, w)
    add = addable_boxes(xi, i, w)
    rem = removable_boxes(xi, i, w)
    sel = (lambda c: x_coord(c, w) > x) if side > 0 else (lambda c: x_coord(c, w) < x)
    return sum(1 for c in add if c != b and sel(c)) - sum(1 for c in rem if c != b and sel(c))


def branch_induce(xi: Multipartition, w: Weighting, i: int | None = None) -> list[tuple[Multipartition, int]]:
    """(xi with the h-th addable box added, delta_h), boxes left to right.

    delta_h counts addable minus removable boxes of the same residue right
    of the added box; restrict to residue i when given.
    """
    from .partition import addable_cells

    cells = [b for b in addable_cells(xi) if i is None or residue(b, w) == i % w.e]
    cells.sort(key=lambda b: x_coord(b, w))
    return [(add_box(xi, b), _right_count(xi, b, w, 1)) for b in cells]


def branch_restrict(xi: Multipartition, w: Weighting, i: int | None = None) -> list[tuple[Multipartition, int]]:
    """(xi with the p-th removable box removed, shift), boxes left to right.

    The shift counts addable minus removable boxes of the same residue left
    of the removed box, both taken in the smaller shape.
    """
    from .partition import removable_cells

    cells = [b for b in removable_cells(xi) if i is None or residue(b, w) == i % w.e]
    cells.sort(key=lambda b: x_coord(b, w))
    out = []
    for b in cells:
        eta = remove_box(xi, b)
        out.append((eta, _right_count(eta, b, w, -1)))
    return out
