"""Uglovation and the affine braid action on weightings.

Every weighting with distinct loading points has an Uglov weighting with
the same dominance order (after reordering components). The braid
generators act on Uglov weightings; the degree of the straight-line
interpolation between a weighting and its image is read off the abacus.

    python3 demos/uglov_and_braids.py
"""

from fractions import Fraction

from wklr.abacus import swap_count
from wklr.cellular import braid_interpolation_degree
from wklr.partition import Weighting, braid_on_weighting, enumerate_by_size, uglovate, uglovation_order

w = Weighting.make(Fraction(-7, 3), [0, Fraction(5, 2), -4], [0, 1, 2], 3)
u = uglovate(w)
print("weighting ", w.to_json())
print("uglovated ", u.to_json(), "component order", [m + 1 for m in uglovation_order(w)])

top = braid_on_weighting(2, u)
print("sigma_2 . ", top.to_json())
empty = ((), (), ())
m0 = swap_count(empty, u.charges, 2, u.e)
print("shape              degree  swap count")
for xi in enumerate_by_size(2, 3, u):
    d = braid_interpolation_degree(xi, 2, u)
    m = swap_count(xi, u.charges, 2, u.e)
    print(f"{str(xi):20s} {d:5d}  {m:5d}   2d == m - m0: {2 * d == m - m0}")
