"""The runner-grid flip and the dual action it induces.

A charged l-multipartition becomes an l x e grid of runner abaci; reading
the grid by columns gives a charged e-multipartition. The dual operators
move one bead between neighbouring rows of the grid. They commute with
the Chevalley operators at q = 1 but not for generic q.

    python3 demos/level_rank_flip.py
"""

from wklr.abacus import koszul_flip, matrix_u
from wklr.fock import FockVector, apply_F, dual_apply_F, dual_weight
from wklr.partition import uglov_weighting

s, e = (0, 1), 3
xi = ((3, 1), (2,))
R = matrix_u(xi, s, e)
print("runner charges (rows = components):")
for row in R.u:
    print("  ", *(f"{c:3d}" for c in row))
dual, t = koszul_flip(xi, s, e)
print(f"flip: {xi} with charges {s}  ->  {dual} with charges {t}")
print(f"flip twice gives back the start: {koszul_flip(dual, t, len(s)) == (xi, s)}")

w = uglov_weighting(s, e)
print("dual weights:", [dual_weight(j, w) for j in range(len(s))], "sum", e)
u = FockVector.basis(((1,), ()), w)
for j in range(len(s)):
    a = dual_apply_F(j, apply_F(0, u))
    b = apply_F(0, dual_apply_F(j, u))
    print(f"j={j}:  dF_j F_0 u = {a}")
    print(f"      F_0 dF_j u = {b}")
    same = {k: c.at_one() for k, c in a.terms.items() if c.at_one()} == {k: c.at_one() for k, c in b.terms.items() if c.at_one()}
    print(f"      equal at q = 1: {same}")
