"""Graded decomposition matrices of a level-two block in three chambers.

The block is the five bipartitions of 2 with charges (0, 1), e = 2 and
kappa = -9/2. Moving theta_2 from far right of theta_1 to far left changes
the dominance order and with it the canonical basis.

    python3 demos/decomposition_matrices.py
"""

from wklr import presets
from wklr.cellular import cartan_matrix, decomposition_matrix, standard_multiplicity_columns

for name in ("big-example-2-case1", "big-example-2-case2", "big-example-2-case3"):
    p = presets.get(name)
    print(f"== {name}: {p.summary}")
    S = standard_multiplicity_columns(p.shapes, p.weighting, p.loadings)
    D = decomposition_matrix(p.shapes, p.weighting, p.loadings)
    print(D.render())
    if S != D:
        print("(peeling changed the standard columns)")
    C = cartan_matrix(D)
    print("Cartan diagonal:", ", ".join(str(C[k][k]) for k in range(len(C))))
    print()
