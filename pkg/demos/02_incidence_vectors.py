"""
Incidence vectors and their scalar products
===========================================

Every subspace A of F_q^n gets a 0/1 vector over the projective points.
The scalar product of two such vectors is [dim(A ∩ B)]_q, which is what
makes the linear-algebra bounds work.
"""

import itertools

from qoddtown.field import make_field
from qoddtown.incidence import incidence_matrix, incidence_vector, scalar_product
from qoddtown.matfq import MatrixF2, exact_rank_int, rank_f2
from qoddtown.qcount import q_int
from qoddtown.subspace import all_subspaces, enumerate_points, enumerate_subspaces, intersect

f = make_field(3)
order = enumerate_points(f, 3)
print("points of PG(2,3):", len(order))

subs = list(all_subspaces(f, 3))
vec = {s: incidence_vector(s, order) for s in subs}
mismatches = sum(
    scalar_product(vec[a], vec[b]) != q_int(intersect(a, b).k, 3)
    for a, b in itertools.product(subs, repeat=2)
)
print(f"checked {len(subs) ** 2} pairs, mismatches: {mismatches}")

# The 13 planes of F_3^3: Gram matrix is J - I mod 2
planes = list(enumerate_subspaces(f, 3, 2))
mat = incidence_matrix(planes, order)
g2 = mat.gram().mod2()
print("Gram = J - I (mod 2):", g2 == MatrixF2.all_ones_minus_identity(13))
print("rank of J_13 - I_13 over F_2:", rank_f2(g2))
print("rank of M over Q:", exact_rank_int(mat.as_int()))
