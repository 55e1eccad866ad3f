"""
Finite fields and q-counting
============================

Build a few small fields, look at their arithmetic, and check the
Gaussian binomials against brute-force enumeration of subspaces.
"""

from qoddtown import make_field, q_binomial, q_int, subspace_count, enumerate_subspaces

# F_9 is F_3[x] / (x^2 + 1); the element code 3 stands for x
f9 = make_field(9)
print(f9, "modulus (constant term first):", f9.modulus)
print("x * x =", f9.mul(3, 3), "  (that is -1 = 2)")
print("inverse of x:", f9.inv(3))

# [n]_q counts the points of the projective space, and tends to n at q = 1
for q in (1, 2, 3, 4):
    print(f"[4]_{q} =", q_int(4, q))

# Gaussian binomials count k-dimensional subspaces
f3 = make_field(3)
for k in range(5):
    listed = sum(1 for _ in enumerate_subspaces(f3, 4, k))
    print(f"k={k}: binom(4,{k})_3 = {q_binomial(4, k, 3):4d}, enumerated {listed:4d}")
print("all subspaces of F_3^4:", subspace_count(4, 3))
