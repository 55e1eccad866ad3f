"""
Searching for extremal families
===============================

Exact maximum-clique search on the compatibility graph gives the true
largest family at small (n, q).  For even n and odd q this tests the
conjectured reverse-oddtown bound [n-1]_q; for even q there is no proven
bound and the search only reports what it sees.
"""

from qoddtown import SearchConfig, run_experiment

cfg = SearchConfig(time_limit=120)

batch = run_experiment("conjecture", [(2, 3), (4, 3), (4, 5)], cfg)
for r in batch.instances:
    print(f"q={r.q} n={r.n}: max {r.max_size} (optimal: {r.proven_optimal}), "
          f"proven bound {r.bound}, conjectured {r.conjectured_bound} -> {r.conjecture_verdict}")

batch = run_experiment("explore_even_q", [(3, 2), (4, 2), (3, 4), (3, 8)], cfg)
for r in batch.instances:
    print(f"{r.kind:16s} q={r.q} n={r.n}: max {r.max_size}, status {r.bound_status}, "
          f"odd-q formula would give {r.reference_bound} -> {r.verdict}")
