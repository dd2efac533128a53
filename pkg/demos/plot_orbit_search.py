"""
Searching over power classes
============================

With a square Delta a regular PDS is a union of power classes, so the search
only has to choose classes instead of elements.
"""

import time

from pdskit import SearchProblem, parse_group, paley_params, power_class_partition, search
from pdskit.search import BRUTE, mixed_orbit_closure_check, multiplier_closure_check

G = parse_group("Z5^2")
classes = power_class_partition(G)
print(len(classes), "classes of sizes", sorted({len(c) for c in classes}))

for mode, prune in [("orbit", True), ("orbit", False), (BRUTE, False)]:
    t0 = time.perf_counter()
    result = search(SearchProblem(G, paley_params(25), mode=mode), prune=prune)
    dt = time.perf_counter() - t0
    print(f"{mode:5s} prune={prune!s:5s} solutions={len(result.solutions)} "
          f"nodes={result.nodes_explored} {dt * 1000:.1f} ms")

# every solution is closed under multipliers and under the mixed orbits
D = result.solutions[0]
print(multiplier_closure_check(D), mixed_orbit_closure_check(D))

# Z13 has nonsquare Delta, so only the unrestricted mode applies
z13 = search(SearchProblem(parse_group("Z13"), paley_params(13), mode=BRUTE))
for D in z13.solutions:
    print(sorted(g[0] for g in D.members))

# a larger class space: 34 power classes in Z3^2 x Z5^2
print(len(power_class_partition(parse_group("Z3^2xZ5^2"))))
