"""Dense-order play: theorems, duality and P-position certificates.

Run:  python demos/dense_order_certificates.py
"""

from monoseq import (
    GameParams,
    Mode,
    colour_children,
    duality_check,
    p4_set,
    p5_set,
    solve_q,
    typed_reachable_graph,
    verify_exact_pset,
    verify_sufficient_pset,
)

print("Outcomes of (a, d, Q), rows d = 2..5, columns a = d..10:")
for d in range(2, 6):
    line = " ".join(solve_q(GameParams(a, d)).value for a in range(d, 11))
    print(f"  d={d}: {line}")

print("\nNormal play at (a, d) equals misere play at (a-1, d-1):")
for a, d in [(3, 3), (4, 4), (5, 3), (6, 5)]:
    normal = solve_q(GameParams(a, d)).value
    misere = solve_q(GameParams(a - 1, d - 1, Mode.MISERE)).value
    print(f"  ({a},{d}) normal = {normal}, ({a-1},{d-1}) misere = {misere},"
          f" duality_check: {duality_check(a, d)}")

a = 6
print(f"\nThe non-terminal P-positions of ({a}, 4, Q): {sorted(p4_set(a))}")
print(f"  exact certificate verified: {verify_exact_pset(p4_set(a), GameParams(a, 4))}")
graph = typed_reachable_graph(GameParams(a, 4))
for w in sorted(p4_set(a)):
    print(f"  solver agrees {w or '(empty)'} is {graph[w].value};"
          f" children {', '.join(colour_children(w))} are all N")

print(f"\nA sufficient P-set for ({a}, 5, Q): {sorted(p5_set(a))}")
print(f"  sufficiency certificate verified:"
      f" {verify_sufficient_pset(p5_set(a), GameParams(a, 5))}")
