"""Poset decks, mirror strategies and the insert-anywhere extension.

Run:  python demos/posets_and_extension.py
"""

from monoseq import (
    GameParams,
    boolean_lattice,
    complement_involution,
    draw_reachable,
    greedy_decreasing_decomposition,
    greedy_increasing_decomposition,
    insert_at,
    mirror_strategy,
    parity_outcome,
    principal_variation,
    safe_slot,
    solve_extended,
    solve_poset,
)

cube = boolean_lattice(3)
params = GameParams(3, 3)
print("Play on the subset lattice of {1,2,3} with a = d = 3:")
print(f"  outcome of the empty board: {solve_poset(cube, params).value}")
print(f"  cooperative draw reachable: {draw_reachable(cube, params)}")
move = mirror_strategy(cube, complement_involution(3), "order_reversing", [(1,)], params)
print(f"  mirror reply to {{1}}: {set(move) or '{}'} (the complement)")

perm = (5, 1, 4, 2, 6, 3)
inc = greedy_increasing_decomposition(perm)
dec = greedy_decreasing_decomposition(perm)
print(f"\nGreedy monotone decompositions of {perm}:")
print(f"  increasing parts: {inc.part_values(perm)}")
print(f"  decreasing parts: {dec.part_values(perm)}")

print("\nSafe slots: extend a pattern without growing either statistic:")
slot = safe_slot((2, 1, 3), 2, 2)
print(f"  (2,1,3) with r = s = 2 -> slot {slot},"
      f" giving {insert_at((2, 1, 3), *slot)}")
print(f"  the 4-point grid (2,1,4,3) has none: {safe_slot((2, 1, 4, 3), 2, 2)}")

print("\nInsert-anywhere game: outcome is pure parity of a*d:")
for a, d in [(2, 2), (3, 3), (4, 3), (5, 3)]:
    got = solve_extended(a, d).value
    print(f"  ({a},{d}): solved {got}, parity rule {parity_outcome(a, d).value}")

line = principal_variation(3, 3)
print(f"\nA principal variation of the (3,3) game: {line[1:]}")
