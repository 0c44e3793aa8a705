"""Count the three families side by side and exhibit the shared
generating function.

All three columns agree with the closed formula, and the coefficient
table of the map series (shifted by one t and one w) reproduces the
interval series exactly.
"""

from tamari_atlas import (count_formula, enum_degree_trees, enum_maps_oracle,
                          enum_new_intervals, gf_table)

print(f"{'size':>4} {'intervals':>9} {'trees':>9} {'maps':>9} {'formula':>9}")
for n in range(1, 6):
    print(f"{n:>4} {len(enum_new_intervals(n + 1)):>9} "
          f"{len(enum_degree_trees(n)):>9} {len(enum_maps_oracle(n)):>9} "
          f"{count_formula(n + 1):>9}")

maps_gf = gf_table('maps', 4)
ints_gf = gf_table('intervals', 5)
shifted = {(n + 1, i, j, k, l - 1): c
           for (n, i, j, k, l), c in maps_gf.items()}
print("\nshifted map table equals interval table up to t^5:",
      shifted == ints_gf)
print("sample coefficients (n, x-exp, u, v, w -> count):")
for key in sorted(ints_gf)[:6]:
    print(f"  {key} -> {ints_gf[key]}")
