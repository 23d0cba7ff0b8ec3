"""Progression-free subsets of Z/nZ and what they say about the cyclic-code
invariant at prime length.

Run:  python demos/progression_bounds.py
"""

from uplab import ap_scan_bound, mu, prop_ram_grid_lower, prop_ram_lower, szemeredi_r

# the extremal function r_m(n): largest subset of Z/nZ with no length-m
# progression {a + k*b}, b != 0, progressions read as sets (they may fold)
print("r_m(9) and the scan formula m + 9 - r_m(9):")
bound9, rows = ap_scan_bound(9, with_rows=True)
for m, r, s in rows:
    print(f"  m={m}: r={r}  ->  {s}")
print("formula minimum:", bound9)

# at composite length the scan bound can exceed the invariant: the 9th roots
# of unity include 3rd roots, which breaks the progression argument
print("\nmu(F_2, 9) =", mu(9, 2).mu, " < ", bound9, " (composite length: bound fails)")

# at prime length the bound is a theorem; sometimes it is tight
print("\nprime lengths:")
for p in (7, 11, 13, 17):
    bound = prop_ram_lower(p, 2)
    print(f"  p={p}: scan bound {bound} <= mu = {mu(p, 2).mu}")

# the two-direction (grid) patterns give an a-priori incomparable bound
print("\ngrid-pattern variant:")
for p in (7, 11):
    rep = prop_ram_grid_lower(p, 2)
    print(f"  p={p}: grid bound {rep.bound_grid}, plain bound {rep.bound_ap}, mu {rep.mu}")

# witnesses are actual extremal sets
res = szemeredi_r(3, 13)
print(f"\nlargest 3-progression-free subset of Z/13: {res.witness} "
      f"(size {res.value}, {res.nodes} search nodes)")
