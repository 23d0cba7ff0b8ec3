"""The evaluation transform over a splitting field and the weight-product
inequality w(f) * w(f-hat) >= n.

Run:  python demos/transform_uncertainty.py
"""

from uplab import ms_forward, ms_inverse, naive_up_check, naive_up_scan

n, q = 7, 2

# a word maps to its evaluations at the powers of a canonical 7th root of
# unity; the last slot is the evaluation at 1
word = (1, 1, 0, 1, 0, 0, 0)  # 1 + x + x^3
msv = ms_forward(word, q)
print("word:           ", word)
print("transform codes:", [v.code for v in msv.values])
print("weights:        ", sum(word), "*", msv.weight, ">=", n)
print("round trip ok:  ", ms_inverse(msv) == word)

# the all-one word concentrates the transform in a single slot: the product
# w * w-hat = n * 1 shows the inequality is sharp
chk = naive_up_check((1,) * n, q)
print("\nall-one word:", chk)

# exhaustively over all 127 nonzero binary words of length 7
rep = naive_up_scan(n, q)
print(f"\nexhaustive n={n}, q={q}: min product {rep.min_product}, "
      f"{rep.equality_count} words meet it exactly, {rep.violations} violations")

# ternary behaves the same way
rep3 = naive_up_scan(7, 3)
print(f"exhaustive n=7, q=3: min product {rep3.min_product}, "
      f"violations {rep3.violations}")

# a cyclic code collects the words vanishing on a fixed set of root powers,
# so the same inequality reads d(C) * dim(C) >= n
from uplab import enumerate_codes, min_distance

print("\nper-code products at n=15, q=2:")
for c in enumerate_codes(15, 2):
    d = min_distance(c).d
    print(f"  [{c.n},{c.dim},{d}]  d*k = {d * c.dim:3d} >= 15  gen={c.gen_string()}")
