"""Codes of designed rate from the factor census of x^(q^p - 1) - 1, and the
closed-form evaluators that control how far the construction can reach.

Run:  python demos/code_construction.py
"""

from uplab import (ball_volume_upper, construction_demo, entropy, f_alpha_sweep,
                   lambda_n_bound, plotkin_lambda_cap)

# x^n - 1 with n = q^p - 1 splits into q-1 linear factors and s = (n-q+1)/p
# factors of degree p; dropping a fraction R of the degree-p factors leaves a
# code of rate close to R
for q, p in ((2, 3), (2, 5), (3, 3)):
    rep = construction_demo(q, p, R=0.5, seed=0)
    print(f"q={q}, p={p}: n={rep.n} = {q}-1 + {rep.s}*{p}; kept {rep.s - rep.s_prime} "
          f"of {rep.s} degree-{p} factors -> [{rep.n},{rep.dim}] code, "
          f"d in [{rep.distance.lower},{rep.distance.upper}], rate {rep.rate:.3f}")

rep = construction_demo(2, 3, R=0.5, seed=0)
print(f"\ncounting at q=2, p=3, alpha=0.5: C(s,s') = {rep.binom_exact} candidate codes, "
      f"log2 divisor bound {rep.lambda_exponent:.3f}, ball volume {rep.ball_exact}")

# the entropy function governs the binomial growth in all of the above
print("\nentropy checkpoints:", [round(entropy(x), 4) for x in (0.1, 0.25, 0.5)])
print("rate+distance cap (no lambda above it can work): q=2 ->",
      plotkin_lambda_cap(2), ", q=4 ->", plotkin_lambda_cap(4))

# the rate-balance exponent decides whether the construction wins asymptotically:
# below the square-root exponent it tends to minus infinity, above it blows up
primes = [11, 17, 23, 31, 41, 53, 61]
print("\nrate-balance exponent along p = 11..61 (q=2, R=0.5):")
for alpha in (0.4, 0.6):
    vals = [r.value for r in f_alpha_sweep(primes, alpha, 2, 0.5)]
    print(f"  alpha={alpha}: " + "  ".join(f"{v:9.3g}" for v in vals))

print("\nball-volume bound at radius n^0.5, n=127, q=2: "
      f"2^{ball_volume_upper(127, 0.5, 2)[1]:.2f}")
print("divisor-count exponent at n=127, p=7, alpha=0.5, R=0.5: "
      f"{lambda_n_bound(127, 7, 0.5, 0.5):.3f}")
