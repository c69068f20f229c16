"""Lower-bound constructions and their predicted robustness.

Two families matter for q = 1 and q = 2: the sets meeting {1,2,3} twice,
and the lift of the Fano plane.  Their domdodoms follow closed forms; here
they are compared with a direct computation.
"""
from domdodom import beta_fast, design10_lift, f23, fano_lift
from domdodom.constructions import f23_beta_p1, f23_size, fano_beta_p2

for n, k, p in [(10, 4, 0), (12, 4, 1), (12, 5, 2)]:
    F = f23(n, k)
    got = beta_fast(F, p, 1).value
    print(f"f23({n},{k}): {len(F)} sets (predicted {f23_size(n, k)}), "
          f"beta_{p}1 = {got} (predicted {f23_beta_p1(n, k, p)})")

print()
for n, k in [(9, 4), (12, 5), (13, 6)]:
    F, D = fano_lift(n, k), design10_lift(n, k)
    print(f"n={n} k={k}: Fano lift beta_02 = {beta_fast(F, 0, 2).value} "
          f"(predicted {fano_beta_p2(n, k, 0)}), design lift = {beta_fast(D, 0, 2).value}")
