"""Three independent routes to the same probability.

1. the product of reciprocal coefficient sums,
2. the ratio of simplex volumes via exact determinants,
3. Monte Carlo sampling of the B-simplex with exact membership tests.
"""
from posprob import build, membership, monte_carlo, probability, volume_ratio_by_determinant
from posprob.geometry import a_coordinates

m = build("s/m", 3)
# m_(2,1) is monomial-positive but not Schur-positive: m_(2,1) = s_(2,1) - 2 s_(1,1,1)
print("Schur coordinates of m_(2,1):", a_coordinates(m, [0, 1, 0]))
print("m_(2,1) Schur-positive?", membership(m, [0, 1, 0]))

for pair in ("s/m", "h/s", "e/m", "qs/M", "qs/F", "F/M"):
    for n in (3, 4):
        m = build(pair, n)
        exact = probability(m).value
        det = volume_ratio_by_determinant(m)
        mc = monte_carlo(m, samples=50_000, seed=1, exact=exact)
        print(f"{pair:>5} n={n}: exact {str(exact):>9}  det {str(det):>9}  "
              f"MC {mc.estimate:.5f} +/- {mc.standard_error:.5f}  within 3 sigma: {mc.within()}")
