"""Quasisymmetric Schur, fundamental, and monomial bases.

Compositions are ordered by their sorted partition first, then
lexicographically. In that order all three expansions are unitriangular.
"""
from posprob import build, compositions_of, probability
from posprob.tableaux import iter_ssct, non_single_sct_shapes, sct_total, ssct_row_sum
from posprob.probability import fm_closed_form

print("compositions of 4:", [tuple(a) for a in compositions_of(4)])

# SSCT of shape (1,2): the only one with content (1,1,1) is [1 / 3 2]
print("SSCT of shape (1,2), content (1,1,1):", list(iter_ssct((1, 2), (1, 1, 1))))

comps3 = list(reversed(compositions_of(3)))
print("SSCT row sums at n=3:", {tuple(a): ssct_row_sum(a) for a in comps3})
print("SCT totals at n=3:  ", {tuple(a): sct_total(a) for a in comps3})

for pair in ("qs/M", "qs/F", "F/M"):
    print(f"P_3({pair}) =", probability(build(pair, 3)).fraction)

# Shapes with more than one SCT: these drive P(S | F) to zero.
for n in range(4, 9):
    family = non_single_sct_shapes(n)
    print(f"n={n}: {len(family)} shapes with >1 SCT (bound 2^(n-3) = {2 ** (n - 3)})")

# F in M: every composition has 2^(n-1-|set|) refinements, so the product
# of the sums is 2^((n-1) 2^(n-2)).
for n in range(2, 8):
    p = probability(build("F/M", n)).value
    print(f"n={n}: P(F | M) = 1/2^{p.denominator.bit_length() - 1}", p == fm_closed_form(n))
