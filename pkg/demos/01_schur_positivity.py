"""How rare is Schur positivity among monomial-positive symmetric functions?

Walks through degree 3 by hand, then prints how quickly the probability
collapses as the degree grows.
"""
from posprob import build, coefficient_sums, kostka, partitions_of, probability
from posprob.tableaux import kostka_matrix

# The Schur-to-monomial expansion is the Kostka matrix, lower unitriangular
# when partitions are listed in lexicographic order.
n = 3
labels = partitions_of(n)
print("partitions of 3:", labels)
for lam, row in zip(labels, kostka_matrix(n)):
    print(f"  s_{lam} =", " + ".join(f"{c} m_{mu}" for c, mu in zip(row, labels) if c))

# s_(2,1) = m_(2,1) + 2 m_(1,1,1): two SSYT of shape (2,1) with content (1,1,1)
print("K_(2,1),(1,1,1) =", kostka((2, 1), (1, 1, 1)))

# Each basis element contributes the reciprocal of its coefficient sum.
m = build("s/m", n)
print("coefficient sums:", coefficient_sums(m))
print("P_3(s | m) =", probability(m).value)

# Compare to the e/s and e/m settings in the same degree.
for pair in ("h/s", "e/s", "e/m"):
    r = probability(build(pair, 3))
    print(f"P_3({pair}) = {r.fraction}   factors {r.factors}")

print("\n n   P_n(s | m)")
for n in range(1, 11):
    r = probability(build("s/m", n))
    print(f"{n:>2}   {r.decimal}")
