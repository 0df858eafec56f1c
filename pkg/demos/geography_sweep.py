"""
Where the constructions land in the (K^2, chi) plane
====================================================

Sweep admissible pairs, count those the first family reaches, and find pairs
with a prescribed slope K^2/chi.
"""

from collections import Counter
from fractions import Fraction

from maxpicard import geography as geo

rows = geo.sweep(60)
hits = [r for r in rows if r["in_region"]]
print(f"{len(rows)} admissible pairs with chi <= 60, {len(hits)} reached by the first family")

# pairs reached on each line K^2 = 2 chi - 6 + k
by_offset = Counter(r["k2"] - (2 * r["chi"] - 6) for r in hits)
for k in sorted(by_offset)[:8]:
    print(f"  k = {k}: {by_offset[k]} pairs")

# one witness: solve for (n, m, k) and read the invariants back
print("(99, 44) comes from (n, m, k) =", geo.solve_family_a(99, 44))

# every rational slope strictly between 2 and 5/2 is realized
for q in [Fraction(21, 10), Fraction(9, 4), Fraction(12, 5), Fraction(49, 20)]:
    k2, chi, lam = geo.density_witness(q)
    print(f"  slope {q}: (K^2, chi) = ({k2}, {chi})")

# the Horikawa lines
for chi in range(3, 13):
    print(f"  odd line chi = {chi:2d}: {geo.horikawa_coverage(chi, 'odd').source.kind}")
