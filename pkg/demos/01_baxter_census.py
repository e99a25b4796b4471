"""
Involutive Baxter permutations by brute force
=============================================

Generate involutions, keep the Baxter ones, and tabulate them by the
profile (n, k, p, r).
"""

from invbaxter.perm_core import (
    descent_profile,
    enumerate_baxter,
    involutive_baxter,
    is_baxter,
    profile,
    profile_census,
)

# 2413 and 3142 are the smallest non-Baxter permutations
for word in [(2, 4, 1, 3), (3, 1, 4, 2), (2, 1, 4, 3)]:
    print(word, "Baxter" if is_baxter(word) else "not Baxter")

print("Baxter numbers:", [sum(1 for _ in enumerate_baxter(m)) for m in range(1, 9)])

# descents of 321: neither crosses the diagonal, so k = 1
print(descent_profile((3, 2, 1)), profile((3, 2, 1)))

for perm in involutive_baxter(4):
    print(perm, tuple(profile(perm)))

print()
print(" n  k  p  r  count")
for prof, count in profile_census(8).items():
    print(f"{prof.n:2d} {prof.k:2d} {prof.p:2d} {prof.r:2d}  {count}")
