"""
Closed forms
============

Exact evaluation of the counting formulas, far beyond brute-force range.
"""

from invbaxter.closed_forms import a_multi, b_fpf, feasible_profiles, s_count, u_count

for n in (1, 2, 3, 10, 50):
    print(n, b_fpf(n), u_count(n) - s_count(n))

# fixed-point-free permutations of size 20, split by (k, r)
n = 10
table = {(prof.k, prof.r): a_multi(prof) for prof in feasible_profiles(n, 0)}
print({kr: v for kr, v in table.items() if v})
print(sum(table.values()), "==", b_fpf(n))

# with fixed points the weights come in: profile (6, 2, 4, 3)
print(a_multi((6, 2, 4, 3)))
