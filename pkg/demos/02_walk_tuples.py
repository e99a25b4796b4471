"""
Non-intersecting walk triples
=============================

Each involutive Baxter permutation with profile (n, k, p, r) matches a
triple of vertex-disjoint East/North walks plus a weight sequence. The
triples are counted by a 3x3 determinant of binomials.
"""

from invbaxter.perm_core import ParameterProfile, profile_census
from invbaxter.sink_code import strip_decoration
from invbaxter.walks import (
    TUPLE_STARTS,
    enumerate_walk_tuples,
    lgv_matrix,
    tuple_ends,
    walk_tuple_count,
)

prof = ParameterProfile(n=2, k=1, p=1, r=1)
ends = tuple_ends(prof)
print("starts", TUPLE_STARTS)
print("ends  ", ends)
print("matrix", lgv_matrix(TUPLE_STARTS, ends))

tuples = list(enumerate_walk_tuples(prof))
for t in tuples:
    print(f"  W1={t.w1.steps or '-':4s} W2={t.w2.steps or '-':4s} W3={t.w3.steps or '-':4s} S={t.s}")

census = profile_census(2 * prof.n + prof.p)
print("tuples:", len(tuples), " determinant route:", walk_tuple_count(prof), " census:", census[prof])

# The third walk carries the sink decoration; peel it off and look.
t = tuples[0]
w3, decoration = strip_decoration(t)
print("undecorated third walk:", w3.steps)
print("corner/edge marks:", decoration.to_strings())
