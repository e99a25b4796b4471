"""
Head-swap involution on diagonal triples
========================================

Triples whose outer paths end one unit apart (class V) are matched with
triples where the middle path touches exactly one outer path. The match
exchanges the heads of two paths at their first meeting point.
"""

from invbaxter.closed_forms import b_fpf, s_count, u_count
from invbaxter.path_swap import (
    DiagonalTriple,
    class_size,
    classify,
    enumerate_class,
    first_meeting,
    swap_shat_to_v,
    swap_v_to_shat,
)

t = DiagonalTriple.from_words("LRR", "RRR", "RLL")
print(t.words, classify(t))
print("first meeting:", first_meeting(t))
img = swap_v_to_shat(t)
print("after swap:", img.words, "in S:", classify(img).in_S)
print("swap back:", swap_shat_to_v(img).words)

print()
print(" n   |R|   |S|   |U|   |V|    b_n   u_n   2 s_n")
for n in range(1, 8):
    r, s, u = (class_size(n, c) for c in ("R", "S", "U"))
    v = sum(1 for _ in enumerate_class(n, "V"))
    print(f"{n:2d} {r:5d} {s:5d} {u:5d} {v:5d} {b_fpf(n):6d} {u_count(n):5d} {2 * s_count(n):7d}")
