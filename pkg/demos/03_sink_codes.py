"""
Sink codes
==========

Marked sink-corners and sink-edges become a short walk plus a list of
weights. Decoding reverses it exactly.
"""

from collections import Counter

from invbaxter.sink_code import (
    SinkDecoration,
    decode,
    encode,
    enumerate_codes,
    enumerate_decorations,
    markable_edges,
)

d = SinkDecoration.from_strings("10", "100")
print("markable edges for corners 10:", sorted(markable_edges(d.corner_marks)))
code = encode(d)
print("code:", code)
print("decoded back:", decode(code, d.i).to_strings())

# every decoration with 5 corners, grouped by marked edges/corners
stats = Counter((x.p, x.q) for x in enumerate_decorations(5))
print(dict(sorted(stats.items())))

# decorations and codes are equinumerous for every corner count
for i in range(9):
    print(i, sum(1 for _ in enumerate_decorations(i)), sum(1 for _ in enumerate_codes(i)))
