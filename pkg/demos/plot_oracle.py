"""
Brute-force cross-check
=======================

Backtracking search over every tatami covering of a small grid, compared
with the closed-form counts.
"""

from tatami.oracle import OracleQuery, enumerate_coverings, square_query, total
from tatami.square import count_vd

for n in range(3, 8):
    hist = enumerate_coverings(square_query(n))
    agree = all(hist.get(k, 0) == count_vd(n, k) for k in range(n * n))
    print(n, total(hist), "histogram agrees:", agree)

# a domino-only tatami covering of 10 x 13 does not exist
print("10x13:", total(enumerate_coverings(OracleQuery(10, 13, 0))))
