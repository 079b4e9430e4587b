"""
Subsets with a fixed sum
========================

Walk the subsets of {1..n} summing to k with a reusable linked-array state.
"""

from tatami.instrument import OpCounter
from tatami.ksum import count_ksum, format_subset, gen_ksum, init_c4

# one state serves every k for the same n
n = 10
state = init_c4(n)
gen_ksum(state, n, 12, lambda v: print(format_subset(v)))

# the state is back in its empty form, so reuse it straight away
print("k=20:", gen_ksum(state, n, 20), "subsets, expected", count_ksum(n, 20))

# steps per subset stay small however large the output gets
oc = OpCounter()
gen_ksum(init_c4(25), 25, 160, counter=oc, limit=100000)
print(f"{oc.outputs} subsets, {oc.steps} steps, {oc.ratio:.2f} steps each")
