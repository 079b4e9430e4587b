"""
Coverings of an infinite strip
==============================

Feature sequences on a strip of height r, counted and drawn.
"""

from tatami.strip import count_strip, feature_alphabet, gen_strip, render_strip_schematic

r = 3
for f in feature_alphabet(r):
    print(f.code, f.label(), f.left_bond.value, "->", f.right_bond.value)

# V and H split the count by the bond at the far left
for n in range(6):
    print(n, count_strip(r, n))

shown = []
gen_strip(r, 2, shown.append, limit=3)
for s in shown:
    print()
    print(render_strip_schematic(s), end="")

# counting without a callback runs the compiled traversal
print(gen_strip(4, 8), "==", count_strip(4, 8)[2])
