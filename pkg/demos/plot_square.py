"""
Square coverings with n monominoes
==================================

List the coverings of the 8 x 8 grid with 7 vertical dominoes and draw two.
"""

from pathlib import Path

from tatami.grid import render_ascii, render_svg, validate_tatami
from tatami.square import count_vd, gen_vh, max_k, render_square, serialize_vh

n, k = 8, 7
found = []
gen_vh(n, k, found.append)
print(len(found), "coverings; closed form says", count_vd(n, k))
for e in found[:6]:
    print(serialize_vh(e))

# each symbolic element is a real tiling; the first two form a mirror pair
for e in found[:2]:
    tiling = render_square(e, n)
    print()
    print(render_ascii(tiling), end="")
    print("tatami:", validate_tatami(tiling).valid)

Path("vd_8_7_first.svg").write_text(render_svg(render_square(found[0], n)))

# how the 8 x 8 coverings spread over the vertical-domino count
print([count_vd(n, k) for k in range(max_k(n) + 1)])
