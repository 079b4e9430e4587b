"""Finite-feature tatami coverings of the infinite strip of height r.

Up to horizontal translation a strip covering is its left-to-right list of
features.  Each feature has a bond (vertical or horizontal brick pattern)
on either side, and consecutive features must agree on the bond between
them.  Of the 4r features on a height-r strip, 4r - 2 have vertical bond on
their left and 2 (the SE and NE loners) have horizontal bond there; the NW
and SW loners switch vertical bond back to horizontal.  That census gives

    V(n) = 4(r-1) V(n-1) + 2 H(n-1),  H(n) = 2 V(n-1),  V(0) = H(0) = 1,

for the coverings whose leftmost region is vertical (V) or horizontal (H)
bond, and R(r, n) = V(n) + H(n).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

import numba
import numpy as np

from .instrument import OpCounter, StopTraversal


class Bond(enum.Enum):
    VERTICAL = "V"
    HORIZONTAL = "H"


class FeatureKind(enum.Enum):
    V_BIDIMER = "vertical bidimer"
    H_BIDIMER = "horizontal bidimer"
    CW_VORTEX = "clockwise vortex"
    CCW_VORTEX = "counterclockwise vortex"
    VEE_TOP = "top vee"
    VEE_BOTTOM = "bottom vee"
    LONER_NE = "NE loner"
    LONER_NW = "NW loner"
    LONER_SE = "SE loner"
    LONER_SW = "SW loner"


_V, _H = Bond.VERTICAL, Bond.HORIZONTAL
_BONDS = {
    FeatureKind.LONER_SE: (_H, _V),
    FeatureKind.LONER_NE: (_H, _V),
    FeatureKind.LONER_SW: (_V, _H),
    FeatureKind.LONER_NW: (_V, _H),
}
# NE/NW loners sit on the bottom edge, SE/SW on the top edge
_BOUNDARY = {
    FeatureKind.VEE_TOP: "top",
    FeatureKind.VEE_BOTTOM: "bottom",
    FeatureKind.LONER_NE: "bottom",
    FeatureKind.LONER_NW: "bottom",
    FeatureKind.LONER_SE: "top",
    FeatureKind.LONER_SW: "top",
}


@dataclass(frozen=True)
class Feature:
    kind: FeatureKind
    position: Optional[int]
    code: int

    @property
    def left_bond(self) -> Bond:
        return _BONDS.get(self.kind, (_V, _V))[0]

    @property
    def right_bond(self) -> Bond:
        return _BONDS.get(self.kind, (_V, _V))[1]

    @property
    def boundary(self) -> Optional[str]:
        return _BOUNDARY.get(self.kind)

    def label(self) -> str:
        pos = "" if self.position is None else f"@{self.position}"
        return f"{self.kind.value}{pos}"


def _check_height(r: int):
    if r < 2:
        raise ValueError(f"strip height must be at least 2, got {r}")


def feature_alphabet(r: int) -> list[Feature]:
    """The 4r features of a height-r strip, coded kind-major, position-minor."""
    _check_height(r)
    layout = [
        (FeatureKind.V_BIDIMER, range(1, r)),
        (FeatureKind.H_BIDIMER, range(1, r)),
        (FeatureKind.CW_VORTEX, range(1, r - 1)),
        (FeatureKind.CCW_VORTEX, range(1, r - 1)),
        (FeatureKind.VEE_TOP, [None]),
        (FeatureKind.VEE_BOTTOM, [None]),
        (FeatureKind.LONER_NE, [None]),
        (FeatureKind.LONER_NW, [None]),
        (FeatureKind.LONER_SE, [None]),
        (FeatureKind.LONER_SW, [None]),
    ]
    out = []
    for kind, positions in layout:
        for pos in positions:
            out.append(Feature(kind, pos, len(out)))
    return out


@dataclass(frozen=True)
class StripCovering:
    r: int
    features: tuple[Feature, ...]
    leftmost_bond: Bond

    def __post_init__(self):
        bond = self.leftmost_bond
        for f in self.features:
            if f.left_bond is not bond:
                raise ValueError(f"{f.label()} needs {f.left_bond.name.lower()} bond on its left")
            bond = f.right_bond

    @property
    def codes(self) -> tuple[int, ...]:
        return tuple(f.code for f in self.features)

    @property
    def rightmost_bond(self) -> Bond:
        return self.features[-1].right_bond if self.features else self.leftmost_bond


def count_strip(r: int, n: int) -> tuple[int, int, int]:
    """``(V_r(n), H_r(n), R(r, n))``."""
    _check_height(r)
    if n < 0:
        raise ValueError(f"feature count must be non-negative, got {n}")
    v, h = 1, 1
    for _ in range(n):
        v, h = 4 * (r - 1) * v + 2 * h, 2 * v
    return v, h, v + h


def gen_strip(
    r: int,
    n: int,
    visit: Optional[Callable[[StripCovering], None]] = None,
    counter: Optional[OpCounter] = None,
    limit: Optional[int] = None,
) -> int:
    """Visit every strip covering with exactly ``n`` features; return the count.

    Sequences are grown left to right, trying only the features whose left
    bond matches the bond at the current right end.  Vertically-bonded
    coverings come first, then horizontally-bonded ones, each in code order.

    Without a ``visit`` callback the same traversal runs as a compiled
    loop, which is what makes counting-only runs over 10^9 leaves feasible.
    """
    alphabet = feature_alphabet(r)
    if n < 0:
        raise ValueError(f"feature count must be non-negative, got {n}")
    after = {
        _V: [f for f in alphabet if f.left_bond is _V],
        _H: [f for f in alphabet if f.left_bond is _H],
    }
    if visit is None:
        produced, steps = _traverse_compiled(after, n, -1 if limit is None else limit)
    else:
        produced, steps = _traverse(r, n, after, visit, limit)
    if counter is not None:
        counter.steps += steps
        counter.outputs += produced
        counter.preprocessing += len(alphabet)
    return produced


def _traverse(r, n, after, visit, limit):
    buf: list[Feature] = []
    produced = 0
    steps = 0
    left = _V

    def emit():
        nonlocal produced
        produced += 1
        if visit is not None:
            visit(StripCovering(r, tuple(buf), left))
        if produced == limit:
            raise StopTraversal

    def rec(bond: Bond, depth: int):
        nonlocal steps
        steps += 1
        if depth == n:
            emit()
            return
        for f in after[bond]:
            steps += 1
            buf.append(f)
            rec(f.right_bond, depth + 1)
            buf.pop()

    try:
        for left in (_V, _H):
            rec(left, 0)
    except StopTraversal:
        if produced != limit:
            raise
    return produced, steps


def _traverse_compiled(after, n, limit):
    # bonds as 0 (vertical) / 1 (horizontal); succ[b, j] is the right bond
    # of the j-th feature allowed after bond b
    width = max(len(after[_V]), len(after[_H]))
    succ = np.zeros((2, width), dtype=np.int64)
    nsucc = np.zeros(2, dtype=np.int64)
    for b, bond in enumerate((_V, _H)):
        nsucc[b] = len(after[bond])
        for j, f in enumerate(after[bond]):
            succ[b, j] = 0 if f.right_bond is _V else 1
    produced, steps = _dfs_kernel(succ, nsucc, n, limit)
    return int(produced), int(steps)


@numba.njit(cache=True)
def _dfs_kernel(succ, nsucc, n, limit):
    produced = 0
    steps = 0
    bond_at = np.zeros(n + 1, dtype=np.int64)
    idx = np.zeros(n + 1, dtype=np.int64)
    for left in range(2):
        bond_at[0] = left
        idx[0] = 0
        steps += 1
        depth = 0
        while depth >= 0:
            if depth == n:
                produced += 1
                if produced == limit:
                    return produced, steps
                depth -= 1
                continue
            b = bond_at[depth]
            j = idx[depth]
            if j < nsucc[b]:
                idx[depth] = j + 1
                steps += 2
                depth += 1
                bond_at[depth] = succ[b, j]
                idx[depth] = 0
            else:
                depth -= 1
    return produced, steps


BRUTE_LIMIT = 10**7


def brute_filter_count(r: int, n: int) -> int:
    """Count adjacency-valid code sequences by trying all (4r)^n of them."""
    alphabet = feature_alphabet(r)
    if n < 0:
        raise ValueError(f"feature count must be non-negative, got {n}")
    if len(alphabet) ** n > BRUTE_LIMIT:
        raise OverflowError(f"(4r)^n = {len(alphabet) ** n} exceeds the brute-force guard {BRUTE_LIMIT}")
    if n == 0:
        return 2
    base = len(alphabet)
    left = np.array([f.left_bond is _H for f in alphabet])
    right = np.array([f.right_bond is _H for f in alphabet])
    total = 0
    chunk = 1 << 20
    for start in range(0, base**n, chunk):
        seq = np.arange(start, min(start + chunk, base**n), dtype=np.int64)
        digits = [(seq // base**j) % base for j in range(n)]
        ok = np.ones(len(seq), dtype=bool)
        for a, b in zip(digits, digits[1:]):
            ok &= right[a] == left[b]
        total += int(ok.sum())
    return total


# -- text forms --------------------------------------------------------------


def format_strip(s: StripCovering) -> str:
    return f"bond:{s.leftmost_bond.value} ; " + ",".join(map(str, s.codes))


def parse_strip(text: str, r: int) -> StripCovering:
    head, _, tail = text.partition(";")
    head = head.strip()
    if not head.startswith("bond:"):
        raise ValueError(f"bad strip line: {text!r}")
    bond = Bond(head[len("bond:"):].strip())
    alphabet = feature_alphabet(r)
    codes = [int(x) for x in tail.split(",") if x.strip()]
    for c in codes:
        if not 0 <= c < len(alphabet):
            raise ValueError(f"feature code {c} outside 0..{len(alphabet) - 1}")
    return StripCovering(r, tuple(alphabet[c] for c in codes), bond)


_FILL = {_V: "|", _H: "="}
_GLYPH = {
    FeatureKind.V_BIDIMER: "B",
    FeatureKind.H_BIDIMER: "b",
    FeatureKind.CW_VORTEX: "W",
    FeatureKind.CCW_VORTEX: "w",
    FeatureKind.VEE_TOP: "V",
    FeatureKind.VEE_BOTTOM: "A",
    FeatureKind.LONER_NE: "/",
    FeatureKind.LONER_NW: "\\",
    FeatureKind.LONER_SE: "\\",
    FeatureKind.LONER_SW: "/",
}


def _glyph_rows(f: Feature, r: int) -> set[int]:
    if f.kind in (FeatureKind.V_BIDIMER, FeatureKind.H_BIDIMER):
        return {f.position, f.position + 1}
    if f.kind in (FeatureKind.CW_VORTEX, FeatureKind.CCW_VORTEX):
        return {f.position, f.position + 1, f.position + 2}
    return {1} if f.boundary == "top" else {r}


def render_strip_schematic(s: StripCovering, margin: int = 3) -> str:
    """Schematic of a strip covering, one text line per strip row.

    Bond regions are drawn as ``|`` (vertical) or ``=`` (horizontal),
    ``margin`` columns wide at each end and between features.  Each feature
    is one column: its glyph on the rows it occupies, bond fill elsewhere,
    or ``:`` where the bond changes across a loner.
    """
    if margin < 1:
        raise ValueError("margin must be at least 1")
    StripCovering(s.r, s.features, s.leftmost_bond)  # re-check adjacency
    r = s.r
    rows = [[] for _ in range(r)]

    def fill(bond: Bond):
        for line in rows:
            line.append(_FILL[bond] * margin)

    fill(s.leftmost_bond)
    for f in s.features:
        occupied = _glyph_rows(f, r)
        other = _FILL[f.left_bond] if f.left_bond is f.right_bond else ":"
        for row in range(1, r + 1):
            rows[row - 1].append(_GLYPH[f.kind] if row in occupied else other)
        fill(f.right_bond)
    return "".join("".join(line) + "\n" for line in rows)
