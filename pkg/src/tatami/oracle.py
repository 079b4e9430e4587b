"""Brute-force enumeration of tatami coverings of small rectangles.

This is the ground truth the generators are checked against, so it shares
no code with them beyond the tile data model.  The search fills the first
empty cell in row-major order with a monomino, a horizontal domino or a
vertical domino, and backs out as soon as a lattice point whose four cells
are all placed is touched by four distinct tiles.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Optional

from .grid import Covering, Kind, Tile

MAX_CELLS = 144


class GuardError(RuntimeError):
    """The requested search is larger than the oracle is willing to run."""


class Classify(enum.Enum):
    NONE = "none"
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


@dataclass(frozen=True)
class OracleQuery:
    rows: int
    cols: int
    monomino_count: Optional[int] = None
    require_top_corner_monominoes: bool = False
    classify_by: Classify = Classify.NONE

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("rows and cols must be positive")
        m = self.monomino_count
        if m is not None:
            if m < 0 or m > self.rows * self.cols:
                raise ValueError(f"monomino count {m} does not fit a {self.rows}x{self.cols} grid")
            if (self.rows * self.cols - m) % 2:
                raise ValueError("rows*cols - monomino_count must be even")


def enumerate_coverings(
    q: OracleQuery,
    visit: Optional[Callable[[Covering], None]] = None,
    *,
    allow_large: bool = False,
) -> Counter:
    """Visit every tatami covering matching ``q`` and histogram them.

    The histogram is keyed by the vertical or horizontal domino count, or
    by ``None`` when ``q.classify_by`` is ``Classify.NONE``.  Grids over
    ``MAX_CELLS`` cells raise :class:`GuardError` unless ``allow_large``.
    """
    rows, cols = q.rows, q.cols
    ncell = rows * cols
    if ncell > MAX_CELLS and not allow_large:
        raise GuardError(f"{rows}x{cols} grid exceeds the oracle guard of {MAX_CELLS} cells")

    # Padded board: index r*(cols+2)+c for r in 0..rows+1, c in 0..cols+1.
    # Border cells hold tile id -2 so they never count as a distinct tile,
    # which keeps the boundary of the grid free of checks.
    width = cols + 2
    board = [-2] * ((rows + 2) * width)
    for r in range(1, rows + 1):
        for c in range(1, cols + 1):
            board[r * width + c] = -1
    order = [r * width + c for r in range(1, rows + 1) for c in range(1, cols + 1)]
    corner_left = 1 * width + 1
    corner_right = 1 * width + cols

    mono_target = q.monomino_count
    corners = q.require_top_corner_monominoes
    placed: list[tuple[int, Kind]] = []
    hist: Counter = Counter()
    counts = {"M": 0, "H": 0, "V": 0}

    def bad_corner(p: int) -> bool:
        # p is the top-left cell of a 2x2 block; its lattice point is bad
        # when all four cells are interior, placed, and pairwise distinct.
        a, b, c, d = board[p], board[p + 1], board[p + width], board[p + width + 1]
        if a < 0 or b < 0 or c < 0 or d < 0:
            return False
        return a != b and a != c and a != d and b != c and b != d and c != d

    def touched_bad(cells: tuple[int, ...]) -> bool:
        for x in cells:
            for p in (x - width - 1, x - width, x - 1, x):
                if bad_corner(p):
                    return True
        return False

    def emit():
        key = None
        if q.classify_by is Classify.VERTICAL:
            key = counts["V"]
        elif q.classify_by is Classify.HORIZONTAL:
            key = counts["H"]
        hist[key] += 1
        if visit is not None:
            tiles = [Tile(p // width, p % width, kind) for p, kind in placed]
            visit(Covering(rows, cols, tiles))

    def search(idx: int, filled: int):
        while idx < ncell and board[order[idx]] != -1:
            idx += 1
        if idx == ncell:
            if mono_target is None or counts["M"] == mono_target:
                emit()
            return
        p = order[idx]
        tid = len(placed)
        remaining = ncell - filled

        must_mono = corners and (p == corner_left or p == corner_right)
        # monomino
        if mono_target is None or counts["M"] < mono_target:
            board[p] = tid
            if not touched_bad((p,)):
                placed.append((p, Kind.MONOMINO))
                counts["M"] += 1
                search(idx + 1, filled + 1)
                counts["M"] -= 1
                placed.pop()
            board[p] = -1
        if must_mono:
            return
        if mono_target is not None and mono_target - counts["M"] > remaining - 2:
            # dominoes here would leave too few cells for the monominoes owed
            return
        # horizontal domino
        q2 = p + 1
        if board[q2] == -1 and not (corners and q2 == corner_right):
            board[p] = board[q2] = tid
            if not touched_bad((p, q2)):
                placed.append((p, Kind.HDOMINO))
                counts["H"] += 1
                search(idx + 2, filled + 2)
                counts["H"] -= 1
                placed.pop()
            board[p] = board[q2] = -1
        # vertical domino
        q2 = p + width
        if board[q2] == -1:
            board[p] = board[q2] = tid
            if not touched_bad((p, q2)):
                placed.append((p, Kind.VDOMINO))
                counts["V"] += 1
                search(idx + 1, filled + 2)
                counts["V"] -= 1
                placed.pop()
            board[p] = board[q2] = -1

    search(0, 0)
    return hist


def total(hist: Counter) -> int:
    return sum(hist.values())


def square_query(n: int) -> OracleQuery:
    """Query for the n x n coverings with n monominoes, two in the top corners.

    Even n is classified by vertical dominoes and odd n by horizontal ones,
    the statistic that the symbolic set counts in each case.
    """
    by = Classify.VERTICAL if n % 2 == 0 else Classify.HORIZONTAL
    return OracleQuery(n, n, monomino_count=n, require_top_corner_monominoes=True, classify_by=by)


_vd_cache: dict[int, Counter] = {}


def oracle_histogram(n: int) -> Counter:
    if n not in _vd_cache:
        if n > (8 if n % 2 == 0 else 7):
            raise GuardError(f"oracle_vd is limited to n <= 8 (even) or n <= 7 (odd), got {n}")
        _vd_cache[n] = enumerate_coverings(square_query(n))
    return _vd_cache[n]


def oracle_vd(n: int, k: int) -> int:
    return oracle_histogram(n).get(k, 0)
